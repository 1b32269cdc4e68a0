#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "fst/catalog.hpp"
#include "fst/group.hpp"
#include "fst/rep.hpp"

namespace fst {

/// Immutable bundle of a group, a subgroup, its coset decomposition and
/// the measure weights. Shared by everything built on top of one (G, K).
struct GroupSystem {
    FiniteGroup group;
    Subgroup sub;
    CosetStructure cosets;
    HaarWeights weights;

    static std::shared_ptr<const GroupSystem> make(FiniteGroup g,
                                                   const std::vector<int>& generators);
    static std::shared_ptr<const GroupSystem> make(FiniteGroup g, Subgroup k);
};

/// A function u : G -> C^d with u(gk) = sigma(k^-1) u(g).
struct EquivariantFunction {
    int dim = 0;
    std::vector<Eigen::VectorXcd> values;  // indexed by group element

    const Eigen::VectorXcd& operator()(int g) const { return values[g]; }
};

/// Coefficient table alpha_{i,s}(g): component s of the i-th basis
/// function at g.
struct AlphaTable {
    int basis_size = 0;
    int dim = 0;
    int order = 0;
    std::vector<std::complex<double>> data;  // [i][s][g]

    std::complex<double> operator()(int i, int s, int g) const {
        return data[(static_cast<std::size_t>(i) * dim + s) * order + g];
    }
};

/// The representation of G induced by sigma on K, realized on the
/// canonical orthonormal basis theta_{(r,s)}(g) = [g in g_r K] *
/// sigma((g_r^-1 g)^-1) xi_s, ordered row-major by (coset, sigma index).
class InducedRep {
  public:
    InducedRep(std::shared_ptr<const GroupSystem> system, UnitaryRep sigma, std::string label);

    const GroupSystem& system() const { return *system_; }
    std::shared_ptr<const GroupSystem> system_ptr() const { return system_; }
    const UnitaryRep& sigma() const { return sigma_; }
    const std::string& label() const { return label_; }
    int dim() const { return dim_; }           // N = [G:K] d_sigma
    int d_sigma() const { return sigma_.dim; }
    bool source_irreducible() const { return source_irreducible_; }

    /// The basis function theta_i as an explicit equivariant function.
    const EquivariantFunction& basis(int i) const { return basis_[i]; }

    /// N x N matrix of U_t on the canonical basis; memoized per element
    /// behind a mutex so concurrent fills are safe and deterministic.
    const Eigen::MatrixXcd& operator_at(int t) const;

    /// Character chi(t) = tr U_t and its normalized squared norm
    /// (1 iff the induced representation is irreducible).
    std::complex<double> character_at(int t) const;
    double character_norm() const;
    bool irreducible(double tol = 1e-9) const;

  private:
    struct OpCache {
        std::mutex mutex;
        std::unordered_map<int, Eigen::MatrixXcd> map;
    };

    std::shared_ptr<const GroupSystem> system_;
    UnitaryRep sigma_;
    std::string label_;
    int dim_;
    bool source_irreducible_;
    std::vector<EquivariantFunction> basis_;
    std::shared_ptr<OpCache> opcache_;  // shared across copies; entries are deterministic

    Eigen::MatrixXcd build_operator(int t) const;
};

/// Builds the induced representation. Reducible sigma is accepted (the
/// source_irreducible flag records it); only the orthogonality claims
/// need the irreducibility hypothesis.
InducedRep induce(std::shared_ptr<const GroupSystem> system, UnitaryRep sigma,
                  std::string label = "sigma");

Eigen::MatrixXcd induced_operator(const InducedRep& u, int t);

/// u_ij(t) = <U_t theta_j, theta_i>, evaluated through the basis
/// functions and the quotient inner product (independent of the operator
/// cache; the two routes are cross-checked in the tests).
std::complex<double> induced_coefficient(const InducedRep& u, int t, int i, int j);

/// Averages eta over K into an equivariant function:
/// u_eta(g) = sum_k nu sigma(k) eta(gk). Idempotent on equivariant input.
EquivariantFunction project_equivariant(const GroupSystem& system, const UnitaryRep& sigma,
                                        const std::function<Eigen::VectorXcd(int)>& eta);

/// Maximum violation of the equivariance identity for a candidate.
double equivariance_residual(const GroupSystem& system, const UnitaryRep& sigma,
                             const EquivariantFunction& u);

AlphaTable alpha(const InducedRep& u);

/// Orthogonality tensor for the coefficient functions, evaluated through
/// the alpha table:
///   c_ijlm = d_sigma sum_t lambda [sum_g mu <theta_j(t^-1 g), theta_i(g)>]
///                                 conj[sum_h mu <theta_m(t^-1 h), theta_l(h)>]
/// The inner sums run over coset representatives. Satisfies
/// int_G u_ij conj(u_lm) dlambda = c_ijlm / d_sigma for every induction,
/// and c_ijlm = delta_il delta_jm whenever U is irreducible.
std::complex<double> c_tensor(const InducedRep& u, int i, int j, int l, int m);

struct OrthogonalityReport {
    bool same_sigma;             // the two inductions come from the same sigma label
    bool inductions_equivalent;  // character inner product > 0
    bool u_irreducible, v_irreducible;
    double max_c_contract_residual;  // |integral - c/d| over quadruples (same sigma only)
    double max_delta_residual;       // |c - delta pattern| (same sigma, irreducible only)
    double max_cross_integral;       // sup |int u_ij conj(v_lm)| (distinct sigma only)
};

/// Runs every orthogonality claim for a pair of inductions over the same
/// (G, K). Cross-sigma integrals are reported, never asserted: distinct
/// sigma can induce equivalent representations, in which case the
/// vanishing claim fails.
OrthogonalityReport induced_orthogonality_check(const InducedRep& u, const InducedRep& v);

}  // namespace fst
