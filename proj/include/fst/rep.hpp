#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "fst/group.hpp"

namespace fst {

/// A unitary representation of a subgroup K by explicit complex matrices,
/// one per element of K (indexed by the member rank of the subgroup).
struct UnitaryRep {
    Subgroup sub;
    int dim = 0;
    std::vector<Eigen::MatrixXcd> mats;

    const Eigen::MatrixXcd& mat(int g) const { return mats[sub.rank(g)]; }
    int order() const { return sub.size(); }
};

struct SchurResult {
    enum class Relation { Same, Inequivalent };
    Relation relation;
    double residual;  // max deviation over all index quadruples from the target
};

/// Checks identity/unitarity/homomorphism and returns the rep.
/// mats are indexed by the member rank of k. The identity matrix is
/// snapped to an exact identity after validation so that induced
/// operators at the group identity come out exact.
UnitaryRep validate_unitary_rep(const FiniteGroup& g, const Subgroup& k,
                                std::vector<Eigen::MatrixXcd> mats,
                                double tol = 1e-9);

/// Entrywise complex conjugate; again a valid unitary rep.
UnitaryRep conjugate_rep(const UnitaryRep& rep);

/// <L_k xi_j, xi_i>, an entry lookup in the standard basis. 0-based indices.
std::complex<double> matrix_coefficient(const UnitaryRep& rep, int k, int i, int j);

/// chi(k) = trace of the matrix at k, indexed by member rank.
std::vector<std::complex<double>> character(const UnitaryRep& rep);

/// sum_k nu |chi(k)|^2; equals 1 iff irreducible.
double irreducibility_index(const UnitaryRep& rep);

bool is_irreducible(const UnitaryRep& rep, double tol = 1e-9);

/// Weyl averaging T = sum_k nu M(k) X L(k)^-1 for random X; returns the
/// intertwiner when it is invertible and intertwines to tol, otherwise
/// nullopt after `retries` fresh seeds.
std::optional<Eigen::MatrixXcd> equivalence_check(const UnitaryRep& l, const UnitaryRep& m,
                                                  double tol = 1e-9, int retries = 3,
                                                  std::uint64_t seed = 0x5eed5eedULL);

/// Orthogonality integrals sum_k nu L_ij(k) conj(M_lm(k)) checked against
/// delta_il delta_jm / d (same rep) or 0 (inequivalent reps). Both reps
/// must be irreducible; equivalent-but-distinct pairs have no target in
/// the orthogonality relations and are rejected.
SchurResult schur_check(const UnitaryRep& l, const UnitaryRep& m, double tol = 1e-9);

/// Block-diagonal direct sum (test helper for reducible examples).
UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b);

}  // namespace fst
