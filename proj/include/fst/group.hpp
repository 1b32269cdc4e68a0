#pragma once

#include <boost/rational.hpp>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "fst/errors.hpp"

namespace fst {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// A finite group given by its full multiplication table.
/// table[a][b] is the index of a*b; elements are 0..order-1.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table;
    int identity = 0;
    std::vector<int> inverse;
    std::string name;

    int mul(int a, int b) const { return table[a][b]; }
    int inv(int a) const { return inverse[a]; }

    /// Order of a single element (smallest m >= 1 with a^m = e).
    int element_order(int a) const;
};

/// Subgroup of a parent group, stored as an ordered member list
/// (BFS from the identity, ascending generator index) plus the
/// inverse map from element index to position in that list.
struct Subgroup {
    std::vector<int> members;
    std::vector<int> member_rank;  // -1 for non-members

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int g) const { return member_rank[g] >= 0; }
    int rank(int g) const { return member_rank[g]; }
};

/// Left-coset decomposition G = union of g_r K. reps[0] is the identity;
/// the remaining representatives are the minimal element index of their
/// coset, listed ascending. factor[g] = (r, k) with g = g_r * k, k in K.
struct CosetStructure {
    std::vector<int> reps;
    std::vector<std::pair<int, int>> factor;

    int index() const { return static_cast<int>(reps.size()); }
    int coset_of(int g) const { return factor[g].first; }
};

/// The three measure weights: nu on K (normalized, nu(K)=1), mu on G/K
/// (counting), lambda = mu x nu on G. Kept as exact rationals; convert
/// to double only at summation call sites.
struct HaarWeights {
    Rational nu{1, 1};
    Rational mu{1, 1};
    Rational lambda{1, 1};

    double nu_d() const { return to_double(nu); }
    double mu_d() const { return to_double(mu); }
    double lambda_d() const { return to_double(lambda); }
};

/// Validates a multiplication table and builds the group.
/// Throws NotLatinSquare / NoIdentity / NotAssociative with the violating
/// indices. Order is capped at 256 so the exhaustive associativity sweep
/// stays affordable.
FiniteGroup validate_group(const std::vector<std::vector<int>>& table,
                           const std::string& name = "");

/// Smallest subgroup containing the generators (BFS from identity,
/// ascending generator index tie-break).
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators);

/// Left-coset decomposition with the deterministic representative rule.
CosetStructure coset_decompose(const FiniteGroup& g, const Subgroup& k);

/// nu = 1/|K|, mu = 1, lambda = 1/|K|; the unique normalization making
/// the quotient integration formula exact with orthonormal induced bases.
HaarWeights haar_weights(const FiniteGroup& g, const Subgroup& k);

namespace detail {
template <class T>
struct is_rational : std::false_type {};
template <>
struct is_rational<Rational> : std::true_type {};
}  // namespace detail

/// Integral of f over G with respect to lambda: sum_t lambda * f(t).
/// Exact when f is Rational-valued; otherwise the weight is converted
/// to double once.
template <class F>
auto integrate(const FiniteGroup& g, const HaarWeights& w, F&& f)
    -> decltype(f(0)) {
    using T = decltype(f(0));
    if constexpr (detail::is_rational<T>::value) {
        T acc{0};
        for (int t = 0; t < g.order; ++t) acc += w.lambda * f(t);
        return acc;
    } else {
        const double lam = w.lambda_d();
        T acc = lam * f(0);
        for (int t = 1; t < g.order; ++t) acc += lam * f(t);
        return acc;
    }
}

namespace detail {
inline double value_norm(double x) { return std::abs(x); }
inline double value_norm(const std::complex<double>& x) { return std::abs(x); }
template <class V>
double value_norm(const V& v) { return v.norm(); }
}  // namespace detail

/// Residual of the quotient integration identity
///   int_G f dlambda = sum_{r} mu sum_{k in K} nu f(g_r k).
/// Zero in exact arithmetic; <= ~1e-15 * |G| in floating point.
template <class F>
double weil_check(const FiniteGroup& g, const Subgroup& k, F&& f) {
    const CosetStructure cs = coset_decompose(g, k);
    const HaarWeights w = haar_weights(g, k);
    using T = decltype(f(0));

    const double lam = w.lambda_d();
    T lhs = lam * f(0);
    for (int t = 1; t < g.order; ++t) lhs += lam * f(t);

    const double nu = w.nu_d(), mu = w.mu_d();
    T rhs = lhs;  // initialized with correct shape, overwritten below
    bool first = true;
    for (int gr : cs.reps) {
        for (int kk : k.members) {
            T term = nu * f(g.mul(gr, kk));
            if (first) {
                rhs = mu * term;
                first = false;
            } else {
                rhs += mu * term;
            }
        }
    }
    return detail::value_norm(lhs - rhs);
}

}  // namespace fst
