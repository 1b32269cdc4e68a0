#pragma once

#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "fst/transform.hpp"

namespace fst {

constexpr double kInfiniteP = std::numeric_limits<double>::infinity();

struct SNorm {
    double p;
    double value;
};

/// Operator norm of one block as an A-valued sesquilinear form,
///   sup { ||Phi(x, y)||_A : ||x|| = ||y|| = 1 },
/// computed by alternating SVD maximization (tolerance 1e-10, capped at
/// 100 sweeps, deterministic restarts) and cross-checked against the
/// Frobenius upper bound and the best-entry lower bound.
double block_opnorm(const SpectralBlock& block);

/// Entrywise sup norm of a block, max_ij ||Phi(theta_i, theta_j)||_A.
/// This is the block norm used by the p = infinity member of the norm
/// family: it is the weakest of the natural block norms, and the only
/// one for which ||Phi||_q <= ||Phi||_p extends to q = infinity.
double block_supnorm(const SpectralBlock& block);

/// ||Phi||_p. For p < infinity: (sum_sigma d_sigma sum_ij ||entry||^p)^(1/p).
/// For p = infinity: sup_sigma block_supnorm.
SNorm snorm(const SpectralField& field, double p);

enum class SpaceClass { S00, S0, Sp, Sinf };

struct MembershipResult {
    bool member;
    std::vector<std::string> witness;  // labels of nonzero / exceeding blocks
    double value;                      // support count, exceedance count, or norm
};

/// Finite-fragment membership predicates for the sequence-space chain.
/// Block size is measured with the operator norm.
MembershipResult membership(const SpectralField& field, SpaceClass cls, double epsilon,
                            double p = 2.0);

struct MonotonicityResult {
    bool holds;
    double norm_p, norm_q;
};

/// Checks ||Phi||_q <= ||Phi||_p + 1e-12 for 1 <= p <= q <= infinity.
MonotonicityResult monotonicity_check(const SpectralField& field, double p, double q);

/// sum_sigma d_sigma sum_ij <Phi(theta_i,theta_j), Psi(theta_i,theta_j)>_A;
/// Hermitian, linear in the first slot, positive definite.
std::complex<double> s2_inner(const SpectralField& phi, const SpectralField& psi);

/// Zeroes every block with operator norm < 1/n; the tail of the density
/// construction. ||truncate(Phi, n) - Phi||_inf < 1/n.
SpectralField truncate(const SpectralField& field, int n);

}  // namespace fst
