#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "fst/induce.hpp"

namespace fst {

/// Atomic vector measure: one coefficient vector per group element
/// (zero atoms permitted). Total variation is the sum of atom norms.
struct VectorMeasure {
    int dim_a = 1;
    std::vector<Eigen::VectorXcd> atoms;

    static VectorMeasure zero(int order, int dim_a);
    static VectorMeasure dirac(int order, int at, const Eigen::VectorXcd& value);

    double total_variation() const;
};

/// Function G -> A with lambda-weighted L_p norms.
struct VectorFunction {
    int dim_a = 1;
    std::vector<Eigen::VectorXcd> values;

    static VectorFunction zero(int order, int dim_a);

    double lp_norm(double p, const HaarWeights& w) const;
    double l2_norm(const HaarWeights& w) const { return lp_norm(2.0, w); }
};

std::complex<double> l2_inner(const VectorFunction& f, const VectorFunction& g,
                              const HaarWeights& w);

/// Coefficient table of one sesquilinear block Phi(sigma) on the canonical
/// basis: at(i, j) = Phi(sigma)(theta_i, theta_j) in A.
struct SpectralBlock {
    std::string label;
    int d_sigma = 1;
    int n = 0;  // basis size N
    int dim_a = 1;
    std::vector<Eigen::VectorXcd> coeffs;  // n*n entries, row-major

    static SpectralBlock zero(std::string label, int d_sigma, int n, int dim_a);

    Eigen::VectorXcd& at(int i, int j) { return coeffs[static_cast<std::size_t>(i) * n + j]; }
    const Eigen::VectorXcd& at(int i, int j) const {
        return coeffs[static_cast<std::size_t>(i) * n + j];
    }
};

/// A family of blocks indexed by distinct sigma labels.
struct SpectralField {
    std::vector<SpectralBlock> blocks;

    const SpectralBlock* find(const std::string& label) const;
};

SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator*(const std::complex<double>& s, const SpectralField& a);

/// A chosen finite fragment of the dual object: labelled inductions over
/// one shared (G, K).
struct SigmaSystem {
    std::vector<InducedRep> reps;

    const GroupSystem& system() const { return reps.at(0).system(); }
    const InducedRep& find(const std::string& label) const;
};

/// Fourier-Stieltjes transform of a measure at one induction:
/// at(i, j) = sum_t conj(u_ji(t)) atoms[t]  ( = <conj(U_t) theta_i, theta_j> paired
/// with the atom at t).
SpectralBlock fourier_stieltjes(const VectorMeasure& m, const InducedRep& u);
SpectralField fourier_stieltjes(const VectorMeasure& m, const SigmaSystem& sys);

/// Transform of a function: the same sum weighted by lambda; equals the
/// transform of the measure with density f.
SpectralBlock fourier_function(const VectorFunction& f, const InducedRep& u);
SpectralField fourier_function(const VectorFunction& f, const SigmaSystem& sys);

/// Expansion coefficients (a_ij) with Phi(sigma) = sum_ij d_sigma a_ij uhat_ij;
/// on the canonical basis a_ij = Phi(sigma)(theta_j, theta_i).
std::vector<Eigen::VectorXcd> spectral_decompose(const SpectralBlock& block);

/// f(t) = sum_sigma d_sigma sum_ij coeffs(theta_j, theta_i) u_ij(t).
VectorFunction synthesize(const SpectralField& field, const SigmaSystem& sys);

struct ProjectionResult {
    VectorFunction projection;
    double residual;  // ||f - projection||_2
};

/// Orthogonal projection of f onto the coefficient span of the system
/// (synthesize of the transform); residual 0 iff f lies in the span.
ProjectionResult project_span(const VectorFunction& f, const SigmaSystem& sys);

/// | ||f||_2^2 - sum_sigma d_sigma sum_ij ||fhat(sigma)(theta_i,theta_j)||^2 |.
double plancherel_gap(const VectorFunction& f, const SigmaSystem& sys);

struct ParsevalPair {
    std::complex<double> time_side;      // <f, g> in L_2(G, A, lambda)
    std::complex<double> spectral_side;  // <fhat, ghat> in S_2
};

ParsevalPair parseval_inner(const VectorFunction& f, const VectorFunction& g,
                            const SigmaSystem& sys);

struct NormBoundReport {
    double transform_sup_norm;  // sup_sigma ||mhat(sigma)||_op
    double measure_norm;        // ||m|| = total variation
    bool bound_holds;           // transform_sup_norm <= measure_norm + tol
    double linearity_residual;  // random linear-combination check
};

NormBoundReport norm_bound_check(const VectorMeasure& m, const SigmaSystem& sys,
                                 double tol = 1e-10, std::uint64_t seed = 17);

}  // namespace fst
