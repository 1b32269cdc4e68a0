#include "fst/spaces.hpp"

#include <cmath>

#include "fst/rng.hpp"

namespace fst {

namespace {

double block_frobenius(const SpectralBlock& block) {
    double acc = 0.0;
    for (const auto& e : block.coeffs) acc += e.squaredNorm();
    return std::sqrt(acc);
}

/// One alternating pass: with y fixed the map x -> Phi(x, y) is linear
/// into A; its matrix has column i equal to sum_j conj(y_j) B_ij. The
/// best x is the top right singular vector. Symmetrically for y.
double alternate_from(const SpectralBlock& block, Eigen::VectorXcd x, Eigen::VectorXcd y) {
    const int n = block.n, da = block.dim_a;
    double value = 0.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        Eigen::MatrixXcd mx = Eigen::MatrixXcd::Zero(da, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mx.col(i) += std::conj(y[j]) * block.at(i, j);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svdx(mx, Eigen::ComputeThinV);
        x = svdx.matrixV().col(0);

        Eigen::MatrixXcd my = Eigen::MatrixXcd::Zero(da, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) my.col(j) += x[i] * block.at(i, j);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svdy(my, Eigen::ComputeThinV);
        y = svdy.matrixV().col(0).conjugate();

        const double next = svdy.singularValues()(0);
        if (std::abs(next - value) <= 1e-10 * std::max(1.0, next)) return next;
        value = next;
    }
    return value;
}

}  // namespace

double block_opnorm(const SpectralBlock& block) {
    const int n = block.n;
    if (n == 0) return 0.0;

    int bi = 0, bj = 0;
    double best_entry = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (block.at(i, j).norm() > best_entry) {
                best_entry = block.at(i, j).norm();
                bi = i;
                bj = j;
            }
    if (best_entry == 0.0) return 0.0;

    Eigen::VectorXcd x0 = Eigen::VectorXcd::Zero(n), y0 = Eigen::VectorXcd::Zero(n);
    x0[bi] = 1.0;
    y0[bj] = 1.0;
    double value = alternate_from(block, x0, y0);

    Rng rng(0x0b10c6);  // fixed restarts keep results deterministic
    for (int restart = 0; restart < 2; ++restart) {
        Eigen::VectorXcd x = rng.cvector(n), y = rng.cvector(n);
        x.normalize();
        y.normalize();
        value = std::max(value, alternate_from(block, x, y));
    }

    const double frob = block_frobenius(block);
    if (value > frob + 1e-8 * std::max(1.0, frob))
        throw Error("operator norm exceeded its Frobenius bound; numerical failure");
    return std::max(value, best_entry);
}

double block_supnorm(const SpectralBlock& block) {
    double best = 0.0;
    for (const auto& e : block.coeffs) best = std::max(best, e.norm());
    return best;
}

SNorm snorm(const SpectralField& field, double p) {
    if (std::isnan(p) || p < 1.0) throw InvalidP("p must lie in [1, infinity]");
    if (std::isinf(p)) {
        double sup = 0.0;
        for (const auto& block : field.blocks) sup = std::max(sup, block_supnorm(block));
        return {kInfiniteP, sup};
    }
    double acc = 0.0;
    for (const auto& block : field.blocks)
        for (const auto& e : block.coeffs) acc += block.d_sigma * std::pow(e.norm(), p);
    return {p, std::pow(acc, 1.0 / p)};
}

MembershipResult membership(const SpectralField& field, SpaceClass cls, double epsilon,
                            double p) {
    MembershipResult out{true, {}, 0.0};
    switch (cls) {
        case SpaceClass::S00:
            for (const auto& block : field.blocks)
                if (block_opnorm(block) > epsilon) out.witness.push_back(block.label);
            out.value = static_cast<double>(out.witness.size());
            break;
        case SpaceClass::S0:
            for (const auto& block : field.blocks)
                if (block_opnorm(block) > epsilon) out.witness.push_back(block.label);
            out.value = static_cast<double>(out.witness.size());
            break;
        case SpaceClass::Sp:
            out.value = snorm(field, p).value;
            out.member = std::isfinite(out.value);
            break;
        case SpaceClass::Sinf: {
            double sup = 0.0;
            for (const auto& block : field.blocks) sup = std::max(sup, block_opnorm(block));
            out.value = sup;
            out.member = std::isfinite(sup);
            break;
        }
    }
    return out;
}

MonotonicityResult monotonicity_check(const SpectralField& field, double p, double q) {
    if (!(p <= q)) throw InvalidP("monotonicity check requires p <= q");
    MonotonicityResult out{};
    out.norm_p = snorm(field, p).value;
    out.norm_q = snorm(field, q).value;
    out.holds = out.norm_q <= out.norm_p + 1e-12;
    return out;
}

std::complex<double> s2_inner(const SpectralField& phi, const SpectralField& psi) {
    if (phi.blocks.size() != psi.blocks.size())
        throw ShapeMismatch("fields have different block counts");
    std::complex<double> acc = 0.0;
    for (std::size_t b = 0; b < phi.blocks.size(); ++b) {
        const auto& pb = phi.blocks[b];
        const auto& qb = psi.blocks[b];
        if (pb.label != qb.label || pb.n != qb.n || pb.dim_a != qb.dim_a)
            throw ShapeMismatch("fields have mismatched blocks at '" + pb.label + "'");
        std::complex<double> block_acc = 0.0;
        for (std::size_t e = 0; e < pb.coeffs.size(); ++e)
            block_acc += qb.coeffs[e].dot(pb.coeffs[e]);  // linear in phi
        acc += static_cast<double>(pb.d_sigma) * block_acc;
    }
    return acc;
}

SpectralField truncate(const SpectralField& field, int n) {
    if (n < 1) throw Error("truncation index must be >= 1");
    SpectralField out = field;
    const double threshold = 1.0 / n;
    for (auto& block : out.blocks)
        if (block_opnorm(block) < threshold)
            for (auto& e : block.coeffs) e.setZero();
    return out;
}

}  // namespace fst
