#include "fst/transform.hpp"

#include <cmath>

#include "fst/rng.hpp"
#include "fst/spaces.hpp"

namespace fst {

VectorMeasure VectorMeasure::zero(int order, int dim_a) {
    VectorMeasure m;
    m.dim_a = dim_a;
    m.atoms.assign(order, Eigen::VectorXcd::Zero(dim_a));
    return m;
}

VectorMeasure VectorMeasure::dirac(int order, int at, const Eigen::VectorXcd& value) {
    VectorMeasure m = zero(order, static_cast<int>(value.size()));
    m.atoms[at] = value;
    return m;
}

double VectorMeasure::total_variation() const {
    double acc = 0.0;
    for (const auto& a : atoms) acc += a.norm();
    return acc;
}

VectorFunction VectorFunction::zero(int order, int dim_a) {
    VectorFunction f;
    f.dim_a = dim_a;
    f.values.assign(order, Eigen::VectorXcd::Zero(dim_a));
    return f;
}

double VectorFunction::lp_norm(double p, const HaarWeights& w) const {
    const double lam = w.lambda_d();
    double acc = 0.0;
    for (const auto& v : values) acc += lam * std::pow(v.norm(), p);
    return std::pow(acc, 1.0 / p);
}

std::complex<double> l2_inner(const VectorFunction& f, const VectorFunction& g,
                              const HaarWeights& w) {
    if (f.values.size() != g.values.size() || f.dim_a != g.dim_a)
        throw ShapeMismatch("functions have different shapes");
    const double lam = w.lambda_d();
    std::complex<double> acc = 0.0;
    // <f, g> linear in the first slot: sum lambda <f(t), g(t)>_A.
    for (std::size_t t = 0; t < f.values.size(); ++t) acc += lam * g.values[t].dot(f.values[t]);
    return acc;
}

SpectralBlock SpectralBlock::zero(std::string label, int d_sigma, int n, int dim_a) {
    SpectralBlock b;
    b.label = std::move(label);
    b.d_sigma = d_sigma;
    b.n = n;
    b.dim_a = dim_a;
    b.coeffs.assign(static_cast<std::size_t>(n) * n, Eigen::VectorXcd::Zero(dim_a));
    return b;
}

const SpectralBlock* SpectralField::find(const std::string& label) const {
    for (const auto& b : blocks)
        if (b.label == label) return &b;
    return nullptr;
}

static void check_same_shape(const SpectralBlock& a, const SpectralBlock& b) {
    if (a.label != b.label || a.n != b.n || a.dim_a != b.dim_a || a.d_sigma != b.d_sigma)
        throw ShapeMismatch("spectral blocks have different shapes");
}

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
    if (a.blocks.size() != b.blocks.size())
        throw ShapeMismatch("spectral fields have different block counts");
    SpectralField out = a;
    for (std::size_t k = 0; k < out.blocks.size(); ++k) {
        check_same_shape(out.blocks[k], b.blocks[k]);
        for (std::size_t e = 0; e < out.blocks[k].coeffs.size(); ++e)
            out.blocks[k].coeffs[e] += b.blocks[k].coeffs[e];
    }
    return out;
}

SpectralField operator*(const std::complex<double>& s, const SpectralField& a) {
    SpectralField out = a;
    for (auto& blk : out.blocks)
        for (auto& e : blk.coeffs) e *= s;
    return out;
}

const InducedRep& SigmaSystem::find(const std::string& label) const {
    for (const auto& r : reps)
        if (r.label() == label) return r;
    throw Error("no induction labelled '" + label + "' in system");
}

SpectralBlock fourier_stieltjes(const VectorMeasure& m, const InducedRep& u) {
    const int order = u.system().group.order;
    if (static_cast<int>(m.atoms.size()) != order)
        throw ShapeMismatch("measure is not defined on this group");
    SpectralBlock block = SpectralBlock::zero(u.label(), u.d_sigma(), u.dim(), m.dim_a);
    for (int t = 0; t < order; ++t) {
        if (m.atoms[t].isZero(0)) continue;
        const Eigen::MatrixXcd& op = u.operator_at(t);
        for (int i = 0; i < u.dim(); ++i)
            for (int j = 0; j < u.dim(); ++j)
                block.at(i, j) += std::conj(op(j, i)) * m.atoms[t];
    }
    return block;
}

SpectralField fourier_stieltjes(const VectorMeasure& m, const SigmaSystem& sys) {
    SpectralField field;
    for (const auto& u : sys.reps) field.blocks.push_back(fourier_stieltjes(m, u));
    return field;
}

SpectralBlock fourier_function(const VectorFunction& f, const InducedRep& u) {
    const int order = u.system().group.order;
    if (static_cast<int>(f.values.size()) != order)
        throw ShapeMismatch("function is not defined on this group");
    const double lam = u.system().weights.lambda_d();
    VectorMeasure m;
    m.dim_a = f.dim_a;
    m.atoms.reserve(order);
    for (const auto& v : f.values) m.atoms.push_back(lam * v);
    return fourier_stieltjes(m, u);
}

SpectralField fourier_function(const VectorFunction& f, const SigmaSystem& sys) {
    SpectralField field;
    for (const auto& u : sys.reps) field.blocks.push_back(fourier_function(f, u));
    return field;
}

std::vector<Eigen::VectorXcd> spectral_decompose(const SpectralBlock& block) {
    std::vector<Eigen::VectorXcd> a(block.coeffs.size());
    for (int i = 0; i < block.n; ++i)
        for (int j = 0; j < block.n; ++j)
            a[static_cast<std::size_t>(i) * block.n + j] = block.at(j, i);
    return a;
}

VectorFunction synthesize(const SpectralField& field, const SigmaSystem& sys) {
    const int order = sys.system().group.order;
    const int dim_a = field.blocks.empty() ? 1 : field.blocks.front().dim_a;
    for (const auto& b : field.blocks)
        if (b.dim_a != dim_a) throw ShapeMismatch("blocks disagree on the coefficient space");
    VectorFunction f = VectorFunction::zero(order, dim_a);
    for (const auto& block : field.blocks) {
        const InducedRep& u = sys.find(block.label);
        if (block.n != u.dim()) throw ShapeMismatch("block shape does not match induction");
        const double d = u.d_sigma();
        for (int t = 0; t < order; ++t) {
            const Eigen::MatrixXcd& op = u.operator_at(t);
            for (int i = 0; i < block.n; ++i)
                for (int j = 0; j < block.n; ++j)
                    f.values[t] += d * op(i, j) * block.at(j, i);
        }
    }
    return f;
}

ProjectionResult project_span(const VectorFunction& f, const SigmaSystem& sys) {
    ProjectionResult out{synthesize(fourier_function(f, sys), sys), 0.0};
    const HaarWeights& w = sys.system().weights;
    const double lam = w.lambda_d();
    double acc = 0.0;
    for (std::size_t t = 0; t < f.values.size(); ++t)
        acc += lam * (f.values[t] - out.projection.values[t]).squaredNorm();
    out.residual = std::sqrt(acc);
    return out;
}

double plancherel_gap(const VectorFunction& f, const SigmaSystem& sys) {
    const SpectralField field = fourier_function(f, sys);
    const double time_side = std::pow(f.l2_norm(sys.system().weights), 2);
    double spectral_side = 0.0;
    for (const auto& block : field.blocks) {
        double acc = 0.0;
        for (const auto& e : block.coeffs) acc += e.squaredNorm();
        spectral_side += block.d_sigma * acc;
    }
    return std::abs(time_side - spectral_side);
}

ParsevalPair parseval_inner(const VectorFunction& f, const VectorFunction& g,
                            const SigmaSystem& sys) {
    ParsevalPair pair{};
    pair.time_side = l2_inner(f, g, sys.system().weights);
    pair.spectral_side = s2_inner(fourier_function(f, sys), fourier_function(g, sys));
    return pair;
}

NormBoundReport norm_bound_check(const VectorMeasure& m, const SigmaSystem& sys, double tol,
                                 std::uint64_t seed) {
    NormBoundReport rep{};
    const SpectralField field = fourier_stieltjes(m, sys);
    rep.transform_sup_norm = 0.0;
    for (const auto& block : field.blocks)
        rep.transform_sup_norm = std::max(rep.transform_sup_norm, block_opnorm(block));
    rep.measure_norm = m.total_variation();
    rep.bound_holds = rep.transform_sup_norm <= rep.measure_norm + tol;

    // Linearity of the transform on a random companion measure.
    Rng rng(seed);
    const int order = static_cast<int>(m.atoms.size());
    VectorMeasure m2 = VectorMeasure::zero(order, m.dim_a);
    for (auto& atom : m2.atoms) atom = rng.cvector(m.dim_a);
    const std::complex<double> scale = rng.cgaussian();

    VectorMeasure combo = VectorMeasure::zero(order, m.dim_a);
    for (int t = 0; t < order; ++t) combo.atoms[t] = scale * m.atoms[t] + m2.atoms[t];
    const SpectralField lhs = fourier_stieltjes(combo, sys);
    const SpectralField rhs = scale * field + fourier_stieltjes(m2, sys);
    rep.linearity_residual = 0.0;
    for (std::size_t b = 0; b < lhs.blocks.size(); ++b)
        for (std::size_t e = 0; e < lhs.blocks[b].coeffs.size(); ++e)
            rep.linearity_residual = std::max(
                rep.linearity_residual,
                (lhs.blocks[b].coeffs[e] - rhs.blocks[b].coeffs[e]).cwiseAbs().maxCoeff());
    return rep;
}

}  // namespace fst
