// Acceptance suite: one line per criterion, exit code 0 iff all pass.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "fst/builtins.hpp"
#include "fst/rng.hpp"
#include "fst/spaces.hpp"
#include "fst/transform.hpp"
#include "fst/verify.hpp"

using namespace fst;
using cd = std::complex<double>;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int num, const std::string& name, bool ok, const std::string& info) {
    std::printf("[%s] criterion %2d: %-24s %s\n", ok ? "PASS" : "FAIL", num, name.c_str(),
                info.c_str());
    if (!ok) ++failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

SigmaSystem catalog_system(const std::string& instance) {
    auto sys = builtin_instance(instance);
    SigmaSystem out;
    for (const auto& [label, rep] : catalog_all(sys->group, sys->sub).items)
        out.reps.push_back(induce(sys, rep, label));
    return out;
}

SigmaSystem named_system(const std::string& instance, const std::vector<std::string>& names) {
    auto sys = builtin_instance(instance);
    SigmaSystem out;
    for (const auto& name : names)
        out.reps.push_back(induce(sys, catalog_rep(sys->group, sys->sub, name), name));
    return out;
}

VectorFunction random_span_function(Rng& rng, const SigmaSystem& span, int dim_a) {
    SpectralField field;
    for (const auto& u : span.reps) {
        SpectralBlock b = SpectralBlock::zero(u.label(), u.d_sigma(), u.dim(), dim_a);
        for (auto& e : b.coeffs) e = rng.cvector(dim_a);
        field.blocks.push_back(std::move(b));
    }
    return synthesize(field, span);
}

SpectralField random_field(Rng& rng, int dim_a) {
    SpectralField f;
    auto add = [&](const char* label, int d_sigma, int n) {
        SpectralBlock b = SpectralBlock::zero(label, d_sigma, n, dim_a);
        const double scale = rng.uniform(0.3, 2.0);
        for (auto& e : b.coeffs) e = scale * rng.cvector(dim_a);
        f.blocks.push_back(std::move(b));
    };
    add("a", 1, 2);
    add("b", 2, 2);
    return f;
}

// 1. Quotient integration formula on the five stock pairs.
void criterion_weil() {
    const auto t0 = clock_type::now();
    Rng rng(101);
    double worst = 0.0;
    for (const auto& name : builtin_instance_names()) {
        auto sys = builtin_instance(name);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<cd> f(sys->group.order);
            for (auto& v : f) v = rng.cgaussian();
            worst = std::max(worst,
                             weil_check(sys->group, sys->sub, [&](int t) { return f[t]; }));
        }
    }
    const double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
    criterion(1, "weil-formula", worst <= 1e-12 && secs < 1.0,
              "max_residual=" + fmt(worst) + " runtime=" + fmt(secs) + "s");
}

// 2. Schur orthogonality across every builtin irrep family.
void criterion_schur() {
    double worst_same = 0.0, worst_cross = 0.0;
    for (const auto& inst :
         {"z4_z2", "s3_a3", "s3_tau", "d4_c4", "z6_z3", "s3_s3", "d4_d4"}) {
        auto sys = builtin_instance(inst);
        const IrrepFamily fam = catalog_all(sys->group, sys->sub);
        for (std::size_t a = 0; a < fam.items.size(); ++a) {
            worst_same =
                std::max(worst_same, schur_check(fam.items[a].second, fam.items[a].second).residual);
            for (std::size_t b = a + 1; b < fam.items.size(); ++b)
                worst_cross = std::max(
                    worst_cross, schur_check(fam.items[a].second, fam.items[b].second).residual);
        }
    }
    criterion(2, "schur-orthogonality", worst_same <= 1e-10 && worst_cross <= 1e-10,
              "same=" + fmt(worst_same) + " cross=" + fmt(worst_cross));
}

// 3. Induced representation contracts on every builtin instance.
void criterion_induced() {
    Rng rng(103);
    double worst_id = 0.0, worst_hom = 0.0, worst_uni = 0.0, worst_idem = 0.0;
    for (const auto& inst : builtin_instance_names()) {
        auto sys = builtin_instance(inst);
        const auto& g = sys->group;
        for (const auto& [label, sigma] : catalog_all(g, sys->sub).items) {
            const InducedRep u = induce(sys, sigma, label);
            const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.dim(), u.dim());
            worst_id = std::max(worst_id,
                                (u.operator_at(g.identity) - id).cwiseAbs().maxCoeff());
            for (int a = 0; a < g.order; ++a) {
                worst_uni = std::max(
                    worst_uni,
                    (u.operator_at(a) * u.operator_at(a).adjoint() - id).cwiseAbs().maxCoeff());
                for (int b = 0; b < g.order; ++b)
                    worst_hom = std::max(worst_hom,
                                         (u.operator_at(g.mul(a, b)) -
                                          u.operator_at(a) * u.operator_at(b))
                                             .cwiseAbs()
                                             .maxCoeff());
            }
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<Eigen::VectorXcd> eta(g.order);
                for (auto& v : eta) v = rng.cvector(sigma.dim);
                const EquivariantFunction once =
                    project_equivariant(*sys, sigma, [&](int t) { return eta[t]; });
                const EquivariantFunction twice =
                    project_equivariant(*sys, sigma, [&](int t) { return once(t); });
                for (int t = 0; t < g.order; ++t)
                    worst_idem =
                        std::max(worst_idem, (twice(t) - once(t)).cwiseAbs().maxCoeff());
            }
        }
    }
    criterion(3, "induced-rep-contract",
              worst_id == 0.0 && worst_hom <= 1e-10 && worst_uni <= 1e-10 &&
                  worst_idem <= 1e-12,
              "U_e=" + fmt(worst_id) + " hom=" + fmt(worst_hom) + " uni=" + fmt(worst_uni) +
                  " idem=" + fmt(worst_idem));
}

// 4. Coefficient orthogonality through the alpha route.
void criterion_ctensor() {
    double worst_contract = 0.0, worst_delta = 0.0;
    for (const auto& [inst, name] :
         std::vector<std::pair<std::string, std::string>>{{"s3_a3", "cyclic:3:chi1"},
                                                          {"d4_c4", "cyclic:4:chi1"},
                                                          {"d4_c4", "cyclic:4:chi3"}}) {
        auto sys = builtin_instance(inst);
        const InducedRep u = induce(sys, catalog_rep(sys->group, sys->sub, name), name);
        const OrthogonalityReport r = induced_orthogonality_check(u, u);
        worst_contract = std::max(worst_contract, r.max_c_contract_residual);
        worst_delta = std::max(worst_delta, r.max_delta_residual);
    }
    criterion(4, "ctensor-orthogonality", worst_contract <= 1e-10 && worst_delta <= 1e-10,
              "contract=" + fmt(worst_contract) + " delta=" + fmt(worst_delta));
}

// 5. The computed transform of a single coefficient function.
void criterion_lemma() {
    Rng rng(105);
    double worst = 0.0;
    for (const auto& [inst, name] :
         std::vector<std::pair<std::string, std::string>>{{"s3_a3", "cyclic:3:chi1"},
                                                          {"d4_c4", "cyclic:4:chi1"}}) {
        for (int dim_a : {1, 3}) {
            const SigmaSystem s = named_system(inst, {name});
            const InducedRep& u = s.reps[0];
            const double d = u.d_sigma();
            for (int i = 0; i < u.dim(); ++i)
                for (int j = 0; j < u.dim(); ++j) {
                    const Eigen::VectorXcd a = rng.cvector(dim_a);
                    VectorFunction f =
                        VectorFunction::zero(u.system().group.order, dim_a);
                    for (int t = 0; t < u.system().group.order; ++t)
                        f.values[t] = u.operator_at(t)(i, j) * a;
                    const SpectralBlock block = fourier_function(f, u);
                    for (int m = 0; m < u.dim(); ++m)
                        for (int l = 0; l < u.dim(); ++l) {
                            Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(dim_a);
                            if (l == i && m == j) expect = a / d;
                            worst = std::max(
                                worst, (block.at(m, l) - expect).cwiseAbs().maxCoeff());
                        }
                }
        }
    }
    criterion(5, "lemma-coefficient-block", worst <= 1e-10, "max_residual=" + fmt(worst));
}

// 6. Inversion on the coefficient span.
void criterion_inversion() {
    Rng rng(106);
    double worst = 0.0;
    for (const auto& [inst, name] :
         std::vector<std::pair<std::string, std::string>>{{"s3_a3", "cyclic:3:chi1"},
                                                          {"d4_c4", "cyclic:4:chi1"}}) {
        for (int dim_a : {1, 3}) {
            const SigmaSystem s = named_system(inst, {name});
            const HaarWeights& w = s.system().weights;
            for (int trial = 0; trial < 200; ++trial) {
                const VectorFunction f = random_span_function(rng, s, dim_a);
                const VectorFunction back = synthesize(fourier_function(f, s), s);
                double acc = 0.0;
                for (std::size_t t = 0; t < f.values.size(); ++t)
                    acc += w.lambda_d() * (f.values[t] - back.values[t]).squaredNorm();
                worst = std::max(worst, std::sqrt(acc));
            }
        }
    }
    criterion(6, "inversion-roundtrip", worst <= 1e-9, "max_l2_residual=" + fmt(worst));
}

// 7. Plancherel / Parseval and the S2 inner product axioms.
void criterion_plancherel() {
    Rng rng(107);
    double worst_gap = 0.0, worst_pair = 0.0, worst_axiom = 0.0;
    for (const auto& [inst, name] :
         std::vector<std::pair<std::string, std::string>>{{"s3_a3", "cyclic:3:chi1"},
                                                          {"d4_c4", "cyclic:4:chi1"}}) {
        for (int dim_a : {1, 3}) {
            const SigmaSystem s = named_system(inst, {name});
            for (int trial = 0; trial < 200; ++trial) {
                const VectorFunction f = random_span_function(rng, s, dim_a);
                worst_gap = std::max(worst_gap, plancherel_gap(f, s));
                const VectorFunction g2 = random_span_function(rng, s, dim_a);
                const ParsevalPair pair = parseval_inner(f, g2, s);
                worst_pair =
                    std::max(worst_pair, std::abs(pair.time_side - pair.spectral_side));
            }
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const SpectralField phi = random_field(rng, 2);
        const SpectralField psi = random_field(rng, 2);
        const cd pq = s2_inner(phi, psi);
        const cd qp = s2_inner(psi, phi);
        worst_axiom = std::max(worst_axiom, std::abs(pq - std::conj(qp)));
        const cd self = s2_inner(phi, phi);
        worst_axiom = std::max(worst_axiom, std::abs(self.imag()));
        const double n2 = snorm(phi, 2.0).value;
        worst_axiom = std::max(worst_axiom, std::abs(self.real() - n2 * n2));
        worst_axiom = std::max(
            worst_axiom, std::max(0.0, std::abs(pq) - n2 * snorm(psi, 2.0).value));
    }
    criterion(7, "plancherel-parseval",
              worst_gap <= 1e-9 && worst_pair <= 1e-9 && worst_axiom <= 1e-9,
              "gap=" + fmt(worst_gap) + " parseval=" + fmt(worst_pair) +
                  " axioms=" + fmt(worst_axiom));
}

// 8. Transform continuity bound, with equality at the identity point mass.
void criterion_norm_bound() {
    Rng rng(108);
    double worst_excess = -1.0, worst_equality = 0.0;
    for (const auto& inst : builtin_instance_names()) {
        const SigmaSystem s = catalog_system(inst);
        const int order = s.system().group.order;
        for (int trial = 0; trial < 1000; ++trial) {
            VectorMeasure m = VectorMeasure::zero(order, 2);
            for (auto& atom : m.atoms)
                if (rng.uniform() < 0.8) atom = rng.cvector(2);
            const NormBoundReport r = norm_bound_check(m, s);
            worst_excess = std::max(worst_excess, r.transform_sup_norm - r.measure_norm);
        }
        const NormBoundReport r = norm_bound_check(
            VectorMeasure::dirac(order, s.system().group.identity, rng.cvector(2)), s);
        worst_equality =
            std::max(worst_equality, std::abs(r.transform_sup_norm - r.measure_norm));
    }
    criterion(8, "transform-norm-bound", worst_excess <= 1e-10 && worst_equality <= 1e-10,
              "max_excess=" + fmt(worst_excess) + " dirac_gap=" + fmt(worst_equality));
}

// 9. The p-norm chain and the 1/n truncation tail.
void criterion_chain() {
    Rng rng(109);
    const std::vector<double> grid = {1.0, 1.5, 2.0, 3.0, kInfiniteP};
    double worst_mono = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const SpectralField f = random_field(rng, 2);
        for (std::size_t a = 0; a < grid.size(); ++a)
            for (std::size_t b = a; b < grid.size(); ++b) {
                const MonotonicityResult r = monotonicity_check(f, grid[a], grid[b]);
                worst_mono = std::max(worst_mono, r.norm_q - r.norm_p);
            }
    }
    double worst_tail = 0.0;  // max over n of n * ||phi_n - phi||_inf, must stay < 1
    for (int trial = 0; trial < 100; ++trial) {
        const SpectralField f = random_field(rng, 2);
        for (int n = 1; n <= 100; ++n) {
            const SpectralField diff = f + cd(-1.0) * truncate(f, n);
            worst_tail = std::max(worst_tail, n * snorm(diff, kInfiniteP).value);
        }
    }
    criterion(9, "sequence-space-chain", worst_mono <= 1e-12 && worst_tail < 1.0,
              "mono_excess=" + fmt(std::max(0.0, worst_mono)) +
                  " tail_ratio=" + fmt(worst_tail));
}

// 10. Negative control: equivalent inductions from distinct sigma break the
// cross-sigma vanishing claim; the verifier reports it without failing.
void criterion_negative_control() {
    VerifyConfig cfg;
    cfg.group = builtin_group("s3");
    cfg.generators = {3};
    cfg.sigma_names = {"cyclic:3:chi1", "cyclic:3:chi2"};
    cfg.space_dim = 1;
    cfg.seed = 2024;
    const auto claims = run_verification(cfg);

    double cross = 0.0;
    bool found = false, asserted = true;
    for (const auto& c : claims)
        if (c.id == "eq9-cross-sigma") {
            found = true;
            cross = c.max_residual;
            asserted = c.asserted;
        }
    const int exit_code = report_exit_code(claims);
    criterion(10, "negative-control-eq9",
              found && !asserted && cross > 0.1 && exit_code == 0,
              "cross_integral=" + fmt(cross) + " exit_code=" + std::to_string(exit_code));
}

}  // namespace

int main() {
    const auto t0 = clock_type::now();
    criterion_weil();
    criterion_schur();
    criterion_induced();
    criterion_ctensor();
    criterion_lemma();
    criterion_inversion();
    criterion_plancherel();
    criterion_norm_bound();
    criterion_chain();
    criterion_negative_control();
    const double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
    std::printf("%d/10 criteria passed in %.1f s\n", 10 - failures, secs);
    if (secs >= 60.0) {
        std::printf("[FAIL] runtime budget exceeded\n");
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
