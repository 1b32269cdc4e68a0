#include "fst/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>

#include "fst/rng.hpp"
#include "fst/spaces.hpp"

namespace fst {

namespace {

constexpr int kWeilFunctions = 100;
constexpr int kInversionSamples = 200;
constexpr int kNormBoundMeasures = 1000;
constexpr int kRandomFields = 1000;
constexpr int kFieldPairs = 1000;
constexpr int kTruncationFields = 100;
constexpr int kTruncationMaxN = 100;
constexpr int kOffspanSamples = 20;
constexpr int kIdempotentSamples = 5;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct Workbench {
    const VerifyConfig& cfg;
    std::shared_ptr<const GroupSystem> sys;
    std::vector<std::pair<std::string, UnitaryRep>> sigmas;
    SigmaSystem all;   // every configured induction
    SigmaSystem span;  // irreducible, pairwise-inequivalent subset
    json span_note;

    Rng rng_for(const std::string& claim) const {
        return Rng(cfg.seed * 1000003ULL ^ fnv1a(claim));
    }
};

Workbench make_workbench(const VerifyConfig& cfg) {
    Workbench wb{cfg, nullptr, {}, {}, {}, json::object()};
    wb.sys = GroupSystem::make(cfg.group, cfg.generators);
    for (const auto& name : cfg.sigma_names) {
        if (name.rfind("file:", 0) == 0) {
            wb.sigmas.emplace_back(name, load_rep(wb.sys->group, wb.sys->sub, name.substr(5)));
        } else {
            wb.sigmas.emplace_back(name, catalog_rep(wb.sys->group, wb.sys->sub, name));
        }
    }
    for (const auto& [label, rep] : wb.sigmas)
        wb.all.reps.push_back(induce(wb.sys, rep, label));

    // Synthesis needs pairwise-inequivalent irreducible inductions; keep
    // the first representative of each equivalence class and record the
    // rest. Distinct sigma can induce equivalent representations.
    json excluded = json::array();
    for (const auto& u : wb.all.reps) {
        if (!u.irreducible()) {
            excluded.push_back({{"sigma", u.label()}, {"reason", "induction reducible"}});
            continue;
        }
        bool duplicate = false;
        for (const auto& kept : wb.span.reps) {
            std::complex<double> inner = 0.0;
            for (int t = 0; t < wb.sys->group.order; ++t)
                inner += u.character_at(t) * std::conj(kept.character_at(t));
            if (std::abs(inner) / wb.sys->group.order > 0.5) {
                duplicate = true;
                excluded.push_back({{"sigma", u.label()},
                                    {"reason", "induction equivalent to " + kept.label()}});
                break;
            }
        }
        if (!duplicate) wb.span.reps.push_back(u);
    }
    json kept = json::array();
    for (const auto& u : wb.span.reps) kept.push_back(u.label());
    wb.span_note = {{"span_sigmas", kept}, {"excluded", excluded}};
    return wb;
}

SpectralField random_field(Rng& rng, const SigmaSystem& shapes, int dim_a) {
    SpectralField field;
    for (const auto& u : shapes.reps) {
        SpectralBlock block = SpectralBlock::zero(u.label(), u.d_sigma(), u.dim(), dim_a);
        const double scale = rng.uniform(0.3, 2.0);  // push some entries past norm 1
        for (auto& e : block.coeffs) e = scale * rng.cvector(dim_a);
        field.blocks.push_back(std::move(block));
    }
    return field;
}

VectorFunction random_span_function(Rng& rng, const SigmaSystem& span, int dim_a) {
    return synthesize(random_field(rng, span, dim_a), span);
}

VectorFunction random_function(Rng& rng, int order, int dim_a) {
    VectorFunction f = VectorFunction::zero(order, dim_a);
    for (auto& v : f.values) v = rng.cvector(dim_a);
    return f;
}

ClaimReport claim(const std::string& id, bool asserted, double residual, double tol,
                  json detail = json::object()) {
    ClaimReport r;
    r.id = id;
    r.asserted = asserted;
    r.max_residual = residual;
    r.status = residual <= tol ? "PASS" : "FAIL";
    r.detail = std::move(detail);
    return r;
}

ClaimReport not_applicable(const std::string& id, const std::string& why, bool asserted = true) {
    ClaimReport r;
    r.id = id;
    r.asserted = asserted;
    r.status = "NOT-APPLICABLE";
    r.max_residual = 0.0;
    r.detail = {{"reason", why}};
    return r;
}

// ---------------------------------------------------------------- claims

ClaimReport run_weil(Workbench& wb) {
    Rng rng = wb.rng_for("eq1-weil");
    const auto& g = wb.sys->group;
    double worst = 0.0;
    for (int trial = 0; trial < kWeilFunctions; ++trial) {
        std::vector<std::complex<double>> values(g.order);
        for (auto& v : values) v = rng.cgaussian();
        worst = std::max(worst,
                         weil_check(g, wb.sys->sub, [&](int t) { return values[t]; }));
    }
    return claim("eq1-weil", true, worst, wb.cfg.tol.weil,
                 {{"functions", kWeilFunctions}});
}

std::vector<std::pair<std::string, UnitaryRep>> schur_family(const Workbench& wb) {
    try {
        IrrepFamily fam = catalog_all(wb.sys->group, wb.sys->sub);
        return fam.items;
    } catch (const Error&) {
        return wb.sigmas;  // fall back to the configured reps
    }
}

ClaimReport run_schur_same(Workbench& wb) {
    auto family = schur_family(wb);
    double worst = 0.0;
    json per = json::object();
    int tested = 0;
    for (const auto& [label, rep] : family) {
        if (!is_irreducible(rep)) continue;
        const SchurResult r = schur_check(rep, rep);
        per[label] = r.residual;
        worst = std::max(worst, r.residual);
        ++tested;
    }
    if (tested == 0) return not_applicable("eq2-schur", "no irreducible representations");
    return claim("eq2-schur", true, worst, wb.cfg.tol.schur, {{"per_sigma", per}});
}

ClaimReport run_schur_cross(Workbench& wb) {
    auto family = schur_family(wb);
    double worst = 0.0;
    int tested = 0;
    json skipped = json::array();
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b) {
            const auto& [la, ra] = family[a];
            const auto& [lb, rb] = family[b];
            if (!is_irreducible(ra) || !is_irreducible(rb)) continue;
            if (equivalence_check(ra, rb)) {
                skipped.push_back(la + " ~ " + lb);
                continue;
            }
            worst = std::max(worst, schur_check(ra, rb).residual);
            ++tested;
        }
    if (tested == 0) return not_applicable("eq3-schur-cross", "no inequivalent pairs");
    return claim("eq3-schur-cross", true, worst, wb.cfg.tol.schur,
                 {{"pairs", tested}, {"skipped_equivalent", skipped}});
}

ClaimReport run_induced_identity(Workbench& wb) {
    if (wb.all.reps.empty()) return not_applicable("induced-identity", "no sigma configured");
    double worst = 0.0;
    for (const auto& u : wb.all.reps) {
        const Eigen::MatrixXcd& op = u.operator_at(wb.sys->group.identity);
        worst = std::max(worst,
                         (op - Eigen::MatrixXcd::Identity(u.dim(), u.dim())).cwiseAbs().maxCoeff());
    }
    // exact-zero contract: the operator at the identity is assembled from
    // the snapped identity matrix of sigma
    return claim("induced-identity", true, worst, 0.0);
}

ClaimReport run_induced_homomorphism(Workbench& wb) {
    if (wb.all.reps.empty()) return not_applicable("induced-homomorphism", "no sigma configured");
    const auto& g = wb.sys->group;
    double worst = 0.0;
    for (const auto& u : wb.all.reps)
        for (int t1 = 0; t1 < g.order; ++t1)
            for (int t2 = 0; t2 < g.order; ++t2)
                worst = std::max(worst, (u.operator_at(g.mul(t1, t2)) -
                                         u.operator_at(t1) * u.operator_at(t2))
                                            .cwiseAbs()
                                            .maxCoeff());
    return claim("induced-homomorphism", true, worst, wb.cfg.tol.induced);
}

ClaimReport run_induced_unitarity(Workbench& wb) {
    if (wb.all.reps.empty()) return not_applicable("induced-unitarity", "no sigma configured");
    const auto& g = wb.sys->group;
    double worst = 0.0;
    for (const auto& u : wb.all.reps) {
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.dim(), u.dim());
        for (int t = 0; t < g.order; ++t)
            worst = std::max(
                worst,
                (u.operator_at(t) * u.operator_at(t).adjoint() - id).cwiseAbs().maxCoeff());
    }
    return claim("induced-unitarity", true, worst, wb.cfg.tol.induced);
}

ClaimReport run_project_idempotent(Workbench& wb) {
    if (wb.sigmas.empty()) return not_applicable("project-idempotent", "no sigma configured");
    Rng rng = wb.rng_for("project-idempotent");
    const auto& g = wb.sys->group;
    double worst = 0.0, worst_equiv = 0.0;
    for (const auto& [label, rep] : wb.sigmas) {
        for (int trial = 0; trial < kIdempotentSamples; ++trial) {
            std::vector<Eigen::VectorXcd> eta(g.order);
            for (auto& v : eta) v = rng.cvector(rep.dim);
            const EquivariantFunction once =
                project_equivariant(*wb.sys, rep, [&](int t) { return eta[t]; });
            worst_equiv = std::max(worst_equiv, equivariance_residual(*wb.sys, rep, once));
            const EquivariantFunction twice =
                project_equivariant(*wb.sys, rep, [&](int t) { return once(t); });
            for (int t = 0; t < g.order; ++t)
                worst = std::max(worst, (twice(t) - once(t)).cwiseAbs().maxCoeff());
        }
    }
    return claim("project-idempotent", true, worst, wb.cfg.tol.idempotent,
                 {{"equivariance_residual", worst_equiv}});
}

ClaimReport run_ctensor_contract(Workbench& wb) {
    if (wb.all.reps.empty()) return not_applicable("eq8-ctensor", "no sigma configured");
    double worst = 0.0;
    json per = json::object();
    for (const auto& u : wb.all.reps) {
        const OrthogonalityReport r = induced_orthogonality_check(u, u);
        per[u.label()] = r.max_c_contract_residual;
        worst = std::max(worst, r.max_c_contract_residual);
    }
    return claim("eq8-ctensor", true, worst, wb.cfg.tol.ctensor, {{"per_sigma", per}});
}

ClaimReport run_ctensor_delta(Workbench& wb) {
    double worst = 0.0;
    int tested = 0;
    json per = json::object();
    for (const auto& u : wb.all.reps) {
        if (!u.irreducible()) continue;
        const OrthogonalityReport r = induced_orthogonality_check(u, u);
        per[u.label()] = r.max_delta_residual;
        worst = std::max(worst, r.max_delta_residual);
        ++tested;
    }
    if (tested == 0) return not_applicable("eq10-ctensor-delta", "no irreducible inductions");
    return claim("eq10-ctensor-delta", true, worst, wb.cfg.tol.ctensor, {{"per_sigma", per}});
}

ClaimReport run_cross_sigma(Workbench& wb) {
    if (wb.all.reps.size() < 2)
        return not_applicable("eq9-cross-sigma", "fewer than two sigmas", false);
    double worst = 0.0;
    json pairs = json::array();
    for (std::size_t a = 0; a < wb.all.reps.size(); ++a)
        for (std::size_t b = a + 1; b < wb.all.reps.size(); ++b) {
            const OrthogonalityReport r =
                induced_orthogonality_check(wb.all.reps[a], wb.all.reps[b]);
            pairs.push_back({{"pair", wb.all.reps[a].label() + " x " + wb.all.reps[b].label()},
                             {"inductions_equivalent", r.inductions_equivalent},
                             {"max_cross_integral", r.max_cross_integral}});
            worst = std::max(worst, r.max_cross_integral);
        }
    // The vanishing claim fails whenever two distinct sigma induce
    // equivalent representations; report, never assert.
    ClaimReport r = claim("eq9-cross-sigma", false, worst, wb.cfg.tol.ctensor,
                          {{"pairs", pairs}});
    return r;
}

ClaimReport run_lemma(Workbench& wb) {
    if (wb.span.reps.empty()) return not_applicable("lemma-uhat", "no irreducible inductions");
    Rng rng = wb.rng_for("lemma-uhat");
    const auto& g = wb.sys->group;
    const int dim_a = wb.cfg.space_dim;
    double worst = 0.0;
    for (const auto& u : wb.span.reps) {
        const double d = u.d_sigma();
        for (int i = 0; i < u.dim(); ++i)
            for (int j = 0; j < u.dim(); ++j) {
                const Eigen::VectorXcd a = rng.cvector(dim_a);
                VectorFunction f = VectorFunction::zero(g.order, dim_a);
                for (int t = 0; t < g.order; ++t) f.values[t] = u.operator_at(t)(i, j) * a;
                const SpectralBlock block = fourier_function(f, u);
                for (int m = 0; m < u.dim(); ++m)
                    for (int l = 0; l < u.dim(); ++l) {
                        Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(dim_a);
                        if (l == i && m == j) expect = a / d;
                        worst = std::max(worst,
                                         (block.at(m, l) - expect).cwiseAbs().maxCoeff());
                    }
            }
    }
    return claim("lemma-uhat", true, worst, wb.cfg.tol.lemma);
}

ClaimReport run_def12_reading(Workbench& wb) {
    if (wb.span.reps.empty())
        return not_applicable("def12-reading", "no irreducible inductions", false);
    const auto& u = wb.span.reps.front();
    const auto& g = wb.sys->group;
    const double lam = wb.sys->weights.lambda_d();
    const double d = u.d_sigma();
    // f = u_01 (scalar coefficients suffice to separate the two readings)
    const int i0 = 0, j0 = std::min(1, u.dim() - 1);
    double chosen = 0.0, alternate = 0.0;
    for (int m = 0; m < u.dim(); ++m)
        for (int l = 0; l < u.dim(); ++l) {
            std::complex<double> acc_chosen = 0.0, acc_alt = 0.0;
            for (int t = 0; t < g.order; ++t) {
                const std::complex<double> f = u.operator_at(t)(i0, j0);
                acc_chosen += lam * std::conj(u.operator_at(t)(l, m)) * f;  // conj(u_lm)
                acc_alt += lam * std::conj(u.operator_at(t)(m, l)) * f;     // conj(u_ml)
            }
            const std::complex<double> expect = (l == i0 && m == j0) ? 1.0 / d : 0.0;
            chosen = std::max(chosen, std::abs(acc_chosen - expect));
            alternate = std::max(alternate, std::abs(acc_alt - expect));
        }
    ClaimReport r = claim("def12-reading", false, chosen, wb.cfg.tol.lemma,
                          {{"chosen_conj_u_ji_residual", chosen},
                           {"alternate_conj_u_ij_residual", alternate},
                           {"readings_diverge", alternate > wb.cfg.tol.lemma}});
    return r;
}

ClaimReport run_inversion(Workbench& wb) {
    if (wb.span.reps.empty())
        return not_applicable("inversion", "no irreducible inductions in sigma list");
    Rng rng = wb.rng_for("inversion");
    double worst = 0.0;
    for (int trial = 0; trial < kInversionSamples; ++trial) {
        const VectorFunction f = random_span_function(rng, wb.span, wb.cfg.space_dim);
        const VectorFunction back = synthesize(fourier_function(f, wb.span), wb.span);
        double acc = 0.0;
        const double lam = wb.sys->weights.lambda_d();
        for (std::size_t t = 0; t < f.values.size(); ++t)
            acc += lam * (f.values[t] - back.values[t]).squaredNorm();
        worst = std::max(worst, std::sqrt(acc));
    }
    json detail = wb.span_note;
    detail["samples"] = kInversionSamples;
    return claim("inversion", true, worst, wb.cfg.tol.inversion, detail);
}

ClaimReport run_plancherel(Workbench& wb) {
    if (wb.span.reps.empty())
        return not_applicable("plancherel", "no irreducible inductions in sigma list");
    Rng rng = wb.rng_for("plancherel");
    double worst = 0.0;
    for (int trial = 0; trial < kInversionSamples; ++trial) {
        const VectorFunction f = random_span_function(rng, wb.span, wb.cfg.space_dim);
        worst = std::max(worst, plancherel_gap(f, wb.span));
    }
    return claim("plancherel", true, worst, wb.cfg.tol.plancherel, wb.span_note);
}

ClaimReport run_parseval(Workbench& wb) {
    if (wb.span.reps.empty())
        return not_applicable("parseval", "no irreducible inductions in sigma list");
    Rng rng = wb.rng_for("parseval");
    double worst = 0.0;
    for (int trial = 0; trial < kInversionSamples; ++trial) {
        const VectorFunction f = random_span_function(rng, wb.span, wb.cfg.space_dim);
        const VectorFunction g2 = random_span_function(rng, wb.span, wb.cfg.space_dim);
        const ParsevalPair pair = parseval_inner(f, g2, wb.span);
        worst = std::max(worst, std::abs(pair.time_side - pair.spectral_side));
    }
    return claim("parseval", true, worst, wb.cfg.tol.plancherel);
}

ClaimReport run_s2_axioms(Workbench& wb) {
    if (wb.all.reps.empty()) return not_applicable("s2-inner-axioms", "no sigma configured");
    Rng rng = wb.rng_for("s2-inner-axioms");
    double worst = 0.0;
    for (int trial = 0; trial < kFieldPairs; ++trial) {
        const SpectralField phi = random_field(rng, wb.all, wb.cfg.space_dim);
        const SpectralField psi = random_field(rng, wb.all, wb.cfg.space_dim);
        const SpectralField chi = random_field(rng, wb.all, wb.cfg.space_dim);
        const std::complex<double> a = rng.cgaussian();

        const std::complex<double> pq = s2_inner(phi, psi);
        const std::complex<double> qp = s2_inner(psi, phi);
        const double scale = 1.0 + std::abs(pq);
        worst = std::max(worst, std::abs(pq - std::conj(qp)) / scale);

        const std::complex<double> lin =
            s2_inner(a * phi + chi, psi) - a * pq - s2_inner(chi, psi);
        worst = std::max(worst, std::abs(lin) / (1.0 + std::abs(a) * std::abs(pq)));

        const std::complex<double> pp = s2_inner(phi, phi);
        worst = std::max(worst, std::abs(pp.imag()) / (1.0 + pp.real()));
        const double n2 = snorm(phi, 2.0).value;
        worst = std::max(worst, std::abs(pp.real() - n2 * n2) / (1.0 + n2 * n2));

        const double cs = std::abs(pq) - n2 * snorm(psi, 2.0).value;
        worst = std::max(worst, std::max(0.0, cs) / (1.0 + std::abs(pq)));
    }
    return claim("s2-inner-axioms", true, worst, 1e-10, {{"pairs", kFieldPairs}});
}

ClaimReport run_norm_bound(Workbench& wb) {
    if (wb.all.reps.empty()) return not_applicable("norm-bound", "no sigma configured");
    Rng rng = wb.rng_for("norm-bound");
    const auto& g = wb.sys->group;
    double worst = 0.0;
    for (int trial = 0; trial < kNormBoundMeasures; ++trial) {
        VectorMeasure m = VectorMeasure::zero(g.order, wb.cfg.space_dim);
        for (auto& atom : m.atoms)
            if (rng.uniform() < 0.8) atom = rng.cvector(wb.cfg.space_dim);
        const NormBoundReport r =
            norm_bound_check(m, wb.all, wb.cfg.tol.norm_bound, wb.cfg.seed + trial);
        worst = std::max(worst, std::max(r.transform_sup_norm - r.measure_norm,
                                         r.linearity_residual));
    }
    // Equality witness: the point mass at the identity.
    VectorMeasure dirac =
        VectorMeasure::dirac(g.order, g.identity, rng.cvector(wb.cfg.space_dim));
    const NormBoundReport r = norm_bound_check(dirac, wb.all, wb.cfg.tol.norm_bound, wb.cfg.seed);
    const double equality_gap = std::abs(r.transform_sup_norm - r.measure_norm);
    worst = std::max(worst, equality_gap);

    // Injectivity on the span: a measure with span density is recovered.
    double inj = 0.0;
    if (!wb.span.reps.empty()) {
        const VectorFunction f = random_span_function(rng, wb.span, wb.cfg.space_dim);
        VectorMeasure md = VectorMeasure::zero(g.order, wb.cfg.space_dim);
        const double lam = wb.sys->weights.lambda_d();
        for (int t = 0; t < g.order; ++t) md.atoms[t] = lam * f.values[t];
        SpectralField field;
        for (const auto& u : wb.span.reps) field.blocks.push_back(fourier_stieltjes(md, u));
        const VectorFunction back = synthesize(field, wb.span);
        for (int t = 0; t < g.order; ++t)
            inj = std::max(inj, (back.values[t] - f.values[t]).cwiseAbs().maxCoeff());
    }
    return claim("norm-bound", true, std::max(worst, inj > wb.cfg.tol.inversion ? inj : 0.0),
                 wb.cfg.tol.norm_bound,
                 {{"measures", kNormBoundMeasures},
                  {"dirac_equality_gap", equality_gap},
                  {"span_injectivity_residual", inj}});
}

const std::vector<double>& p_grid() {
    static const std::vector<double> grid = {1.0, 1.5, 2.0, 3.0, kInfiniteP};
    return grid;
}

ClaimReport run_snorm_monotone(Workbench& wb) {
    if (wb.all.reps.empty()) return not_applicable("snorm-monotone", "no sigma configured");
    Rng rng = wb.rng_for("snorm-monotone");
    double worst = 0.0;
    for (int trial = 0; trial < kRandomFields; ++trial) {
        const SpectralField field = random_field(rng, wb.all, wb.cfg.space_dim);
        for (std::size_t a = 0; a < p_grid().size(); ++a)
            for (std::size_t b = a; b < p_grid().size(); ++b) {
                const MonotonicityResult r =
                    monotonicity_check(field, p_grid()[a], p_grid()[b]);
                worst = std::max(worst, r.norm_q - r.norm_p);
            }
    }
    return claim("snorm-monotone", true, std::max(0.0, worst), wb.cfg.tol.monotone,
                 {{"fields", kRandomFields}});
}

ClaimReport run_snorm_axioms(Workbench& wb) {
    if (wb.all.reps.empty()) return not_applicable("snorm-axioms", "no sigma configured");
    Rng rng = wb.rng_for("snorm-axioms");
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const SpectralField phi = random_field(rng, wb.all, wb.cfg.space_dim);
        const SpectralField psi = random_field(rng, wb.all, wb.cfg.space_dim);
        const std::complex<double> a = rng.cgaussian();
        for (double p : p_grid()) {
            const double np = snorm(phi, p).value;
            const double tri = snorm(phi + psi, p).value - np - snorm(psi, p).value;
            worst = std::max(worst, tri / (1.0 + np));
            const double hom = std::abs(snorm(a * phi, p).value - std::abs(a) * np);
            worst = std::max(worst, hom / (1.0 + std::abs(a) * np));
        }
    }
    return claim("snorm-axioms", true, std::max(0.0, worst), 1e-10);
}

ClaimReport run_truncation(Workbench& wb) {
    if (wb.all.reps.empty()) return not_applicable("truncation", "no sigma configured");
    Rng rng = wb.rng_for("truncation");
    double worst_scaled = 0.0;  // max over n of error * n, must stay < 1
    for (int trial = 0; trial < kTruncationFields; ++trial) {
        const SpectralField field = random_field(rng, wb.all, wb.cfg.space_dim);
        for (int n = 1; n <= kTruncationMaxN; ++n) {
            const SpectralField cut = truncate(field, n);
            const SpectralField diff = field + std::complex<double>(-1.0) * cut;
            const double err = snorm(diff, kInfiniteP).value;
            worst_scaled = std::max(worst_scaled, err * n);
        }
    }
    ClaimReport r;
    r.id = "truncation";
    r.asserted = true;
    r.max_residual = worst_scaled;
    r.status = worst_scaled < 1.0 ? "PASS" : "FAIL";  // strict bound err < 1/n
    r.detail = {{"fields", kTruncationFields}, {"max_n", kTruncationMaxN}};
    return r;
}

ClaimReport run_offspan(Workbench& wb) {
    if (wb.span.reps.empty())
        return not_applicable("plancherel-offspan", "no irreducible inductions", false);
    Rng rng = wb.rng_for("plancherel-offspan");
    const auto& g = wb.sys->group;
    double worst = 0.0, mean_share = 0.0;
    for (int trial = 0; trial < kOffspanSamples; ++trial) {
        const VectorFunction f = random_function(rng, g.order, wb.cfg.space_dim);
        const ProjectionResult pr = project_span(f, wb.span);
        const double gap = plancherel_gap(f, wb.span);
        // Pythagoras: the gap is exactly the squared mass outside the span.
        worst = std::max(worst, std::abs(gap - pr.residual * pr.residual));
        const double n2 = std::pow(f.l2_norm(wb.sys->weights), 2);
        mean_share += (n2 > 0 ? gap / n2 : 0.0) / kOffspanSamples;
    }
    return claim("plancherel-offspan", false, worst, wb.cfg.tol.plancherel,
                 {{"mean_offspan_share", mean_share}});
}

using ClaimFn = std::function<ClaimReport(Workbench&)>;

const std::vector<std::pair<std::string, ClaimFn>>& registry() {
    static const std::vector<std::pair<std::string, ClaimFn>> reg = {
        {"def12-reading", run_def12_reading},
        {"eq1-weil", run_weil},
        {"eq10-ctensor-delta", run_ctensor_delta},
        {"eq2-schur", run_schur_same},
        {"eq3-schur-cross", run_schur_cross},
        {"eq8-ctensor", run_ctensor_contract},
        {"eq9-cross-sigma", run_cross_sigma},
        {"induced-homomorphism", run_induced_homomorphism},
        {"induced-identity", run_induced_identity},
        {"induced-unitarity", run_induced_unitarity},
        {"inversion", run_inversion},
        {"lemma-uhat", run_lemma},
        {"norm-bound", run_norm_bound},
        {"parseval", run_parseval},
        {"plancherel", run_plancherel},
        {"plancherel-offspan", run_offspan},
        {"project-idempotent", run_project_idempotent},
        {"s2-inner-axioms", run_s2_axioms},
        {"snorm-axioms", run_snorm_axioms},
        {"snorm-monotone", run_snorm_monotone},
        {"truncation", run_truncation},
    };
    return reg;
}

}  // namespace

VerifyConfig verify_config_from_json(const json& j, const std::string& base_dir) {
    VerifyConfig cfg;
    const std::string group_path = j.at("group").get<std::string>();
    std::filesystem::path p(group_path);
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    cfg.group = load_group(p.string());
    if (j.contains("subgroup")) cfg.generators = generators_from_json(j.at("subgroup"));
    if (j.contains("sigmas")) cfg.sigma_names = j.at("sigmas").get<std::vector<std::string>>();
    cfg.space_dim = j.value("space_dim", 1);
    cfg.seed = j.value("seed", 2024ULL);
    if (j.contains("claims")) cfg.claims = j.at("claims").get<std::vector<std::string>>();

    double fallback = 0.0;
    bool has_fallback = false;
    if (const char* env = std::getenv("FST_TOLERANCE")) {
        fallback = std::atof(env);
        has_fallback = fallback > 0.0;
    }
    auto pick = [&](const char* key, double spec_default) {
        if (j.contains("tolerance") && j.at("tolerance").contains(key))
            return j.at("tolerance").at(key).get<double>();
        return has_fallback ? fallback : spec_default;
    };
    cfg.tol.weil = pick("weil", cfg.tol.weil);
    cfg.tol.schur = pick("schur", cfg.tol.schur);
    cfg.tol.induced = pick("induced", cfg.tol.induced);
    cfg.tol.idempotent = pick("idempotent", cfg.tol.idempotent);
    cfg.tol.ctensor = pick("ctensor", cfg.tol.ctensor);
    cfg.tol.lemma = pick("lemma", cfg.tol.lemma);
    cfg.tol.inversion = pick("inversion", cfg.tol.inversion);
    cfg.tol.plancherel = pick("plancherel", cfg.tol.plancherel);
    cfg.tol.norm_bound = pick("norm_bound", cfg.tol.norm_bound);
    cfg.tol.monotone = pick("monotone", cfg.tol.monotone);
    return cfg;
}

VerifyConfig load_verify_config(const std::string& path) {
    return verify_config_from_json(load_json(path),
                                   std::filesystem::path(path).parent_path().string());
}

std::vector<ClaimReport> run_verification(const VerifyConfig& config) {
    Workbench wb = make_workbench(config);
    std::vector<ClaimReport> reports;
    for (const auto& [id, fn] : registry()) {
        if (!config.claims.empty() &&
            std::find(config.claims.begin(), config.claims.end(), id) == config.claims.end())
            continue;
        reports.push_back(fn(wb));
    }
    std::sort(reports.begin(), reports.end(),
              [](const ClaimReport& a, const ClaimReport& b) { return a.id < b.id; });
    return reports;
}

json report_to_json(const VerifyConfig& config, const std::vector<ClaimReport>& claims) {
    json rows = json::array();
    for (const auto& c : claims)
        rows.push_back({{"claim", c.id},
                        {"status", c.status},
                        {"asserted", c.asserted},
                        {"max_residual", c.max_residual},
                        {"detail", c.detail}});
    return json{{"schema_version", 1},
                {"group", config.group.name},
                {"order", config.group.order},
                {"generators", config.generators},
                {"sigmas", config.sigma_names},
                {"space_dim", config.space_dim},
                {"seed", config.seed},
                {"claims", rows}};
}

int report_exit_code(const std::vector<ClaimReport>& claims) {
    for (const auto& c : claims)
        if (c.asserted && c.status == "FAIL") return 1;
    return 0;
}

}  // namespace fst
