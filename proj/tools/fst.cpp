#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "fst/io.hpp"
#include "fst/verify.hpp"

namespace {

std::vector<int> parse_generators(const std::string& file, const std::string& inline_list) {
    if (!file.empty()) return fst::generators_from_json(fst::load_json(file));
    std::vector<int> gens;
    std::size_t start = 0;
    while (start < inline_list.size()) {
        const auto pos = inline_list.find(',', start);
        const std::string tok = inline_list.substr(start, pos - start);
        if (!tok.empty()) gens.push_back(std::stoi(tok));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return gens;
}

int cmd_validate(const std::string& group_path, const std::string& sub_file,
                 const std::string& sub_inline) {
    const fst::FiniteGroup g = fst::load_group(group_path);
    std::cout << "group: " << (g.name.empty() ? group_path : g.name) << "\n";
    std::cout << "order " << g.order << ", identity " << g.identity << "\n";
    if (!sub_file.empty() || !sub_inline.empty()) {
        const auto gens = parse_generators(sub_file, sub_inline);
        const fst::Subgroup k = fst::subgroup_closure(g, gens);
        const fst::CosetStructure cs = fst::coset_decompose(g, k);
        std::cout << "subgroup order " << k.size() << ", [G:K]=" << cs.index() << "\n";
        std::cout << "coset representatives:";
        for (int r : cs.reps) std::cout << " " << r;
        std::cout << "\n";
    }
    return 0;
}

int cmd_transform(const std::string& group_path, const std::string& sub_file,
                  const std::string& sub_inline, const std::vector<std::string>& sigmas,
                  const std::string& measure_path, const std::string& out_path, bool density) {
    const fst::FiniteGroup g = fst::load_group(group_path);
    auto sys = fst::GroupSystem::make(g, parse_generators(sub_file, sub_inline));

    fst::SigmaSystem system;
    for (const auto& name : sigmas) {
        fst::UnitaryRep rep = name.rfind("file:", 0) == 0
                                  ? fst::load_rep(sys->group, sys->sub, name.substr(5))
                                  : fst::catalog_rep(sys->group, sys->sub, name);
        system.reps.push_back(fst::induce(sys, std::move(rep), name));
    }

    const fst::VectorMeasure m = fst::load_measure(measure_path, g.order);
    fst::SpectralField field;
    if (density) {
        fst::VectorFunction f;
        f.dim_a = m.dim_a;
        f.values = m.atoms;
        field = fst::fourier_function(f, system);
    } else {
        field = fst::fourier_stieltjes(m, system);
    }
    const std::string text = fst::spectral_to_json(field).dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        fst::write_text(out_path, text);
    return 0;
}

int cmd_verify(const std::string& config_path, const std::string& out_path) {
    const fst::VerifyConfig cfg = fst::load_verify_config(config_path);
    const auto claims = fst::run_verification(cfg);
    for (const auto& c : claims) {
        std::printf("[%s] %-22s max_residual=%.3e%s\n", c.status.c_str(), c.id.c_str(),
                    c.max_residual, c.asserted ? "" : "  (report-only)");
    }
    if (!out_path.empty())
        fst::write_text(out_path, fst::report_to_json(cfg, claims).dump(2) + "\n");
    return fst::report_exit_code(claims);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier-Stieltjes transforms on finite groups via induced representations"};
    app.require_subcommand(1);

    std::string group_path, sub_file, sub_inline, measure_path, out_path, config_path;
    std::vector<std::string> sigmas;
    bool density = false;

    auto* validate = app.add_subcommand("validate", "check a group table and report its shape");
    validate->add_option("group", group_path, "group spec JSON")->required();
    validate->add_option("--subgroup", sub_file, "subgroup spec JSON ({\"generators\": [...]})");
    validate->add_option("--generators", sub_inline, "comma-separated generator indices");

    auto* transform = app.add_subcommand("transform", "transform a measure into spectral blocks");
    transform->add_option("--group", group_path, "group spec JSON")->required();
    transform->add_option("--subgroup", sub_file, "subgroup spec JSON");
    transform->add_option("--generators", sub_inline, "comma-separated generator indices");
    transform->add_option("--sigma", sigmas, "catalog name or file:<rep.json>; repeatable")
        ->required();
    transform->add_option("--measure", measure_path, "measure spec JSON")->required();
    transform->add_option("--out", out_path, "output path (stdout when omitted)");
    transform->add_flag("--density", density,
                        "treat the atoms as a function f and transform f dlambda");

    auto* verify = app.add_subcommand("verify", "run the claim-verification suite");
    verify->add_option("--config", config_path, "verify config JSON")->required();
    verify->add_option("--out", out_path, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(validate))
            return cmd_validate(group_path, sub_file, sub_inline);
        if (app.got_subcommand(transform))
            return cmd_transform(group_path, sub_file, sub_inline, sigmas, measure_path,
                                 out_path, density);
        if (app.got_subcommand(verify)) return cmd_verify(config_path, out_path);
    } catch (const fst::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
