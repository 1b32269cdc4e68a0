#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "fst/builtins.hpp"
#include "fst/catalog.hpp"
#include "fst/io.hpp"
#include "fst/transform.hpp"

namespace fst {

/// Residual thresholds for the claim suite. Defaults are the contract
/// values; a config may override individual entries, and FST_TOLERANCE
/// replaces the unset ones wholesale when exported.
struct ToleranceSet {
    double weil = 1e-12;
    double schur = 1e-10;
    double induced = 1e-10;
    double idempotent = 1e-12;
    double ctensor = 1e-10;
    double lemma = 1e-10;
    double inversion = 1e-9;
    double plancherel = 1e-9;
    double norm_bound = 1e-10;
    double monotone = 1e-12;
};

struct VerifyConfig {
    FiniteGroup group;
    std::vector<int> generators;
    std::vector<std::string> sigma_names;  // catalog names or file:<path>
    int space_dim = 1;
    std::uint64_t seed = 2024;
    ToleranceSet tol;
    std::vector<std::string> claims;  // empty selects every claim
};

/// One row of the verification report. Claims marked asserted
/// participate in the exit code; the rest are informational (the
/// cross-sigma vanishing claim can genuinely fail).
struct ClaimReport {
    std::string id;
    std::string status;  // PASS / FAIL / NOT-APPLICABLE
    bool asserted = true;
    double max_residual = 0.0;
    json detail;
};

/// Parses the verify config JSON:
/// {"group": path, "subgroup": {"generators": [...]}, "sigmas": [...],
///  "space_dim": n, "seed": n, "tolerance": {...}, "claims": [...]}
/// The group path is resolved relative to the config file directory.
VerifyConfig verify_config_from_json(const json& j, const std::string& base_dir = "");
VerifyConfig load_verify_config(const std::string& path);

std::vector<ClaimReport> run_verification(const VerifyConfig& config);

json report_to_json(const VerifyConfig& config, const std::vector<ClaimReport>& claims);

/// 0 iff no asserted claim failed.
int report_exit_code(const std::vector<ClaimReport>& claims);

}  // namespace fst
