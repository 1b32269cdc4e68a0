#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "fst/transform.hpp"

namespace fst {

using json = nlohmann::json;

/// {"order": n, "table": [[...]], "name": str}
FiniteGroup group_from_json(const json& j);
FiniteGroup load_group(const std::string& path);
json group_to_json(const FiniteGroup& g);

/// {"generators": [indices]}
std::vector<int> generators_from_json(const json& j);

/// {"dim": d, "matrices": {"<element-index>": [[[re,im],...],...]}}
UnitaryRep rep_from_json(const FiniteGroup& g, const Subgroup& k, const json& j);
UnitaryRep load_rep(const FiniteGroup& g, const Subgroup& k, const std::string& path);

/// {"space_dim": d_A, "atoms": {"<element-index>": [[re,im],...]}}
VectorMeasure measure_from_json(const json& j, int order);
VectorMeasure load_measure(const std::string& path, int order);

json spectral_to_json(const SpectralField& field);

json load_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace fst
