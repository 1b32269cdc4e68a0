#include "fst/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace fst {

namespace {

std::complex<double> complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("complex values must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("in '" + path + "': " + e.what());
    }
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

FiniteGroup group_from_json(const json& j) {
    if (!j.contains("table")) throw ParseError("group spec lacks a 'table' field");
    std::vector<std::vector<int>> table;
    try {
        table = j.at("table").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad 'table' field: ") + e.what());
    }
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
        throw ParseError("'order' disagrees with the table size");
    return validate_group(table, j.value("name", ""));
}

FiniteGroup load_group(const std::string& path) { return group_from_json(load_json(path)); }

json group_to_json(const FiniteGroup& g) {
    json j;
    j["name"] = g.name;
    j["order"] = g.order;
    j["table"] = g.table;
    return j;
}

std::vector<int> generators_from_json(const json& j) {
    if (!j.contains("generators")) throw ParseError("subgroup spec lacks 'generators'");
    return j.at("generators").get<std::vector<int>>();
}

UnitaryRep rep_from_json(const FiniteGroup& g, const Subgroup& k, const json& j) {
    const int d = j.at("dim").get<int>();
    const auto& matrices = j.at("matrices");
    std::vector<Eigen::MatrixXcd> mats(k.size());
    for (int e : k.members) {
        const std::string key = std::to_string(e);
        if (!matrices.contains(key))
            throw ParseError("rep spec lacks a matrix for subgroup element " + key);
        const auto& rows = matrices.at(key);
        if (static_cast<int>(rows.size()) != d)
            throw ParseError("matrix for element " + key + " has wrong row count");
        Eigen::MatrixXcd m(d, d);
        for (int r = 0; r < d; ++r) {
            if (static_cast<int>(rows[r].size()) != d)
                throw ParseError("matrix for element " + key + " has wrong column count");
            for (int c = 0; c < d; ++c) m(r, c) = complex_from_json(rows[r][c]);
        }
        mats[k.rank(e)] = std::move(m);
    }
    return validate_unitary_rep(g, k, std::move(mats));
}

UnitaryRep load_rep(const FiniteGroup& g, const Subgroup& k, const std::string& path) {
    return rep_from_json(g, k, load_json(path));
}

VectorMeasure measure_from_json(const json& j, int order) {
    const int dim_a = j.at("space_dim").get<int>();
    if (dim_a < 1) throw ParseError("space_dim must be >= 1");
    VectorMeasure m = VectorMeasure::zero(order, dim_a);
    if (j.contains("atoms")) {
        for (const auto& [key, value] : j.at("atoms").items()) {
            const int t = std::stoi(key);
            if (t < 0 || t >= order)
                throw ParseError("atom index " + key + " out of range");
            if (static_cast<int>(value.size()) != dim_a)
                throw ParseError("atom " + key + " has wrong dimension");
            for (int a = 0; a < dim_a; ++a) m.atoms[t][a] = complex_from_json(value[a]);
        }
    }
    return m;
}

VectorMeasure load_measure(const std::string& path, int order) {
    return measure_from_json(load_json(path), order);
}

json spectral_to_json(const SpectralField& field) {
    json blocks = json::object();
    for (const auto& block : field.blocks) {
        json coeffs = json::array();
        for (int i = 0; i < block.n; ++i) {
            json row = json::array();
            for (int j2 = 0; j2 < block.n; ++j2) {
                json entry = json::array();
                for (int a = 0; a < block.dim_a; ++a)
                    entry.push_back(complex_to_json(block.at(i, j2)[a]));
                row.push_back(entry);
            }
            coeffs.push_back(row);
        }
        blocks[block.label] = {{"N", block.n},
                               {"d_sigma", block.d_sigma},
                               {"space_dim", block.dim_a},
                               {"coeffs", coeffs}};
    }
    return json{{"schema_version", 1}, {"blocks", blocks}};
}

}  // namespace fst
