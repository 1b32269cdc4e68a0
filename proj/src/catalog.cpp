#include "fst/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>

namespace fst {

namespace {

using cd = std::complex<double>;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

cd root_of_unity(int num, int den) {
    const int r = ((num % den) + den) % den;
    if (4 * r % den == 0) {  // axis values come out exact
        switch (4 * r / den) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
        }
    }
    const double arg = 2.0 * M_PI * r / den;
    return {std::cos(arg), std::sin(arg)};
}

/// Minimal-index element of K of the requested order, or -1.
int find_of_order(const FiniteGroup& g, const Subgroup& k, int order) {
    for (int e = 0; e < g.order; ++e)
        if (k.contains(e) && g.element_order(e) == order) return e;
    return -1;
}

struct CyclicShape {
    int n;
    int gen;
    std::vector<int> power;  // element -> exponent p with gen^p = element
};

std::optional<CyclicShape> cyclic_shape(const FiniteGroup& g, const Subgroup& k) {
    const int n = k.size();
    int gen = -1;
    for (int e = 0; e < g.order; ++e)
        if (k.contains(e) && g.element_order(e) == n) {
            gen = e;
            break;
        }
    if (gen < 0) return std::nullopt;
    CyclicShape shape{n, gen, std::vector<int>(g.order, -1)};
    int x = g.identity;
    for (int p = 0; p < n; ++p) {
        shape.power[x] = p;
        x = g.mul(x, gen);
    }
    return shape;
}

struct DihedralShape {
    int n;
    int rot, refl;
    // element -> (a, b) with element = refl^a rot^b
    std::vector<std::pair<int, int>> word;
};

std::optional<DihedralShape> dihedral_shape(const FiniteGroup& g, const Subgroup& k) {
    const int size = k.size();
    if (size % 2 != 0 || size < 6) return std::nullopt;
    const int n = size / 2;
    const int rot = find_of_order(g, k, n);
    if (rot < 0) return std::nullopt;

    std::vector<int> rot_pow(n);
    {
        int x = g.identity;
        for (int p = 0; p < n; ++p) {
            rot_pow[p] = x;
            x = g.mul(x, rot);
        }
        if (x != g.identity) return std::nullopt;
    }
    std::vector<char> in_c(g.order, 0);
    for (int e : rot_pow) in_c[e] = 1;

    int refl = -1;
    for (int e = 0; e < g.order; ++e)
        if (k.contains(e) && !in_c[e] && (refl < 0 || e < refl)) refl = e;
    if (refl < 0 || g.element_order(refl) != 2) return std::nullopt;
    // refl must invert the rotation: refl * rot * refl = rot^-1
    if (g.mul(g.mul(refl, rot), refl) != g.inv(rot)) return std::nullopt;

    DihedralShape shape{n, rot, refl, std::vector<std::pair<int, int>>(g.order, {-1, -1})};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < n; ++b) {
            const int e = (a == 0) ? rot_pow[b] : g.mul(refl, rot_pow[b]);
            shape.word[e] = {a, b};
        }
    for (int e : k.members)
        if (shape.word[e].first < 0) return std::nullopt;
    return shape;
}

UnitaryRep build(const FiniteGroup& g, const Subgroup& k,
                 const std::function<Eigen::MatrixXcd(int)>& matrix_at) {
    std::vector<Eigen::MatrixXcd> mats;
    mats.reserve(k.size());
    for (int e : k.members) mats.push_back(matrix_at(e));
    return validate_unitary_rep(g, k, std::move(mats));
}

UnitaryRep cyclic_character(const FiniteGroup& g, const Subgroup& k, const CyclicShape& shape,
                            int j) {
    return build(g, k, [&](int e) {
        Eigen::MatrixXcd m(1, 1);
        m(0, 0) = root_of_unity(j * shape.power[e], shape.n);
        return m;
    });
}

UnitaryRep dihedral_one_dim(const FiniteGroup& g, const Subgroup& k, const DihedralShape& shape,
                            bool flip_refl, bool flip_rot) {
    return build(g, k, [&](int e) {
        const auto [a, b] = shape.word[e];
        double v = 1.0;
        if (flip_refl && a % 2 == 1) v = -v;
        if (flip_rot && b % 2 == 1) v = -v;
        Eigen::MatrixXcd m(1, 1);
        m(0, 0) = v;
        return m;
    });
}

UnitaryRep dihedral_two_dim(const FiniteGroup& g, const Subgroup& k, const DihedralShape& shape,
                            int h) {
    return build(g, k, [&](int e) {
        const auto [a, b] = shape.word[e];
        const cd wp = root_of_unity(h * b, shape.n);
        const cd wm = root_of_unity(-h * b, shape.n);
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
        if (a == 0) {
            m(0, 0) = wp;
            m(1, 1) = wm;
        } else {
            m(0, 1) = wm;
            m(1, 0) = wp;
        }
        return m;
    });
}

}  // namespace

const UnitaryRep& IrrepFamily::find(const std::string& label) const {
    for (const auto& [name, rep] : items)
        if (name == label) return rep;
    throw Error("no representation labelled '" + label + "' in family");
}

UnitaryRep catalog_rep(const FiniteGroup& g, const Subgroup& k, const std::string& name) {
    auto parts = split(name, ':');

    if (parts.size() == 1 && parts[0] == "trivial")
        return build(g, k, [&](int) { return Eigen::MatrixXcd::Identity(1, 1); });

    if (parts[0] == "s3") {
        if (k.size() != 6) throw Error("'" + name + "' requires a subgroup of order 6");
        if (parts.size() != 2) throw Error("bad catalog name '" + name + "'");
        if (parts[1] == "triv") return catalog_rep(g, k, "trivial");
        if (parts[1] == "sign") return catalog_rep(g, k, "dihedral:3:sign");
        if (parts[1] == "std") return catalog_rep(g, k, "dihedral:3:rho1");
        throw Error("unknown S3 representation '" + name + "'");
    }

    if (parts[0] == "cyclic") {
        if (parts.size() != 3 || parts[2].rfind("chi", 0) != 0)
            throw Error("bad catalog name '" + name + "'");
        const int n = std::stoi(parts[1]);
        const int j = std::stoi(parts[2].substr(3));
        if (k.size() != n) throw Error("'" + name + "' requires a subgroup of order " + parts[1]);
        const auto shape = cyclic_shape(g, k);
        if (!shape) throw Error("subgroup is not cyclic; cannot build '" + name + "'");
        return cyclic_character(g, k, *shape, ((j % n) + n) % n);
    }

    if (parts[0] == "dihedral") {
        if (parts.size() != 3) throw Error("bad catalog name '" + name + "'");
        const int n = std::stoi(parts[1]);
        if (k.size() != 2 * n)
            throw Error("'" + name + "' requires a subgroup of order " + std::to_string(2 * n));
        const auto shape = dihedral_shape(g, k);
        if (!shape || shape->n != n)
            throw Error("subgroup is not dihedral of order " + std::to_string(2 * n));
        const std::string& which = parts[2];
        if (which == "triv") return dihedral_one_dim(g, k, *shape, false, false);
        if (which == "sign") return dihedral_one_dim(g, k, *shape, true, false);
        if (which == "sgn2" || which == "sgn3") {
            if (n % 2 != 0) throw Error("'" + name + "' exists only for even n");
            return dihedral_one_dim(g, k, *shape, which == "sgn3", true);
        }
        if (which.rfind("rho", 0) == 0) {
            const int h = std::stoi(which.substr(3));
            if (h < 1 || 2 * h >= n) throw Error("rho index out of range in '" + name + "'");
            return dihedral_two_dim(g, k, *shape, h);
        }
        throw Error("unknown dihedral representation '" + name + "'");
    }

    throw Error("unknown catalog name '" + name + "'");
}

IrrepFamily catalog_all(const FiniteGroup& g, const Subgroup& k) {
    IrrepFamily fam;
    if (auto cyc = cyclic_shape(g, k)) {
        for (int j = 0; j < cyc->n; ++j) {
            const std::string label = "cyclic:" + std::to_string(cyc->n) + ":chi" + std::to_string(j);
            fam.items.emplace_back(label, cyclic_character(g, k, *cyc, j));
        }
    } else if (auto dih = dihedral_shape(g, k)) {
        const int n = dih->n;
        const std::string base = "dihedral:" + std::to_string(n) + ":";
        fam.items.emplace_back(base + "triv", dihedral_one_dim(g, k, *dih, false, false));
        fam.items.emplace_back(base + "sign", dihedral_one_dim(g, k, *dih, true, false));
        if (n % 2 == 0) {
            fam.items.emplace_back(base + "sgn2", dihedral_one_dim(g, k, *dih, false, true));
            fam.items.emplace_back(base + "sgn3", dihedral_one_dim(g, k, *dih, true, true));
        }
        for (int h = 1; 2 * h < n; ++h)
            fam.items.emplace_back(base + "rho" + std::to_string(h),
                                   dihedral_two_dim(g, k, *dih, h));
    } else {
        throw Error("no built-in irrep catalog for this subgroup shape");
    }

    for (const auto& [label, rep] : fam.items)
        if (!is_irreducible(rep))
            throw Error("catalog bug: '" + label + "' is not irreducible");
    for (std::size_t a = 0; a < fam.items.size(); ++a)
        for (std::size_t b = a + 1; b < fam.items.size(); ++b)
            if (equivalence_check(fam.items[a].second, fam.items[b].second))
                throw Error("catalog bug: '" + fam.items[a].first + "' and '" +
                            fam.items[b].first + "' are equivalent");
    return fam;
}

}  // namespace fst
