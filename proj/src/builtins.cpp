#include "fst/builtins.hpp"

#include <algorithm>
#include <array>

namespace fst {

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

std::vector<std::vector<int>> s3_table() {
    // Permutations of {0,1,2} in lexicographic one-line order; product is
    // composition (p*q)(x) = p(q(x)).
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            t[a][b] = index_of(c);
        }
    return t;
}

std::vector<std::vector<int>> d4_table() {
    // Element index a*4 + b encodes s^a r^b; r s = s r^-1.
    auto mul = [](int x, int y) {
        const int a = x / 4, b = x % 4, c = y / 4, d = y % 4;
        const int bb = (c == 0) ? b : (4 - b) % 4;
        return ((a + c) % 2) * 4 + (bb + d) % 4;
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) t[x][y] = mul(x, y);
    return t;
}

}  // namespace

FiniteGroup builtin_group(const std::string& name) {
    if (name.rfind("cyclic:", 0) == 0) {
        const int n = std::stoi(name.substr(7));
        if (n < 1 || n > 256) throw Error("cyclic order out of range in '" + name + "'");
        return validate_group(cyclic_table(n), name);
    }
    if (name == "s3") return validate_group(s3_table(), name);
    if (name == "d4") return validate_group(d4_table(), name);
    throw Error("unknown builtin group '" + name + "'");
}

std::shared_ptr<const GroupSystem> builtin_instance(const std::string& name) {
    if (name == "z4_z2") return GroupSystem::make(builtin_group("cyclic:4"), {2});
    if (name == "s3_a3") return GroupSystem::make(builtin_group("s3"), {3});
    if (name == "s3_tau") return GroupSystem::make(builtin_group("s3"), {1});
    if (name == "d4_c4") return GroupSystem::make(builtin_group("d4"), {1});
    if (name == "z6_z3") return GroupSystem::make(builtin_group("cyclic:6"), {2});
    if (name == "s3_s3") return GroupSystem::make(builtin_group("s3"), {1, 3});
    if (name == "d4_d4") return GroupSystem::make(builtin_group("d4"), {1, 4});
    if (name == "s3_e") return GroupSystem::make(builtin_group("s3"), std::vector<int>{});
    throw Error("unknown builtin instance '" + name + "'");
}

const std::vector<std::string>& builtin_instance_names() {
    static const std::vector<std::string> names = {"z4_z2", "s3_a3", "s3_tau", "d4_c4", "z6_z3"};
    return names;
}

}  // namespace fst
