#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <complex>
#include <set>

#include "fst/builtins.hpp"
#include "fst/group.hpp"
#include "fst/rng.hpp"

using namespace fst;

namespace {

// Independent oracle: S3 as explicit permutation composition.
std::vector<std::vector<int>> s3_oracle_table() {
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::vector<std::vector<int>> t(6, std::vector<int>(6, -1));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            for (int i = 0; i < 6; ++i)
                if (perms[i] == c) t[a][b] = i;
        }
    return t;
}

}  // namespace

TEST_CASE("trivial and Z/2 groups validate") {
    const FiniteGroup one = validate_group({{0}});
    CHECK(one.order == 1);
    CHECK(one.identity == 0);

    const FiniteGroup z2 = validate_group({{0, 1}, {1, 0}});
    CHECK(z2.order == 2);
    CHECK(z2.inverse == std::vector<int>{0, 1});
}

TEST_CASE("S3 from permutation composition") {
    const FiniteGroup s3 = validate_group(s3_oracle_table(), "s3");
    CHECK(s3.order == 6);
    int involutions = 0, order3 = 0;
    for (int a = 0; a < 6; ++a) {
        const int o = s3.element_order(a);
        if (o == 2) ++involutions;
        if (o == 3) ++order3;
    }
    CHECK(involutions == 3);
    CHECK(order3 == 2);
    // the builtin table is the same enumeration
    CHECK(builtin_group("s3").table == s3.table);
}

TEST_CASE("validation errors name the violation") {
    CHECK_THROWS_AS(validate_group({{0, 0}, {1, 1}}), NotLatinSquare);
    CHECK_THROWS_AS(validate_group({{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}), NoIdentity);

    // smallest nonassociative loop (order 5)
    const std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                                {1, 0, 3, 4, 2},
                                                {2, 3, 4, 0, 1},
                                                {3, 4, 1, 2, 0},
                                                {4, 2, 0, 1, 3}};
    CHECK_THROWS_AS(validate_group(loop), NotAssociative);

    std::vector<std::vector<int>> big(300, std::vector<int>(300, 0));
    CHECK_THROWS_AS(validate_group(big), Error);
}

TEST_CASE("subgroup closure") {
    const FiniteGroup s3 = builtin_group("s3");

    const Subgroup trivial = subgroup_closure(s3, {});
    CHECK(trivial.members == std::vector<int>{0});

    const Subgroup a3 = subgroup_closure(s3, {3});
    CHECK(a3.size() == 3);
    // exhaustive closure oracle: product of any two members is a member
    for (int a : a3.members)
        for (int b : a3.members) CHECK(a3.contains(s3.mul(a, b)));
    CHECK(a3.contains(0));
    CHECK(a3.contains(3));
    CHECK(a3.contains(4));

    std::vector<int> all(6);
    for (int i = 0; i < 6; ++i) all[i] = i;
    CHECK(subgroup_closure(s3, all).size() == 6);

    CHECK_THROWS_AS(subgroup_closure(s3, {9}), Error);
}

TEST_CASE("Lagrange holds for every closure in S3 and D4") {
    for (const auto& name : {std::string("s3"), std::string("d4")}) {
        const FiniteGroup g = builtin_group(name);
        for (int a = 0; a < g.order; ++a) {
            const Subgroup k = subgroup_closure(g, {a});
            CHECK(g.order % k.size() == 0);
        }
    }
}

TEST_CASE("coset decomposition") {
    const FiniteGroup s3 = builtin_group("s3");

    SUBCASE("K = G gives a single coset") {
        const Subgroup k = subgroup_closure(s3, {1, 3});
        const CosetStructure cs = coset_decompose(s3, k);
        CHECK(cs.reps == std::vector<int>{0});
    }
    SUBCASE("K = {e} separates every element") {
        const Subgroup k = subgroup_closure(s3, {});
        const CosetStructure cs = coset_decompose(s3, k);
        CHECK(cs.index() == 6);
        for (int g = 0; g < 6; ++g) CHECK(cs.factor[g] == std::pair<int, int>{g, 0});
    }
    SUBCASE("S3 / A3 partitions into A3 and the transpositions") {
        const Subgroup a3 = subgroup_closure(s3, {3});
        const CosetStructure cs = coset_decompose(s3, a3);
        CHECK(cs.index() == 2);
        CHECK(cs.reps[0] == 0);
        CHECK(cs.reps[1] == 1);
        // partition oracle
        std::set<int> even{0, 3, 4}, odd{1, 2, 5};
        for (int g : even) CHECK(cs.coset_of(g) == 0);
        for (int g : odd) CHECK(cs.coset_of(g) == 1);
    }
    SUBCASE("factor round-trips for every element") {
        for (const auto& inst : {"z4_z2", "s3_a3", "s3_tau", "d4_c4", "z6_z3"}) {
            auto sys = builtin_instance(inst);
            for (int g = 0; g < sys->group.order; ++g) {
                const auto [r, k] = sys->cosets.factor[g];
                CHECK(sys->group.mul(sys->cosets.reps[r], k) == g);
                CHECK(sys->sub.contains(k));
            }
        }
    }
}

TEST_CASE("haar weights and exact integration") {
    const FiniteGroup s3 = builtin_group("s3");
    const Subgroup a3 = subgroup_closure(s3, {3});
    const HaarWeights w = haar_weights(s3, a3);

    CHECK(w.nu == Rational(1, 3));
    CHECK(w.mu == Rational(1));
    CHECK(w.lambda == Rational(1, 3));

    // lambda(G) = [G:K], exact in rational arithmetic
    const Rational total = integrate(s3, w, [](int) { return Rational(1); });
    CHECK(total == Rational(2));

    const Rational atom = integrate(s3, w, [](int t) { return Rational(t == 4 ? 1 : 0); });
    CHECK(atom == Rational(1, 3));

    const Rational zero = integrate(s3, w, [](int) { return Rational(0); });
    CHECK(zero == Rational(0));
}

TEST_CASE("quotient integration identity") {
    SUBCASE("independent double-sum oracle on Z/4 over {0,2}") {
        const FiniteGroup z4 = builtin_group("cyclic:4");
        const Subgroup k = subgroup_closure(z4, {2});
        Rng rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::complex<double>> f(4);
            for (auto& v : f) v = rng.cgaussian();
            // lhs and rhs computed from scratch
            std::complex<double> lhs = 0.0, rhs = 0.0;
            for (int t = 0; t < 4; ++t) lhs += 0.5 * f[t];
            for (int r : {0, 1})
                for (int kk : {0, 2}) rhs += 0.5 * f[(r + kk) % 4];
            CHECK(std::abs(lhs - rhs) <= 1e-12);
            CHECK(weil_check(z4, k, [&](int t) { return f[t]; }) <= 1e-12);
        }
    }
    SUBCASE("constant functions are exact") {
        const FiniteGroup z6 = builtin_group("cyclic:6");
        const Subgroup k = subgroup_closure(z6, {2});
        CHECK(weil_check(z6, k, [](int) { return std::complex<double>(3.25, -1.5); }) == 0.0);
    }
    SUBCASE("random complex functions on S3 over A3") {
        const FiniteGroup s3 = builtin_group("s3");
        const Subgroup a3 = subgroup_closure(s3, {3});
        Rng rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::complex<double>> f(6);
            for (auto& v : f) v = rng.cgaussian();
            CHECK(weil_check(s3, a3, [&](int t) { return f[t]; }) <= 1e-12);
        }
    }
    SUBCASE("exact in rational arithmetic") {
        const FiniteGroup z4 = builtin_group("cyclic:4");
        const Subgroup k = subgroup_closure(z4, {2});
        // rational-valued f: both sides agree exactly, via the residual of
        // two independently computed rational sums
        const HaarWeights w = haar_weights(z4, k);
        const CosetStructure cs = coset_decompose(z4, k);
        auto f = [](int t) { return Rational(t + 1, 7); };
        Rational lhs(0), rhs(0);
        for (int t = 0; t < 4; ++t) lhs += w.lambda * f(t);
        for (int r : cs.reps)
            for (int kk : k.members) rhs += w.mu * w.nu * f(z4.mul(r, kk));
        CHECK(lhs == rhs);
    }
}
