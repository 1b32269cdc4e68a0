#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "fst/builtins.hpp"
#include "fst/rng.hpp"
#include "fst/spaces.hpp"

using namespace fst;
using cd = std::complex<double>;

namespace {

SpectralBlock random_block(Rng& rng, const std::string& label, int d_sigma, int n, int dim_a,
                           double scale = 1.0) {
    SpectralBlock b = SpectralBlock::zero(label, d_sigma, n, dim_a);
    for (auto& e : b.coeffs) e = scale * rng.cvector(dim_a);
    return b;
}

SpectralField random_field(Rng& rng, int dim_a, double scale = 1.0) {
    SpectralField f;
    f.blocks.push_back(random_block(rng, "a", 1, 2, dim_a, scale));
    f.blocks.push_back(random_block(rng, "b", 2, 2, dim_a, scale));
    return f;
}

const std::vector<double> kPs = {1.0, 1.5, 2.0, 3.0, kInfiniteP};

}  // namespace

TEST_CASE("norms of simple fields") {
    SUBCASE("zero field has norm zero for every p") {
        SpectralField zero;
        zero.blocks.push_back(SpectralBlock::zero("a", 1, 2, 3));
        for (double p : kPs) CHECK(snorm(zero, p).value == 0.0);
    }
    SUBCASE("a single entry with d_sigma = 1 has norm ||a|| for every p") {
        Rng rng(1);
        const Eigen::VectorXcd a = rng.cvector(3);
        SpectralField f;
        f.blocks.push_back(SpectralBlock::zero("a", 1, 2, 3));
        f.blocks[0].at(1, 1) = a;
        for (double p : kPs)
            CHECK(snorm(f, p).value == doctest::Approx(a.norm()).epsilon(1e-12));
        CHECK(block_opnorm(f.blocks[0]) == doctest::Approx(a.norm()).epsilon(1e-10));
    }
    SUBCASE("invalid exponents are rejected") {
        SpectralField f;
        CHECK_THROWS_AS(snorm(f, 0.5), InvalidP);
        CHECK_THROWS_AS(snorm(f, std::nan("")), InvalidP);
    }
}

TEST_CASE("block operator norm") {
    Rng rng(2);

    SUBCASE("scalar coefficient blocks match a direct SVD") {
        for (int trial = 0; trial < 50; ++trial) {
            const SpectralBlock b = random_block(rng, "a", 1, 3, 1);
            Eigen::MatrixXcd m(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m(i, j) = b.at(i, j)[0];
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
            CHECK(block_opnorm(b) == doctest::Approx(svd.singularValues()(0)).epsilon(1e-9));
        }
    }
    SUBCASE("the all-ones 2x2 block has operator norm 2") {
        SpectralBlock b = SpectralBlock::zero("a", 1, 2, 1);
        for (auto& e : b.coeffs) e = Eigen::VectorXcd::Ones(1);
        CHECK(block_opnorm(b) == doctest::Approx(2.0).epsilon(1e-10));
    }
    SUBCASE("bracketed by the best entry and the Frobenius bound") {
        for (int trial = 0; trial < 50; ++trial) {
            const SpectralBlock b = random_block(rng, "a", 1, 2, 3);
            double frob = 0.0, best = 0.0;
            for (const auto& e : b.coeffs) {
                frob += e.squaredNorm();
                best = std::max(best, e.norm());
            }
            const double op = block_opnorm(b);
            CHECK(op >= best - 1e-12);
            CHECK(op <= std::sqrt(frob) + 1e-10);
        }
    }
}

TEST_CASE("membership predicates") {
    Rng rng(3);

    SUBCASE("the zero field belongs everywhere with empty witnesses") {
        SpectralField zero;
        zero.blocks.push_back(SpectralBlock::zero("a", 1, 2, 2));
        for (auto cls : {SpaceClass::S00, SpaceClass::S0, SpaceClass::Sp, SpaceClass::Sinf}) {
            const MembershipResult r = membership(zero, cls, 1e-9);
            CHECK(r.member);
            CHECK(r.witness.empty());
        }
    }
    SUBCASE("finite fields report their support") {
        const SpectralField f = random_field(rng, 2);
        const MembershipResult r = membership(f, SpaceClass::S00, 1e-9);
        CHECK(r.member);
        CHECK(r.witness.size() == 2);
    }
    SUBCASE("truncation empties the exceedance set at its own threshold") {
        const SpectralField f = random_field(rng, 2, 0.05);
        const int n = 4;
        const SpectralField cut = truncate(f, n);
        SpectralField diff = f + cd(-1.0) * cut;
        const MembershipResult r = membership(diff, SpaceClass::S0, 1.0 / n);
        CHECK(r.witness.empty());
    }
}

TEST_CASE("norm monotonicity in p") {
    Rng rng(4);

    SUBCASE("single entry fields give equality") {
        SpectralField f;
        f.blocks.push_back(SpectralBlock::zero("a", 1, 2, 2));
        f.blocks[0].at(0, 1) = rng.cvector(2);
        const MonotonicityResult r = monotonicity_check(f, 1.0, 3.0);
        CHECK(r.holds);
        CHECK(r.norm_p == doctest::Approx(r.norm_q).epsilon(1e-12));
    }
    SUBCASE("random fields, all pairs from the grid") {
        for (int trial = 0; trial < 200; ++trial) {
            const SpectralField f = random_field(rng, 2);
            for (std::size_t a = 0; a < kPs.size(); ++a)
                for (std::size_t b = a; b < kPs.size(); ++b)
                    CHECK(monotonicity_check(f, kPs[a], kPs[b]).holds);
        }
    }
    SUBCASE("entries larger than one stay monotone") {
        for (int trial = 0; trial < 50; ++trial) {
            const SpectralField f = random_field(rng, 2, 5.0);
            for (std::size_t a = 0; a < kPs.size(); ++a)
                for (std::size_t b = a; b < kPs.size(); ++b)
                    CHECK(monotonicity_check(f, kPs[a], kPs[b]).holds);
        }
    }
    SUBCASE("p > q is rejected") {
        SpectralField f;
        CHECK_THROWS_AS(monotonicity_check(f, 3.0, 2.0), InvalidP);
    }
}

TEST_CASE("the S2 inner product") {
    Rng rng(5);

    SUBCASE("against itself it is the squared 2-norm") {
        for (int trial = 0; trial < 20; ++trial) {
            const SpectralField f = random_field(rng, 3);
            const cd self = s2_inner(f, f);
            CHECK(std::abs(self.imag()) <= 1e-12 * (1.0 + self.real()));
            const double n2 = snorm(f, 2.0).value;
            CHECK(self.real() == doctest::Approx(n2 * n2).epsilon(1e-10));
        }
    }
    SUBCASE("single entries at different positions are orthogonal") {
        SpectralField f, g;
        f.blocks.push_back(SpectralBlock::zero("a", 1, 2, 2));
        g.blocks.push_back(SpectralBlock::zero("a", 1, 2, 2));
        f.blocks[0].at(0, 0) = rng.cvector(2);
        g.blocks[0].at(1, 1) = rng.cvector(2);
        CHECK(std::abs(s2_inner(f, g)) == 0.0);
    }
    SUBCASE("Cauchy-Schwarz on random pairs") {
        for (int trial = 0; trial < 1000; ++trial) {
            const SpectralField f = random_field(rng, 2);
            const SpectralField g = random_field(rng, 2);
            CHECK(std::abs(s2_inner(f, g)) <=
                  snorm(f, 2.0).value * snorm(g, 2.0).value + 1e-10);
        }
    }
    SUBCASE("positive definiteness: vanishing norm forces vanishing entries") {
        SpectralField f;
        f.blocks.push_back(SpectralBlock::zero("a", 2, 2, 2));
        CHECK(snorm(f, 2.0).value == 0.0);
        for (const auto& e : f.blocks[0].coeffs) CHECK(e.cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("mismatched shapes are rejected") {
        SpectralField f, g;
        f.blocks.push_back(SpectralBlock::zero("a", 1, 2, 2));
        g.blocks.push_back(SpectralBlock::zero("a", 1, 3, 2));
        CHECK_THROWS_AS(s2_inner(f, g), ShapeMismatch);
    }
}

TEST_CASE("truncation") {
    Rng rng(6);

    SUBCASE("huge n leaves the field unchanged") {
        const SpectralField f = random_field(rng, 2);
        const SpectralField cut = truncate(f, 1000000);
        for (std::size_t b = 0; b < f.blocks.size(); ++b)
            for (std::size_t e = 0; e < f.blocks[b].coeffs.size(); ++e)
                CHECK((f.blocks[b].coeffs[e] - cut.blocks[b].coeffs[e]).cwiseAbs().maxCoeff() ==
                      0.0);
    }
    SUBCASE("n = 1 zeroes a field with all block norms below one") {
        const SpectralField f = random_field(rng, 2, 0.01);
        for (const auto& b : f.blocks) REQUIRE(block_opnorm(b) < 1.0);
        const SpectralField cut = truncate(f, 1);
        for (const auto& b : cut.blocks)
            for (const auto& e : b.coeffs) CHECK(e.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("the tail is strictly smaller than 1/n") {
        for (int trial = 0; trial < 20; ++trial) {
            const SpectralField f = random_field(rng, 2, 0.2);
            for (int n = 1; n <= 100; ++n) {
                const SpectralField diff = f + cd(-1.0) * truncate(f, n);
                CHECK(snorm(diff, kInfiniteP).value < 1.0 / n);
            }
        }
    }
}

TEST_CASE("norm axioms") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const SpectralField f = random_field(rng, 2);
        const SpectralField g = random_field(rng, 2);
        const cd a = rng.cgaussian();
        for (double p : kPs) {
            const double nf = snorm(f, p).value;
            CHECK(snorm(f + g, p).value <= nf + snorm(g, p).value + 1e-10);
            CHECK(std::abs(snorm(a * f, p).value - std::abs(a) * nf) <=
                  1e-10 * (1.0 + std::abs(a) * nf));
        }
    }
}
