#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "walshlab/fngen.hpp"
#include "walshlab/spectral.hpp"
#include "walshlab/tt_io.hpp"

using namespace walshlab;

TEST_CASE("linear and affine tables") {
    const BooleanFunction parity = linear(2, 0b11);
    const uint8_t expect[4] = {0, 1, 1, 0};
    for (uint64_t i = 0; i < 4; ++i) CHECK(parity.bit(i) == bool(expect[i]));

    CHECK(affine(2, 0, 1) == BooleanFunction::zeros(2).complemented());

    for (uint64_t a = 0; a < 8; ++a) {
        CHECK(degree(linear(3, a)) <= 1);
    }
    // distinct linear functions sit at distance 2^(n-1), exhaustively
    for (int n : {1, 2, 3, 4}) {
        const uint64_t size = uint64_t{1} << n;
        for (uint64_t a = 0; a < size; ++a) {
            for (uint64_t b = a + 1; b < size; ++b) {
                CHECK(distance(linear(n, a), linear(n, b)) == size / 2);
            }
        }
    }

    // the doubling construction agrees with the definition across words
    const uint64_t omega = 0b1010011;
    const BooleanFunction f = linear(7, omega);
    for (uint64_t x = 0; x < 128; ++x) CHECK(int(f.bit(x)) == parity64(x & omega));

    CHECK_THROWS_AS(linear(3, 8), DimensionError);
    CHECK_THROWS_AS(affine(3, 0, 2), ValueError);
}

TEST_CASE("seeded generator is deterministic with frozen fixtures") {
    CHECK(random_function(4, 42) == random_function(4, 42));
    CHECK(to_tt_text(random_function(4, 42)) == "n=4\ne91f\n");
    CHECK(to_tt_text(random_function(7, 42)) ==
          "n=7\n878f377736444db9b46ec5e8f3ece91f\n");
    CHECK(random_function(4, 42) != random_function(4, 43));
    CHECK(random_function(7, 1) != random_function(7, 2));
}

TEST_CASE("random tables have binomial weight") {
    SplitMix64 gen(83);
    const int draws = 1000;
    double mean = 0.0;
    for (int i = 0; i < draws; ++i) mean += double(random_function(10, gen).weight());
    mean /= draws;
    // per-draw sigma is sqrt(2^n)/2 = 16; the mean of 1000 draws shrinks it
    const double sigma_mean = 16.0 / std::sqrt(double(draws));
    CHECK(std::abs(mean - 512.0) <= 4.0 * sigma_mean);
}

TEST_CASE("bent construction") {
    const std::vector<uint32_t> identity4{0, 1, 2, 3};
    const BooleanFunction f = bent_mm(4, identity4, BooleanFunction::zeros(2));
    // x . y with x in the low half: x1x3 xor x2x4
    for (uint64_t i = 0; i < 16; ++i) {
        const uint64_t x = i & 3;
        const uint64_t y = i >> 2;
        CHECK(int(f.bit(i)) == parity64(x & y));
    }
    const WalshSpectrum s = walsh_spectrum(f);
    CHECK(s.nonlinearity() == 6);
    CHECK(s.classify().kind == SpectrumClass::Kind::Bent);

    const BooleanFunction tiny =
        bent_mm(2, std::vector<uint32_t>{0, 1}, BooleanFunction::zeros(1));
    const WalshSpectrum tiny_spectrum = walsh_spectrum(tiny);
    for (int64_t v : tiny_spectrum.values()) {
        CHECK((v == 2 || v == -2));
    }

    SplitMix64 gen(89);
    for (int n : {4, 6, 8}) {
        const auto pi = random_permutation(uint32_t{1} << (n / 2), gen);
        const BooleanFunction g = random_function(n / 2, gen);
        const WalshSpectrum sp = walsh_spectrum(bent_mm(n, pi, g));
        const int64_t amp = int64_t{1} << (n / 2);
        for (int64_t v : sp.values()) REQUIRE((v == amp || v == -amp));
    }

    const std::vector<uint32_t> not_bijective{0, 0, 2, 3};
    CHECK_THROWS_AS(bent_mm(4, not_bijective, BooleanFunction::zeros(2)), ValueError);
    CHECK_THROWS_AS(bent_mm(3, identity4, BooleanFunction::zeros(2)), ValueError);
    CHECK_THROWS_AS(bent_mm(4, identity4, BooleanFunction::zeros(3)), DimensionError);
}

TEST_CASE("plateaued concatenation") {
    const BooleanFunction and2 = BooleanFunction::from_bits(2, {0, 0, 0, 1});

    // equal halves: support 4, values +-4, independent of the top variable
    const BooleanFunction same = plateaued_concat(and2, and2);
    const WalshSpectrum ss = walsh_spectrum(same);
    CHECK(ss.support().size() == 4);
    for (uint64_t z : ss.support()) {
        CHECK((ss[z] == 4 || ss[z] == -4));
    }

    // distinct halves still land in {0, +-4} with zeros present
    const BooleanFunction mixed = plateaued_concat(and2, xor_linear(and2, 0b01));
    const WalshSpectrum sm = walsh_spectrum(mixed);
    CHECK(sm.classify() == SpectrumClass{SpectrumClass::Kind::Plateaued, 2});

    SplitMix64 gen(97);
    for (int n : {3, 5, 9}) {
        const int m = n - 1;
        const auto draw_bent = [&] {
            const auto pi = random_permutation(uint32_t{1} << (m / 2), gen);
            return bent_mm(m, pi, random_function(m / 2, gen));
        };
        const BooleanFunction f = plateaued_concat(draw_bent(), draw_bent());
        const WalshSpectrum s = walsh_spectrum(f);
        CHECK(s.classify() == SpectrumClass{SpectrumClass::Kind::Plateaued, (n + 1) / 2});
        CHECK(s.support().size() == uint64_t{1} << (n - 1));
    }

    // non-bent halves are rejected
    CHECK_THROWS_AS(plateaued_concat(linear(2, 0b01), and2), ValueError);
    CHECK_THROWS_AS(plateaued_concat(and2, BooleanFunction::zeros(4)), DimensionError);
}

TEST_CASE("noisy-linear budgets") {
    CHECK(NoisyLinearSpec::ln(6, 0).max_errors == 8);
    CHECK(NoisyLinearSpec::ln(9, 0).max_errors == 64);
    CHECK(NoisyLinearSpec::ln_eps(6, 0).max_errors == 9);    // floor(1.17 * 8)
    CHECK(NoisyLinearSpec::ln_eps(9, 0).max_errors == 74);   // floor(1.17 * 64)
    CHECK_THROWS_AS(NoisyLinearSpec::ln(2, 0), ValueError);
    CHECK_THROWS_AS(NoisyLinearSpec::ln_eps(2, 0), ValueError);
    CHECK_THROWS_AS(NoisyLinearSpec::ln(6, 64), DimensionError);
}

TEST_CASE("noisy-linear draws respect the distance budget") {
    // zero budget reproduces the base exactly
    const auto exact = noisy_linear(NoisyLinearSpec::custom(5, 0b10011, 0), 7);
    CHECK(exact.errors == 0);
    CHECK(exact.f == linear(5, 0b10011));

    for (int n : {6, 9}) {
        SplitMix64 gen(101);
        const NoisyLinearSpec spec = NoisyLinearSpec::ln(n, 5);
        const BooleanFunction base = linear(n, 5);
        for (int rep = 0; rep < 10000; ++rep) {
            const auto draw = noisy_linear(spec, gen);
            REQUIRE(draw.errors <= spec.max_errors);
            REQUIRE(distance(draw.f, base) == draw.errors);
        }
    }
}

TEST_CASE("worst-case draws keep the base coefficient above the floor") {
    SplitMix64 gen(103);
    const int n = 9;
    const NoisyLinearSpec spec = NoisyLinearSpec::ln(n, 0b101010101);
    for (int rep = 0; rep < 200; ++rep) {
        const auto draw = noisy_linear(spec, gen, spec.max_errors);
        CHECK(draw.errors == 64);
        const WalshSpectrum s = walsh_spectrum(draw.f);
        // W(base) = 2^n - 2e >= 2^n - 2^(n-2)
        CHECK(s[spec.base] == 512 - 2 * int64_t(draw.errors));
        CHECK(s.max_abs() >= 512 - 128);
    }
}

TEST_CASE("class size formula") {
    CHECK(class_size_ln(3) == 72);
    CHECK(class_size_ln(4) == 2192);
    CHECK(ln_ball_size(3) == 9);
    CHECK(ln_ball_size(4) == 137);
    // n = 9: 512 * sum_{i<=64} C(512, i); spot-check magnitude via log2
    const double log2_n9 = log2_big(class_size_ln(9));
    CHECK(log2_n9 > 9.0);
    CHECK(log2_n9 < 512.0 * binary_entropy(0.125) + 9.0 + 1.0);
    CHECK_THROWS_AS(class_size_ln(2), ValueError);
}

TEST_CASE("class size bounds bracket the ball size") {
    const double h = binary_entropy(0.125);
    CHECK(h == doctest::Approx(0.5435644431995964).epsilon(1e-14));
    for (int n : {3, 4, 6, 9}) {
        const ClassSizeBounds bounds = class_size_log2_bounds(n);
        CHECK(bounds.log2_lower == double(uint64_t{1} << (n - 3)));
        CHECK(bounds.log2_upper ==
              doctest::Approx(double(uint64_t{1} << n) * h).epsilon(1e-14));
        const double ball = log2_big(ln_ball_size(n));
        CHECK(bounds.log2_lower < ball);
        CHECK(ball <= bounds.log2_upper);
    }
}

TEST_CASE("permutations are bijections") {
    SplitMix64 gen(107);
    for (uint32_t count : {1u, 2u, 16u, 64u}) {
        const auto pi = random_permutation(count, gen);
        std::vector<bool> seen(count, false);
        for (uint32_t v : pi) {
            REQUIRE(v < count);
            REQUIRE_FALSE(seen[v]);
            seen[v] = true;
        }
    }
}
