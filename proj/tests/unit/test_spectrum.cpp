#include <doctest.h>

#include "nhspec/error.hpp"
#include "nhspec/spectrum.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace nhspec;

TEST_CASE("level examples") {
    const DeformationModel unit(Family::K1, Variant::Minus, 1.0, 1.0);
    CHECK(level(unit, 0.0, 0) == doctest::Approx(M_PI).epsilon(1e-15));
    CHECK(level(unit, 0.0, 1) == doctest::Approx(3 * M_PI).epsilon(1e-15));
    CHECK(level({Family::K3, Variant::Plus, 1.0, 1.0}, 0.0, 7) == 0.0);
    CHECK_THROWS_AS(level(unit, 0.0, -1), Error);
}

TEST_CASE("spectrum of K1 minus at t = 0") {
    const auto table = spectrum({Family::K1, Variant::Minus, 1.0, 1.0}, 0.0, 2);
    REQUIRE(table.time.has_value());
    CHECK(*table.time == 0.0);
    CHECK(table.quantum == doctest::Approx(2 * M_PI).epsilon(1e-15));
    REQUIRE(table.levels.size() == 3);
    for (int n = 0; n < 3; ++n) {
        CHECK(table.levels[n].n == n);
        CHECK(oracle::rel(table.levels[n].s, M_PI * (2 * n + 1)) < 1e-15);
    }
    CHECK(max_spacing_deviation(table) <= 1e-12);
}

TEST_CASE("commutative instant gives a zero spectrum") {
    const auto table = spectrum({Family::K2, Variant::Minus, 1.0, 1.0}, 0.0, 5);
    CHECK(table.levels.size() == 6);
    for (const auto& lv : table.levels) CHECK(lv.s == 0.0);
}

TEST_CASE("canonical spectrum examples") {
    const auto one = canonical_spectrum(1.0, 0);
    CHECK_FALSE(one.time.has_value());
    REQUIRE(one.levels.size() == 1);
    CHECK(one.levels[0].s == doctest::Approx(M_PI).epsilon(1e-15));

    const auto half = canonical_spectrum(0.5, 1);
    CHECK(oracle::rel(half.levels[0].s, M_PI / 2) < 1e-15);
    CHECK(oracle::rel(half.levels[1].s, 1.5 * M_PI) < 1e-15);

    const auto four = canonical_spectrum(1.0, 3);
    for (std::size_t k = 0; k + 1 < four.levels.size(); ++k) {
        CHECK(oracle::rel(four.levels[k + 1].s - four.levels[k].s, 2 * M_PI) < 1e-14);
    }

    CHECK_THROWS_AS(canonical_spectrum(0.0, 3), Error);
    CHECK_THROWS_AS(canonical_spectrum(-1.0, 3), Error);
    CHECK_THROWS_AS(canonical_spectrum(1.0, -1), Error);
}

TEST_CASE("negative quantum: levels carry the sign") {
    const auto table = spectrum({Family::K2, Variant::Minus, 1.0, 1.0}, 2.5, 3);
    CHECK(table.quantum < 0.0);
    for (const auto& lv : table.levels) CHECK(lv.s < 0.0);
}

TEST_CASE("levels are quantum * (k + 1/2) for random models") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pos(0.3, 2.5);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    for (int trial = 0; trial < 300; ++trial) {
        const DeformationModel m(kAllFamilies[trial % 6], kAllVariants[trial % 2], pos(rng), pos(rng));
        const double t = u(rng) * m.tau();
        const auto table = spectrum(m, t, 20);
        const double q = eval_quantum(m, t);
        CHECK(table.quantum == q);
        for (const auto& lv : table.levels) {
            REQUIRE(oracle::rel(lv.s, q * (lv.n + 0.5)) <= 1e-14);
        }
        CHECK(max_spacing_deviation(table) <= 1e-12);
    }
}

TEST_CASE("spectrum depends on f only") {
    // K1 minus with kappa = theta at t = 0 reproduces the canonical plane
    for (double theta : {0.25, 1.0, 3.5}) {
        for (double tau : {0.5, 7.0}) {
            const auto a = canonical_spectrum(theta, 12);
            const auto b = spectrum({Family::K1, Variant::Minus, theta, tau}, 0.0, 12);
            for (int n = 0; n <= 12; ++n) CHECK(a.levels[n].s == b.levels[n].s);
        }
    }
    // K1 and K3 plus share f at t with cosh^2 = tau^2 sinh^2 when kappa matches
    const double tau = 2.0;
    const double t = tau * std::atanh(1.0 / tau);
    const DeformationModel k1(Family::K1, Variant::Plus, 1.3, tau);
    const DeformationModel k3(Family::K3, Variant::Plus, 1.3, 1.0);
    const double f1 = eval_f(k1, t);
    const double t3 = std::asinh(std::sqrt(f1 / 1.3));
    const auto s1 = spectrum(k1, t, 8);
    const auto s3 = spectrum(k3, t3, 8);
    for (int n = 0; n <= 8; ++n) CHECK(oracle::rel(s1.levels[n].s, s3.levels[n].s) < 1e-13);
}
