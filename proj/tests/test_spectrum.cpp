#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "antihankel/spectrum.hpp"

using namespace antihankel;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((HankelParams{0, 1.0, 1.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((HankelParams{-3, 1.0, 1.0, 1.0}.validate()), std::invalid_argument);
    const double nan = std::nan("");
    CHECK_THROWS_AS((HankelParams{2, nan, 0.0, 0.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS(compute_spectrum({1, 0.0, 1.0 / 0.0, 0.0}), std::invalid_argument);
    CHECK_NOTHROW((HankelParams{1, 0.0, 0.0, 0.0}.validate()));
    CHECK(HankelParams{3, -1.5, 2.0, 0.5}.scale() == doctest::Approx(5.0));
}

TEST_CASE("modulus pair count by parity") {
    CHECK(modulus_pair_count({1, 0, 0, 0}) == 1);
    CHECK(modulus_pair_count({2, 0, 0, 0}) == 1);
    CHECK(modulus_pair_count({3, 0, 0, 0}) == 2);
    CHECK(modulus_pair_count({4, 0, 0, 0}) == 2);
    CHECK(modulus_pair_count({9, 0, 0, 0}) == 5);
    CHECK(modulus_pair_count({10, 0, 0, 0}) == 5);
}

TEST_CASE("unit roots are exact on the axes and conjugate-symmetric") {
    for (int m : {3, 4, 7, 12}) {
        const auto w = unit_roots(m);
        CHECK(w[0] == std::complex<double>(1.0, 0.0));
        if (m % 2 == 0)
            CHECK(w[static_cast<size_t>(m / 2)] == std::complex<double>(-1.0, 0.0));
        for (int j = 1; j < m; ++j) {
            CHECK(w[static_cast<size_t>(j)] == std::conj(w[static_cast<size_t>(m - j)]));
            CHECK(std::abs(std::abs(w[static_cast<size_t>(j)]) - 1.0) < 1e-15);
        }
    }
}

TEST_CASE("real eigenvalues come out exact") {
    // a + b + c is always the first eigenvalue; a + b - c is the middle one
    // for even n. Both must be plain double sums, not trig round-trips.
    const HankelParams odd{5, 1.25, -0.375, 2.5};
    CHECK(compute_spectrum(odd).values[0].real() == odd.a + odd.b + odd.c);
    CHECK(compute_spectrum(odd).values[0].imag() == 0.0);

    const HankelParams even{4, 1.0, 2.0, -1.0};
    const auto spectrum = compute_spectrum(even);
    CHECK(spectrum.values[0].real() == 4.0 - 2.0);  // a + b + c = 2
    CHECK(spectrum.values[3].real() == 4.0);        // a + b - c, index n/2 + 1
    CHECK(spectrum.values[3].imag() == 0.0);
}

TEST_CASE("spectrum is conjugate-symmetric with principal arguments") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    for (int n : {3, 4, 9, 16}) {
        const HankelParams params{n, coeff(rng), coeff(rng), coeff(rng)};
        const auto spectrum = compute_spectrum(params);
        const int m = params.dim();
        REQUIRE(spectrum.dim() == m);
        for (int k = 1; k < m; ++k) {
            const auto& z = spectrum.values[static_cast<size_t>(k)];
            CHECK(z == std::conj(spectrum.values[static_cast<size_t>(m - k)]));
            CHECK(spectrum.moduli[static_cast<size_t>(k)] ==
                  spectrum.moduli[static_cast<size_t>(m - k)]);
            const double arg = spectrum.args[static_cast<size_t>(k)];
            CHECK(arg <= std::numbers::pi);
            CHECK(arg > -std::numbers::pi);
            if (arg != std::numbers::pi && spectrum.moduli[static_cast<size_t>(k)] > 1e-12)
                CHECK(spectrum.args[static_cast<size_t>(m - k)] == -arg);
        }
    }
}

TEST_CASE("vanishing anti-circulant eigenvalue gets a zero argument") {
    // n = 2, a = 1, b = 0, c = 1: lambda_2 = b + a - c = 0.
    const auto spectrum = compute_spectrum({2, 1.0, 0.0, 1.0});
    CHECK(spectrum.moduli[2] == 0.0);
    CHECK(spectrum.args[2] == 0.0);
}

TEST_CASE("pole multiset: frozen n = 2 instance") {
    const HankelParams params{2, 0.8, -1.1, 0.6};
    const auto poles = pole_multiset(params, compute_spectrum(params));
    REQUIRE(poles.dim() == 4);
    CHECK(poles.values[0] == doctest::Approx(-1.9924858845171276).epsilon(1e-14));
    CHECK(poles.values[1] == doctest::Approx(-0.9).epsilon(1e-14));
    CHECK(poles.values[2] == doctest::Approx(0.29999999999999993).epsilon(1e-14));
    CHECK(poles.values[3] == doctest::Approx(1.9924858845171276).epsilon(1e-14));
    CHECK(poles.sources[0].origin == PoleOrigin::MinusModulus);
    CHECK(poles.sources[1].origin == PoleOrigin::MiddleLambda);
    CHECK(poles.sources[2].origin == PoleOrigin::Lambda0);
    CHECK(poles.sources[3].origin == PoleOrigin::PlusModulus);
    CHECK(poles.groups.size() == 4);
}

TEST_CASE("pole multiset groups coincident values") {
    // Exchange matrix: all moduli are 1, lambda_0 = 1.
    const HankelParams params{3, 0.0, 0.0, 1.0};
    const auto poles = pole_multiset(params, compute_spectrum(params));
    REQUIRE(poles.dim() == 5);
    REQUIRE(poles.groups.size() == 2);
    CHECK(poles.groups[0].count == 2);
    CHECK(poles.groups[0].value == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(poles.groups[1].count == 3);
    CHECK(poles.groups[1].value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(poles.groups[1].hi - poles.groups[1].lo <= 1e-10 * params.scale());
    int total = 0;
    for (const auto& g : poles.groups)
        total += g.count;
    CHECK(total == poles.dim());
}

TEST_CASE("weyl brackets have the rank-two offsets") {
    const HankelParams params{3, 1.5, -2.0, 0.25};
    const auto poles = pole_multiset(params, compute_spectrum(params));
    const auto brackets = weyl_brackets(params, poles);
    REQUIRE(brackets.size() == poles.values.size());
    // min(0, -a, -b) = -1.5, max(0, -a, -b) = 2.0
    for (size_t k = 0; k < brackets.size(); ++k) {
        CHECK(brackets[k].lo == doctest::Approx(poles.values[k] - 1.5).epsilon(1e-15));
        CHECK(brackets[k].hi == doctest::Approx(poles.values[k] + 2.0).epsilon(1e-15));
        CHECK(brackets[k].contains(poles.values[k]));
    }
}
