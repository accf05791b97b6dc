#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "antihankel/oracle.hpp"
#include "antihankel/solver.hpp"
#include "test_support.hpp"

using namespace antihankel;

namespace {

std::vector<double> solved_values(const SpectralResult& result) {
    std::vector<double> values;
    values.reserve(result.pairs.size());
    for (const auto& pair : result.pairs)
        values.push_back(pair.value);
    return values;
}

} // namespace

TEST_CASE("frozen spectra for small instances") {
    SUBCASE("odd order, all coefficients set") {
        const auto result = solve({1, 1.0, 2.0, 3.0});
        REQUIRE(result.pairs.size() == 3);
        const double expected[3] = {-3.0933730216535835, 0.94116449023451998,
                                    5.1522085314190615};
        for (int i = 0; i < 3; ++i) {
            CHECK(result.pairs[static_cast<size_t>(i)].value ==
                  doctest::Approx(expected[i]).epsilon(1e-10));
            CHECK(result.pairs[static_cast<size_t>(i)].kind == EigenKind::SecularZero);
        }
        CHECK(result.diagnostics.complete);
        CHECK(result.diagnostics.scan_samples == 64);
    }
    SUBCASE("even order") {
        const auto result = solve({2, 0.8, -1.1, 0.6});
        REQUIRE(result.pairs.size() == 4);
        const double expected[4] = {-1.638708424974874, -1.0110005605447914,
                                    0.66399912860156129, 1.6857098569181042};
        for (int i = 0; i < 4; ++i)
            CHECK(result.pairs[static_cast<size_t>(i)].value ==
                  doctest::Approx(expected[i]).epsilon(1e-10));
    }
    SUBCASE("vanishing corner coefficient a") {
        const auto result = solve({1, 0.0, 1.0, 1.0});
        REQUIRE(result.pairs.size() == 3);
        const double expected[3] = {-1.2469796037174672, 0.44504186791262851,
                                    1.801937735804839};
        for (int i = 0; i < 3; ++i)
            CHECK(result.pairs[static_cast<size_t>(i)].value ==
                  doctest::Approx(expected[i]).epsilon(1e-10));
    }
}

TEST_CASE("agreement with the dense oracle across sizes") {
    std::mt19937 rng(314159);
    for (int n = 1; n <= 32; ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            const HankelParams params = testsupport::random_params(rng, n);
            const double scale = params.scale();
            const auto result = solve(params);
            REQUIRE(static_cast<int>(result.pairs.size()) == params.dim());
            CHECK(result.diagnostics.complete);

            const auto oracle = jacobi_eigen(build_hankel(params));
            const auto cmp = compare_spectra(solved_values(result), oracle.values);
            INFO("n=", n, " a=", params.a, " b=", params.b, " c=", params.c,
                 " worst=", cmp.max_abs_diff);
            CHECK(cmp.max_abs_diff <= 1e-8 * scale);

            // Index-matched Weyl brackets, slightly widened for roundoff.
            const auto poles = pole_multiset(params, compute_spectrum(params));
            const auto brackets = weyl_brackets(params, poles);
            const double slack = 1e-10 * scale;
            for (size_t k = 0; k < result.pairs.size(); ++k) {
                CHECK(result.pairs[k].value >= brackets[k].lo - slack);
                CHECK(result.pairs[k].value <= brackets[k].hi + slack);
            }
        }
    }
}

TEST_CASE("negating all coefficients negates and reverses the spectrum") {
    std::mt19937 rng(271828);
    for (int n : {1, 2, 7, 12, 20}) {
        const HankelParams params = testsupport::random_params(rng, n);
        const HankelParams negated{n, -params.a, -params.b, -params.c};
        const auto direct = solved_values(solve(params));
        auto mirrored = solved_values(solve(negated));
        std::reverse(mirrored.begin(), mirrored.end());
        for (double& v : mirrored)
            v = -v;
        const auto cmp = compare_spectra(direct, mirrored);
        CHECK(cmp.max_abs_diff <= 1e-9 * params.scale());
    }
}

TEST_CASE("exchange family: every eigenvalue is a pole value") {
    for (int n = 1; n <= 12; ++n) {
        const HankelParams params{n, 0.0, 0.0, 1.0};
        const auto result = solve(params);
        const int m = params.dim();
        REQUIRE(static_cast<int>(result.pairs.size()) == m);
        int minus = 0, plus = 0;
        for (const auto& pair : result.pairs) {
            CHECK(pair.kind == EigenKind::PoleValue);
            if (pair.value < 0.0) {
                CHECK(std::abs(pair.value + 1.0) <= 1e-12);
                ++minus;
            } else {
                CHECK(std::abs(pair.value - 1.0) <= 1e-12);
                ++plus;
            }
        }
        CHECK(plus == (m + 1) / 2);
        CHECK(minus == m / 2);
    }
}

TEST_CASE("mixed pole and secular eigenvalues") {
    // n = 1, a = 1, b = c = 0: spectrum is exactly {-1, 0, 1}; the outer
    // two ride on pole values, the zero is a secular root.
    const auto result = solve({1, 1.0, 0.0, 0.0});
    REQUIRE(result.pairs.size() == 3);
    CHECK(result.pairs[0].value == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(result.pairs[0].kind == EigenKind::PoleValue);
    CHECK(std::abs(result.pairs[1].value) <= 1e-10);
    CHECK(result.pairs[1].kind == EigenKind::SecularZero);
    CHECK(result.pairs[2].value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.pairs[2].kind == EigenKind::PoleValue);
}

TEST_CASE("pole classification reports eigenvalue multiplicities") {
    const HankelParams params{5, 0.0, 0.0, 1.0};  // 7x7 exchange matrix
    const auto poles = pole_multiset(params, compute_spectrum(params));
    const auto classes = classify_pole_eigenvalues(params, poles);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].value == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(classes[0].multiplicity == 3);
    CHECK(classes[1].value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(classes[1].multiplicity == 4);

    // Generic instances have no pole eigenvalues at all.
    const HankelParams generic{6, 1.1, -0.4, 0.7};
    const auto generic_poles = pole_multiset(generic, compute_spectrum(generic));
    for (const auto& pe : classify_pole_eigenvalues(generic, generic_poles))
        CHECK(pe.multiplicity == 0);
}

TEST_CASE("eigenvectors: closed form residuals and fallbacks") {
    std::mt19937 rng(161803);
    for (int n = 1; n <= 16; ++n) {
        const HankelParams params = testsupport::random_params(rng, n);
        const auto result = solve(params, 1e-10, true);
        const DenseMatrix h = build_hankel(params);
        const double allowed = 1e-8 * (1.0 + h.max_norm());
        for (const auto& pair : result.pairs) {
            REQUIRE(pair.vector.has_value());
            REQUIRE(pair.residual.has_value());
            INFO("n=", n, " value=", pair.value, " residual=", *pair.residual);
            CHECK(*pair.residual <= allowed);
            double norm = 0.0;
            for (double e : *pair.vector)
                norm += e * e;
            CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-12));
        }
        REQUIRE(result.diagnostics.max_residual.has_value());
        CHECK(*result.diagnostics.max_residual <= allowed);
    }
}

TEST_CASE("eigenvectors with a = 0 use the reduced closed form") {
    for (const HankelParams params :
         {HankelParams{3, 0.0, 1.4, -0.8}, HankelParams{4, 0.0, -0.9, 1.3}}) {
        const auto result = solve(params, 1e-10, true);
        const DenseMatrix h = build_hankel(params);
        for (const auto& pair : result.pairs)
            CHECK(*pair.residual <= 1e-9 * (1.0 + h.max_norm()));
    }
}

TEST_CASE("repeated pole eigenvalues get an orthonormal basis") {
    const auto result = solve({5, 0.0, 0.0, 1.0}, 1e-10, true);  // 7x7 exchange
    REQUIRE(result.pairs.size() == 7);
    for (size_t i = 0; i < result.pairs.size(); ++i) {
        CHECK(*result.pairs[i].residual <= 1e-10);
        for (size_t j = i + 1; j < result.pairs.size(); ++j) {
            if (result.pairs[i].value != result.pairs[j].value)
                continue;
            double dot = 0.0;
            for (size_t k = 0; k < result.pairs[i].vector->size(); ++k)
                dot += (*result.pairs[i].vector)[k] * (*result.pairs[j].vector)[k];
            CHECK(std::abs(dot) <= 1e-10);
        }
    }
}

TEST_CASE("degenerate rank-one denominator falls back to inverse iteration") {
    // This instance has an eigenvalue near zero whose closed-form
    // denominator collapses to ~1e-15; the direct formula must refuse it
    // while the full solve still delivers a good vector.
    const HankelParams params{14, -0.1735, 2.8508, 0.2342};
    const auto oracle = jacobi_eigen(build_hankel(params));
    double nearest_zero = oracle.values[0];
    for (double v : oracle.values)
        if (std::abs(v) < std::abs(nearest_zero))
            nearest_zero = v;
    REQUIRE(std::abs(nearest_zero) < 1e-6);

    const SecularContext ctx = make_secular_context(params);
    CHECK_THROWS_AS(secular_eigenvector(ctx, nearest_zero),
                    DegenerateDenominatorError);

    const auto result = solve(params, 1e-10, true);
    const double allowed = 1e-8 * (1.0 + build_hankel(params).max_norm());
    for (const auto& pair : result.pairs)
        CHECK(*pair.residual <= allowed);
}

TEST_CASE("eigenvector input guards") {
    const HankelParams params{3, 1.0, 0.5, -0.7};
    const SecularContext ctx = make_secular_context(params);
    CHECK_THROWS_AS(secular_eigenvector(ctx, ctx.lambda_first()),
                    PoleValueInputError);
    CHECK_THROWS_AS(secular_eigenvector(ctx, ctx.moduli()[1]),
                    PoleValueInputError);
}

TEST_CASE("inverse iteration is deterministic and orthogonalises") {
    const DenseMatrix h = build_hankel({5, 0.0, 0.0, 1.0});
    const auto first = inverse_iteration_vector(h, 1.0, 2.0, {}, 0);
    const auto again = inverse_iteration_vector(h, 1.0, 2.0, {}, 0);
    REQUIRE(first.size() == again.size());
    for (size_t i = 0; i < first.size(); ++i)
        CHECK(first[i] == again[i]);

    const std::vector<std::vector<double>> previous{first};
    const auto second = inverse_iteration_vector(h, 1.0, 2.0, previous, 1);
    double dot = 0.0;
    for (size_t i = 0; i < first.size(); ++i)
        dot += first[i] * second[i];
    CHECK(std::abs(dot) <= 1e-12);
    CHECK(testsupport::residual_norm(h, second, 1.0) <= 1e-10);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(solve({0, 1.0, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(solve({3, 1.0, 1.0, 1.0}, -1e-10), std::invalid_argument);
    const HankelParams params{3, 1.0, 0.5, -0.7};
    const SecularContext ctx = make_secular_context(params);
    const auto poles = pole_multiset(params, compute_spectrum(params));
    const auto brackets = weyl_brackets(params, poles);
    CHECK_THROWS_AS(isolate_roots(ctx, poles, brackets, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(isolate_roots(ctx, poles, brackets, 1e-10, 1), std::invalid_argument);
}

TEST_CASE("coarse tolerance still brackets the truth") {
    const HankelParams params{9, 1.7, -0.6, 0.4};
    const auto coarse = solve(params, 1e-4);
    const auto oracle = jacobi_eigen(build_hankel(params));
    const auto cmp = compare_spectra(solved_values(coarse), oracle.values);
    CHECK(cmp.max_abs_diff <= 1e-4 + 1e-8);
}
