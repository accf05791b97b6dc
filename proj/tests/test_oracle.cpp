#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "antihankel/oracle.hpp"
#include "test_support.hpp"

using namespace antihankel;

namespace {

// Frozen symmetric 5x5 fixture with eigenvalues computed independently
// (dense QR path of a separate linear algebra stack), pinned here so the
// Jacobi implementation is checked against numbers it did not produce.
DenseMatrix frozen_fixture() {
    const double rows[5][5] = {
        {1.0958241942238534, 0.82900158277761649, 0.45879188828792739,
         -0.15078649831171842, -0.29546982405395328},
        {0.82900158277761649, 1.0445588079614119, 1.4256585882511112,
         -0.63460316061723865, -0.39017618794912901},
        {0.45879188828792739, 1.4256585882511112, 0.57546048032265817,
         -0.22684226124998941, 0.8282244464444688},
        {-0.15078649831171842, -0.63460316061723865, -0.22684226124998941,
         1.3105246879703283, 1.049571040888525},
        {-0.29546982405395328, -0.39017618794912901, 0.8282244464444688,
         1.049571040888525, 1.1135339882950475}};
    DenseMatrix mat(5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            mat(i, j) = rows[i][j];
    return mat;
}

} // namespace

TEST_CASE("frozen fixture eigenvalues") {
    const double expected[5] = {-1.0307248474095216, -0.0073565688286265554,
                                0.82179479916182196, 2.2498186994474949,
                                3.1063700764021323};
    const auto eig = jacobi_eigen(frozen_fixture());
    REQUIRE(eig.values.size() == 5);
    for (int i = 0; i < 5; ++i)
        CHECK(eig.values[static_cast<size_t>(i)] ==
              doctest::Approx(expected[i]).epsilon(1e-12));
    CHECK(eig.sweeps >= 1);
    CHECK(eig.sweeps <= 15);
}

TEST_CASE("frozen fixture eigenvectors: residuals and orthogonality") {
    const DenseMatrix mat = frozen_fixture();
    const auto eig = jacobi_eigen(mat);
    const auto gram = multiply(transpose(eig.vectors), eig.vectors);
    CHECK(max_abs_diff(gram, DenseMatrix::identity(5)) <= 1e-13);
    for (int col = 0; col < 5; ++col) {
        std::vector<double> v(5);
        for (int i = 0; i < 5; ++i)
            v[static_cast<size_t>(i)] = eig.vectors(i, col);
        CHECK(testsupport::residual_norm(mat, v, eig.values[static_cast<size_t>(col)]) <=
              1e-12);
    }
}

TEST_CASE("small exchange matrix") {
    const auto eig = jacobi_eigen(build_hankel({1, 0.0, 0.0, 1.0}));
    REQUIRE(eig.values.size() == 3);
    CHECK(eig.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(eig.values[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eig.values[2] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("random reconstruction: V D V^T returns the input") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    const int m = 8;
    DenseMatrix mat(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            const double v = entry(rng);
            mat(i, j) = v;
            mat(j, i) = v;
        }
    const auto eig = jacobi_eigen(mat);
    DenseMatrix scaled = eig.vectors;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            scaled(i, j) *= eig.values[static_cast<size_t>(j)];
    const DenseMatrix rebuilt = multiply(scaled, transpose(eig.vectors));
    CHECK(max_abs_diff(rebuilt, mat) <= 1e-12);

    // Ascending order is part of the contract.
    for (int i = 1; i < m; ++i)
        CHECK(eig.values[static_cast<size_t>(i - 1)] <= eig.values[static_cast<size_t>(i)]);
}

TEST_CASE("degenerate inputs") {
    const DenseMatrix zero(4);
    const auto eig = jacobi_eigen(zero);
    CHECK(eig.sweeps == 0);
    for (double v : eig.values)
        CHECK(v == 0.0);

    const DenseMatrix one(1, 3.5);
    CHECK(jacobi_eigen(one).values[0] == 3.5);
}

TEST_CASE("error paths") {
    DenseMatrix skew(3);
    skew(0, 1) = 1.0;
    skew(1, 0) = -1.0;
    CHECK_THROWS_AS(jacobi_eigen(skew), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_eigen(frozen_fixture(), -1.0), std::invalid_argument);

    const std::vector<double> three{1.0, 2.0, 3.0};
    const std::vector<double> two{1.0, 2.0};
    CHECK_THROWS_AS(compare_spectra(three, two), std::invalid_argument);

    const std::vector<double> shifted{1.0, 2.5, 3.0};
    const auto cmp = compare_spectra(three, shifted);
    CHECK(cmp.max_abs_diff == doctest::Approx(0.5));
    CHECK(cmp.worst_index == 1);
}
