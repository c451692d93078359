#include <doctest.h>

#include <cmath>

#include "impurity/statfun.hpp"

using namespace impurity;

TEST_CASE("matsubara frequency rule") {
    const double beta = 2.0;
    CHECK(Statistics::bose().matsubara(1, beta) == doctest::Approx(M_PI).epsilon(1e-15));
    CHECK(Statistics::bose().matsubara(3, beta) == doctest::Approx(3.0 * M_PI).epsilon(1e-15));
    CHECK(Statistics::fermi().matsubara(1, beta) == doctest::Approx(M_PI / 2.0).epsilon(1e-15));
    CHECK(Statistics::fermi().matsubara(2, beta) == doctest::Approx(3.0 * M_PI / 2.0).epsilon(1e-15));
}

TEST_CASE("occupation reference values") {
    // Bose at beta*w = 1: 1/(1 - e^-1); Fermi: 1/(1 + e)
    CHECK(occupation(Statistics::bose(), 1.0, 1.0) ==
          doctest::Approx(1.0 / (1.0 - std::exp(-1.0))).epsilon(1e-15));
    CHECK(occupation(Statistics::fermi(), 1.0, 1.0) ==
          doctest::Approx(1.0 / (1.0 + std::exp(1.0))).epsilon(1e-15));
    CHECK(occupation(Statistics::fermi(), 1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("occupation identities") {
    const double beta = 0.7;
    for (double w : {0.3, 1.0, 5.0}) {
        // Bose: n(w) + n(-w) = 1; Fermi: f(w) + f(-w) = 1
        CHECK(occupation(Statistics::bose(), beta, w) + occupation(Statistics::bose(), beta, -w) ==
              doctest::Approx(1.0).epsilon(1e-14));
        CHECK(occupation(Statistics::fermi(), beta, w) + occupation(Statistics::fermi(), beta, -w) ==
              doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("occupation extreme arguments stay finite") {
    CHECK(occupation(Statistics::fermi(), 1.0, 800.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(occupation(Statistics::fermi(), 1.0, -800.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::isfinite(occupation(Statistics::bose(), 1.0, 800.0)));
    CHECK(std::isfinite(occupation(Statistics::bose(), 1.0, -800.0)));
}

TEST_CASE("bose occupation rejects omega = 0") {
    CHECK_THROWS_AS(occupation(Statistics::bose(), 1.0, 0.0), BoseAtZeroError);
}

TEST_CASE("approximants agree with the Fermi function at small beta*omega") {
    const double beta = 1.0;
    for (double w : {1e-3, 1e-2}) {
        const double exact = occupation(Statistics::fermi(), beta, w);
        CHECK(fermi_pade01(beta, w) == doctest::Approx(exact).epsilon(1e-10));
        CHECK(fermi_lowest_matsubara(beta, w) == doctest::Approx(exact).epsilon(1e-6));
    }
}

TEST_CASE("matsubara grid") {
    const auto grid = matsubara_grid(Statistics::fermi(), 2.0, 3);
    REQUIRE(grid.count() == 3);
    CHECK(grid.frequencies[0] == doctest::Approx(M_PI / 2.0));
    CHECK(grid.frequencies[2] == doctest::Approx(5.0 * M_PI / 2.0));
    CHECK_THROWS_AS(matsubara_grid(Statistics::bose(), 2.0, 0), InvalidCountError);
}
