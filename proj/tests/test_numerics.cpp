#include <doctest.h>

#include <cmath>
#include <limits>

#include "impurity/numerics.hpp"

using namespace impurity;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const auto q = numerics::gauss_legendre(5);
    double sum = 0.0, x8 = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        sum += q.weights[i] * std::pow(q.nodes[i], 8);  // degree 8 < 2*5
        x8 += q.weights[i];
    }
    CHECK(x8 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sum == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("gauss-legendre mapped interval") {
    const auto q = numerics::gauss_legendre(12, 0.0, 1.0);
    double w_total = 0.0, moment = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        CHECK(q.nodes[i] > 0.0);
        CHECK(q.nodes[i] < 1.0);
        w_total += q.weights[i];
        moment += q.weights[i] * q.nodes[i];
    }
    CHECK(w_total == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(moment == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("adaptive integration over infinite ranges") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(numerics::integrate([](double x) { return std::exp(-x * x); }, -inf, inf) ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    CHECK(numerics::integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, inf) ==
          doctest::Approx(M_PI / 2.0).epsilon(1e-12));
}

TEST_CASE("power tail sum matches the zeta tail") {
    // sum_{n=N+1}^inf n^-2 = psi'(N+1); N = 50: 0.019801333226697...
    const double tail = numerics::power_tail_sum(2.0, 1.0, 0.0, 50);
    CHECK(tail == doctest::Approx(0.019801333226697126).epsilon(1e-12));
    // scaled/offset variant against a brute-force partial sum
    double brute = 0.0;
    for (int n = 21; n <= 4000000; ++n) brute += std::pow(0.5 * (n - 0.5), -3.0);
    CHECK(numerics::power_tail_sum(3.0, 0.5, -0.5, 20) == doctest::Approx(brute).epsilon(1e-10));
}

TEST_CASE("richardson derivative") {
    CHECK(numerics::derivative([](double x) { return std::sin(x); }, 0.6, 1e-3) ==
          doctest::Approx(std::cos(0.6)).epsilon(1e-11));
}
