#include <doctest.h>

#include <cmath>

#include "impurity/bo_fermionic.hpp"

using namespace impurity;

namespace {
const BathModel kBath = BathModel::drude(0.4, 4.0);
const FermionicBO kSys(-1.0, kBath);
}  // namespace

TEST_CASE("omega_s is the jump location") {
    CHECK(kSys.omega_s() == doctest::Approx(1.0));
    CHECK(FermionicBO(0.7, kBath).omega_s() == doctest::Approx(0.7));
}

TEST_CASE("g_ss closed form") {
    const double w = 0.3;
    const std::complex<double> i(0, 1);
    const auto expect = i / (w - kSys.epsilon_s + i * phi_tilde(kBath, w));
    const auto got = g_ss(kSys, w);
    CHECK(got.real() == doctest::Approx(expect.real()).epsilon(1e-15));
    CHECK(got.imag() == doctest::Approx(expect.imag()).epsilon(1e-15));
}

TEST_CASE("g_sb endpoints in lambda") {
    const std::complex<double> i(0, 1);
    for (double w : {-0.9, 0.0, 1.4}) {
        CHECK(std::abs(g_sb(kSys, w, 0.0)) == doctest::Approx(0.0));
        const auto full = g_sb(kSys, w, 1.0);
        const auto expect = -2.0 * i * phi_tilde(kBath, w) * g_ss(kSys, w);
        CHECK(full.real() == doctest::Approx(expect.real()).epsilon(1e-14));
        CHECK(full.imag() == doctest::Approx(expect.imag()).epsilon(1e-14));
    }
    CHECK_THROWS_AS(g_sb(kSys, 0.5, -0.1), Error);
}

TEST_CASE("varphi parity, zero, and discontinuity handling") {
    CHECK(varphi(kSys, 0.0) == 0.0);
    for (double w : {0.2, 0.8, 1.5, 4.0}) {
        CHECK(varphi(kSys, w) == doctest::Approx(-varphi(kSys, -w)).epsilon(1e-15));
    }
    CHECK_THROWS_AS(varphi(kSys, 1.0), AtDiscontinuityError);
    CHECK_THROWS_AS(varphi(kSys, -1.0), AtDiscontinuityError);
}

TEST_CASE("varphi one-sided limits") {
    const double below = varphi_sided(kSys, JumpSide::Below);
    const double above = varphi_sided(kSys, JumpSide::Above);
    CHECK(below == doctest::Approx(0.5653986981).epsilon(1e-9));
    CHECK(above == doctest::Approx(-1.0053976287).epsilon(1e-9));
    CHECK(below - above == doctest::Approx(M_PI / 2.0).epsilon(1e-14));
    CHECK(varphi(kSys, 1.0 - 1e-9) == doctest::Approx(below).epsilon(1e-7));
    CHECK(varphi(kSys, 1.0 + 1e-9) == doctest::Approx(above).epsilon(1e-7));
}

TEST_CASE("vartheta anchor and parity") {
    CHECK(vartheta(kSys, 0.0) == doctest::Approx(-0.07421000255913664).epsilon(1e-12));
    for (double v : {0.4, 1.0, 6.0}) {
        CHECK(vartheta(kSys, v) == doctest::Approx(vartheta(kSys, -v)).epsilon(1e-15));
    }
    // large-varpi tail: -eta*gamma/varpi^2
    const double v = 500.0;
    CHECK(vartheta(kSys, v) == doctest::Approx(-1.6 / (v * v)).epsilon(1e-2));
}

TEST_CASE("x_functions parity and spectral identity") {
    for (double w : {0.3, 0.9, 2.2}) {
        const auto [xss_p, xsb_p] = x_functions(kSys, w);
        const auto [xss_m, xsb_m] = x_functions(kSys, -w);
        CHECK(xss_p.real() == doctest::Approx(xss_m.real()).epsilon(1e-14));
        CHECK(xss_p.imag() == doctest::Approx(-xss_m.imag()).epsilon(1e-14));
        CHECK(xsb_p.real() == doctest::Approx(xsb_m.real()).epsilon(1e-14));
        CHECK(xsb_p.imag() == doctest::Approx(-xsb_m.imag()).epsilon(1e-14));
        // Im X_sb = [Re G_sb(w) - Re G_sb(-w)]/2
        const double odd =
            0.5 * (g_sb(kSys, w, 1.0).real() - g_sb(kSys, -w, 1.0).real());
        CHECK(xsb_p.imag() == doctest::Approx(odd).epsilon(1e-14));
    }
}
