#include <doctest.h>

#include <cmath>

#include "impurity/bo_bosonic.hpp"

using namespace impurity;

namespace {
const BathModel kBath = BathModel::drude(0.4, 4.0);
const BosonicBO kSys(1.0, kBath);
}  // namespace

TEST_CASE("stability enforced at construction") {
    CHECK_THROWS_AS(BosonicBO(1.0, BathModel::drude(1.0, 4.0)), UnstableError);
    CHECK_THROWS_AS(BosonicBO(1.0, BathModel::drude(1.4, 4.0)), UnstableError);
    CHECK_NOTHROW(BosonicBO(1.0, BathModel::drude(0.999, 4.0)));
}

TEST_CASE("chi_ss static limit") {
    // chi(0) = omega_s / (omega_s^2 - omega_s*eta) = 1/(1 - 0.4)
    const auto c = chi_ss(kSys, 0.0);
    CHECK(c.real() == doctest::Approx(1.0 / 0.6).epsilon(1e-14));
    CHECK(c.imag() == doctest::Approx(0.0));
}

TEST_CASE("chi_sb endpoints in lambda") {
    for (double w : {0.0, 0.5, 1.3}) {
        CHECK(std::abs(chi_sb(kSys, w, 0.0)) == doctest::Approx(0.0));
        const auto full = chi_sb(kSys, w, 1.0);
        const auto expect = -phi_tilde(kBath, w) * chi_ss(kSys, w);
        CHECK(full.real() == doctest::Approx(expect.real()).epsilon(1e-14));
        CHECK(full.imag() == doctest::Approx(expect.imag()).epsilon(1e-14));
    }
    CHECK_THROWS_AS(chi_sb(kSys, 1.0, 1.5), Error);
}

TEST_CASE("chi_sb static value") {
    // -eta/(1 - eta) = -2/3 for eta = 0.4
    CHECK(chi_sb(kSys, 0.0, 1.0).real() == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("varphi parity and discontinuity handling") {
    for (double w : {0.2, 0.8, 1.5, 4.0}) {
        CHECK(varphi(kSys, w) == doctest::Approx(-varphi(kSys, -w)).epsilon(1e-15));
    }
    CHECK_THROWS_AS(varphi(kSys, 1.0), AtDiscontinuityError);
    CHECK_THROWS_AS(varphi(kSys, -1.0), AtDiscontinuityError);
}

TEST_CASE("varphi one-sided limits") {
    const double below = varphi_sided(kSys, JumpSide::Below);
    const double above = varphi_sided(kSys, JumpSide::Above);
    CHECK(below == doctest::Approx(1.4483069952).epsilon(1e-9));
    CHECK(above == doctest::Approx(-0.1224893316).epsilon(1e-8));
    CHECK(below - above == doctest::Approx(M_PI / 2.0).epsilon(1e-14));
    CHECK(varphi(kSys, 1.0 - 1e-9) == doctest::Approx(below).epsilon(1e-7));
    CHECK(varphi(kSys, 1.0 + 1e-9) == doctest::Approx(above).epsilon(1e-6));
}

TEST_CASE("vartheta anchors") {
    CHECK(vartheta(kSys, 0.0) == doctest::Approx(0.5 * std::log(5.0 / 3.0)).epsilon(1e-15));
    CHECK(vartheta(kSys, 0.0) == doctest::Approx(0.25541281188299534).epsilon(1e-14));
    CHECK(vartheta(kSys, 4.0) == doctest::Approx(0.005917228823501420).epsilon(1e-12));
}

TEST_CASE("vartheta even and decaying") {
    for (double v : {0.3, 1.0, 5.0}) {
        CHECK(vartheta(kSys, v) == doctest::Approx(vartheta(kSys, -v)).epsilon(1e-15));
    }
    // large-varpi tail: omega_s*eta*gamma/(2*varpi^3)
    const double v = 300.0;
    CHECK(vartheta(kSys, v) == doctest::Approx(0.8 / (v * v * v)).epsilon(2e-2));
}
