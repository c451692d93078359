#include "impurity/bo_bosonic.hpp"

#include <cmath>

namespace impurity {

BosonicBO::BosonicBO(double omega_s_, BathModel bath_) : omega_s(omega_s_), bath(bath_) {
    if (!(omega_s > 0.0)) throw ConfigError("BosonicBO requires omega_s > 0");
    const double re0 = phi_tilde(bath, 0.0).real();
    if (!(omega_s * omega_s - omega_s * re0 > 0.0)) {
        throw UnstableError("bosonic BO unstable: requires omega_s^2 - omega_s*Re phi(0) > 0 "
                            "(eta < omega_s for Drude)");
    }
}

std::complex<double> chi_ss(const BosonicBO& sys, double omega) {
    const double d = sys.omega_s * sys.omega_s - omega * omega;
    return sys.omega_s / (d - sys.omega_s * phi_tilde(sys.bath, omega));
}

std::complex<double> chi_sb(const BosonicBO& sys, double omega, double lambda2) {
    if (!(lambda2 >= 0.0 && lambda2 <= 1.0)) throw Error("chi_sb requires lambda2 in [0,1]");
    const double re0 = phi_tilde(sys.bath, 0.0).real();
    if (!(sys.omega_s * sys.omega_s - lambda2 * sys.omega_s * re0 > 0.0)) {
        throw UnstableError("bosonic BO unstable at requested lambda2");
    }
    const double d = sys.omega_s * sys.omega_s - omega * omega;
    const auto p = phi_tilde(sys.bath, omega);
    return -lambda2 * sys.omega_s * p / (d - lambda2 * sys.omega_s * p);
}

double varphi(const BosonicBO& sys, double omega) {
    const double d = sys.omega_s * sys.omega_s - omega * omega;
    if (d == 0.0) throw AtDiscontinuityError("varphi evaluated exactly at |omega| = omega_s");
    return 0.5 * std::arg(d / (d - sys.omega_s * phi_tilde(sys.bath, omega)));
}

double varphi_sided(const BosonicBO& sys, JumpSide side) {
    const double base = -0.5 * std::arg(phi_tilde(sys.bath, sys.omega_s));
    return side == JumpSide::Below ? base + M_PI / 2.0 : base;
}

double vartheta(const BosonicBO& sys, double varpi) {
    const double v = std::abs(varpi);
    const double d = sys.omega_s * sys.omega_s + v * v;
    const double p = phi_tilde_laplace(sys.bath, v).real();
    // stability keeps d - omega_s*p > 0; log1p form preserves the tail accuracy
    return -0.5 * std::log1p(-sys.omega_s * p / d);
}

}  // namespace impurity
