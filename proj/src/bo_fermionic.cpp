#include "impurity/bo_fermionic.hpp"

#include <cmath>

namespace impurity {

FermionicBO::FermionicBO(double epsilon_s_, BathModel bath_) : epsilon_s(epsilon_s_), bath(bath_) {
    if (!(bath.gamma > 0.0)) throw ConfigError("FermionicBO requires gamma > 0");
}

double FermionicBO::omega_s() const { return std::abs(epsilon_s); }

namespace {

std::complex<double> denom(const FermionicBO& sys, double omega, double lambda2) {
    const std::complex<double> d =
        omega - sys.epsilon_s + std::complex<double>(0, 1) * lambda2 * phi_tilde(sys.bath, omega);
    if (d == std::complex<double>(0, 0)) throw PoleOnAxisError("fermionic propagator pole on the real axis");
    return d;
}

}  // namespace

std::complex<double> g_ss(const FermionicBO& sys, double omega) {
    return std::complex<double>(0, 1) / denom(sys, omega, 1.0);
}

std::complex<double> g_sb(const FermionicBO& sys, double omega, double lambda2) {
    if (!(lambda2 >= 0.0 && lambda2 <= 1.0)) throw Error("g_sb requires lambda2 in [0,1]");
    return 2.0 * lambda2 * phi_tilde(sys.bath, omega) / denom(sys, omega, lambda2);
}

namespace {

// 1 - g(w)*Gss(w) = (w - eps) / (w - eps + i*g(w))
std::complex<double> one_minus_gG(const FermionicBO& sys, double omega) {
    return (omega - sys.epsilon_s) / denom(sys, omega, 1.0);
}

}  // namespace

double varphi(const FermionicBO& sys, double omega) {
    if (omega == 0.0) return 0.0;
    const double w = std::abs(omega);
    if (w == sys.omega_s()) throw AtDiscontinuityError("varphi evaluated exactly at |omega| = |epsilon_s|");
    // ratio is formed before taking the principal arg
    const double value = 0.5 * std::arg(one_minus_gG(sys, w) / one_minus_gG(sys, -w));
    return omega > 0.0 ? value : -value;
}

double varphi_sided(const FermionicBO& sys, JumpSide side) {
    const double ws = sys.omega_s();
    const std::complex<double> i(0, 1);
    const double base =
        0.5 * std::arg(i * phi_tilde(sys.bath, -ws) / (2.0 * ws + i * phi_tilde(sys.bath, ws)));
    return side == JumpSide::Below ? base : base - M_PI / 2.0;
}

double vartheta(const FermionicBO& sys, double varpi) {
    const double v = std::abs(varpi);
    const double g = phi_tilde_laplace(sys.bath, v).real();
    // |i*v - eps|^2 = v^2 + eps^2; |i*v - eps + i*g|^2 adds 2*g*v + g^2
    const double d2 = v * v + sys.epsilon_s * sys.epsilon_s;
    return -0.5 * std::log1p((2.0 * g * v + g * g) / d2);
}

std::pair<std::complex<double>, std::complex<double>> x_functions(const FermionicBO& sys,
                                                                  double omega) {
    const std::complex<double> i(0, 1);
    const auto xify = [&](std::complex<double> plus, std::complex<double> minus) {
        return 0.5 * i * (plus - std::conj(minus));
    };
    const auto x_ss = xify(g_ss(sys, omega), g_ss(sys, -omega));
    const auto x_sb = xify(g_sb(sys, omega, 1.0), g_sb(sys, -omega, 1.0));
    return {x_ss, x_sb};
}

}  // namespace impurity
