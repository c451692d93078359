#include "impurity/bath.hpp"

#include <cmath>

namespace impurity {

BathModel BathModel::drude(double eta, double gamma) {
    if (!(gamma > 0.0)) throw ConfigError("Drude bath requires gamma > 0");
    if (!(eta >= 0.0)) throw ConfigError("Drude bath requires eta >= 0");
    return BathModel{BathKind::Drude, eta, gamma};
}

std::complex<double> phi_tilde(const BathModel& model, double omega) {
    // i*eta*gamma/(w + i*gamma) = eta*gamma*(gamma + i*w)/(w^2 + gamma^2)
    const double den = omega * omega + model.gamma * model.gamma;
    const double pre = model.eta * model.gamma / den;
    return {pre * model.gamma, pre * omega};
}

std::complex<double> phi_tilde_laplace(const BathModel& model, double varpi) {
    if (!(varpi >= 0.0)) throw Error("phi_tilde_laplace requires varpi >= 0");
    return {model.eta * model.gamma / (varpi + model.gamma), 0.0};
}

double coupling_eta0(const BathModel& model) {
    return phi_tilde(model, 0.0).real();
}

double spectral_density_J(const BathModel& model, double omega, Statistics statistics) {
    const auto p = phi_tilde(model, omega);
    // Bosonic: (phi(w) - phi(-w))/2 reduces to Im phi(w), odd and real.
    // Fermionic: (g(w) + g*(w))/2 = Re g(w).
    return statistics.is_bose() ? p.imag() : p.real();
}

}  // namespace impurity
