#pragma once

#include <complex>

#include "impurity/bath.hpp"

namespace impurity {

enum class JumpSide { Below, Above };

// Bosonic Brownian oscillator: harmonic mode of frequency omega_s coupled to
// an analytic bath. Stability requires omega_s^2 - omega_s*Re phi_tilde(0) > 0
// (eta < omega_s for Drude); enforced at construction.
struct BosonicBO {
    double omega_s{1.0};
    BathModel bath{};

    BosonicBO(double omega_s, BathModel bath);
};

// Local susceptibility omega_s / (omega_s^2 - w^2 - omega_s*phi_tilde(w)).
std::complex<double> chi_ss(const BosonicBO& sys, double omega);

// Nonlocal system-bath response at coupling lambda^2 in [0, 1];
// at lambda^2 = 1 equals -phi_tilde(w)*chi_ss(w).
std::complex<double> chi_sb(const BosonicBO& sys, double omega, double lambda2);

// Free-energy spectral density, odd in omega, with a pi/2 jump at |w| = omega_s.
// Throws AtDiscontinuityError exactly at the jump; use varphi_sided there.
double varphi(const BosonicBO& sys, double omega);

// One-sided limits of varphi at omega = +omega_s.
double varphi_sided(const BosonicBO& sys, JumpSide side);

// Thermodynamic spectrum on the Laplace axis, continuous and even
// (extension theta(-varpi) = theta(|varpi|)).
double vartheta(const BosonicBO& sys, double varpi);

}  // namespace impurity
