#pragma once

#include <complex>
#include <utility>

#include "impurity/bath.hpp"
#include "impurity/bo_bosonic.hpp"  // JumpSide

namespace impurity {

// Fermionic Brownian oscillator: spinless dot at on-site energy epsilon_s
// (sign free) with a transfer coupling to a noninteracting reservoir.
// The varphi discontinuity sits at omega_s() = |epsilon_s|.
struct FermionicBO {
    double epsilon_s{-1.0};
    BathModel bath{};

    FermionicBO(double epsilon_s, BathModel bath);

    double omega_s() const;
};

// Local Green's function i / (w - eps_s + i*g_tilde(w)).
std::complex<double> g_ss(const FermionicBO& sys, double omega);

// 2*lambda^2*g_tilde(w) / (w - eps_s + i*lambda^2*g_tilde(w));
// at lambda^2 = 1 equals -2i*g_tilde(w)*g_ss(w).
std::complex<double> g_sb(const FermionicBO& sys, double omega, double lambda2);

// Odd free-energy spectral density with a pi/2 jump at |w| = omega_s().
double varphi(const FermionicBO& sys, double omega);

// One-sided limits of varphi at omega = +omega_s().
double varphi_sided(const FermionicBO& sys, JumpSide side);

// ln| (i*varpi - eps_s) / (i*varpi - eps_s + i*g_tilde(i*varpi)) |, even.
double vartheta(const FermionicBO& sys, double varpi);

// Frequency resolutions (X_SS, X_SB) of -Im G(t), built as
// X(w) = (i/2)[G(w) - conj(G(-w))]. Re X is even, Im X is odd on symmetric
// grids, and Im X_SB equals the antisymmetrized spectral density
// [Re G_SB(w) - Re G_SB(-w)]/2.
std::pair<std::complex<double>, std::complex<double>> x_functions(const FermionicBO& sys,
                                                                  double omega);

}  // namespace impurity
