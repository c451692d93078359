#pragma once

#include <complex>

#include "impurity/errors.hpp"
#include "impurity/statfun.hpp"

namespace impurity {

enum class BathKind { Drude };

// Analytic bath model. All energies in units of omega_S (hbar = k_B = 1).
// Drude: phi_tilde(w) = i*eta*gamma/(w + i*gamma), identical for the bosonic
// response and the fermionic Green's function of the demo bath.
struct BathModel {
    BathKind kind{BathKind::Drude};
    double eta{0.4};    // coupling strength
    double gamma{4.0};  // cutoff rate

    static BathModel drude(double eta, double gamma);
};

// phi_tilde (= g_tilde) on the real frequency axis.
std::complex<double> phi_tilde(const BathModel& model, double omega);

// phi_tilde analytically continued to z = i*varpi (Laplace axis, varpi >= 0).
// Real-valued for Drude: eta*gamma/(varpi + gamma); returned as complex to
// serve the generic matrix-valued plumbing.
std::complex<double> phi_tilde_laplace(const BathModel& model, double varpi);

// eta_uv = phi_tilde(omega = 0); scalar and real here.
double coupling_eta0(const BathModel& model);

// Scalar bath spectral density.
// Bosonic: (phi_tilde(w) - phi_tilde(-w))/2, odd and real.
// Fermionic: Re g_tilde(w), even for the scalar Drude case.
double spectral_density_J(const BathModel& model, double omega, Statistics statistics);

}  // namespace impurity
