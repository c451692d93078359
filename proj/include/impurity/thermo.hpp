#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "impurity/bo_bosonic.hpp"
#include "impurity/bo_fermionic.hpp"
#include "impurity/statfun.hpp"

namespace impurity::thermo {

// One analytic tail term coefficient/varpi^exponent of the spectrum.
struct PowerTail {
    double coefficient{};
    double exponent{};
};

// Callable spectral functions feeding the thermodynamic routes.
// varphi must be odd; vartheta is the even extension theta(|varpi|).
struct SpectralProvider {
    Statistics statistics;
    std::function<double(double)> varphi;    // defined away from +-jump_location
    std::function<double(double)> vartheta;  // varpi >= 0
    std::optional<double> jump_location;
    double varphi_below{};  // one-sided values at +jump_location
    double varphi_above{};
    std::vector<PowerTail> vartheta_tail;  // leading large-varpi behavior
    std::vector<PowerTail> varphi_tail;    // leading large-omega behavior
};

SpectralProvider spectral_provider(const BosonicBO& sys);
SpectralProvider spectral_provider(const FermionicBO& sys);

enum class TailKind { None, PowerLaw };

struct SumConfig {
    int n_terms{1};
    TailKind tail{TailKind::PowerLaw};
    std::vector<PowerTail> terms;  // used when tail == PowerLaw
};

// Truncation sized so the tail-corrected remainder stays below ~1e-9.
SumConfig default_sum_config(const SpectralProvider& sp, double T);

struct ThermoPoint {
    double T{};
    double A{};
    double U{};
    double S{};
};

struct EqualAreaResult {
    double phi_area{};
    double theta_area{};
    double rel_diff{};
};

struct Asymptotics {
    double A_approx{};
    double U_approx{};
    double S_approx{};
};

// -(1/pi) int varphi(w)*occupation(w) dw with panel splits at 0 and the jump.
double a_by_integral(const SpectralProvider& sp, double T);

// Matsubara-sum route with analytic power-law tail correction.
double a_by_matsubara(const SpectralProvider& sp, double T, const SumConfig& cfg);
double a_by_matsubara(const SpectralProvider& sp, double T);

// S = -dA/dT, Richardson-extrapolated central difference of the sum route.
double entropy(const SpectralProvider& sp, double T);

// U = A + T*S.
double internal_energy(const SpectralProvider& sp, double T);

ThermoPoint thermo_point(const SpectralProvider& sp, double T);

// (int_0^inf varphi, int_0^inf vartheta, relative difference); the portion
// beyond the cutoff is integrated analytically from the power tails.
EqualAreaResult equal_area_check(const SpectralProvider& sp, double cutoff = 1e4);

// High-temperature approximants: bosonic {-T*theta(0), 0, theta(0)};
// fermionic Pade [0/1] scheme with kappa_a = 3, xi_a = sqrt(12).
Asymptotics high_t_asymptotics(const SpectralProvider& sp, double T);

// Lowest-Matsubara scheme (kappa = pi^2/4)*T*theta(pi*T); fermionic only.
double kappa_lowest_matsubara_a(const SpectralProvider& sp, double T);

}  // namespace impurity::thermo
