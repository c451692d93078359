#include "impurity/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "impurity/numerics.hpp"

namespace impurity::thermo {

namespace {

constexpr double kRemainderBudget = 1e-9;

double tail_beyond(const std::vector<PowerTail>& terms, double cutoff) {
    double s = 0.0;
    for (const auto& t : terms) {
        s += t.coefficient / ((t.exponent - 1.0) * std::pow(cutoff, t.exponent - 1.0));
    }
    return s;
}

double tail_model(const std::vector<PowerTail>& terms, double varpi) {
    double s = 0.0;
    for (const auto& t : terms) s += t.coefficient * std::pow(varpi, -t.exponent);
    return s;
}

double min_exponent(const std::vector<PowerTail>& terms) {
    double p = std::numeric_limits<double>::infinity();
    for (const auto& t : terms) p = std::min(p, t.exponent);
    return p;
}

}  // namespace

SpectralProvider spectral_provider(const BosonicBO& sys) {
    SpectralProvider sp;
    sp.statistics = Statistics::bose();
    sp.varphi = [sys](double w) { return varphi(sys, w); };
    sp.vartheta = [sys](double v) { return vartheta(sys, v); };
    sp.jump_location = sys.omega_s;
    sp.varphi_below = varphi_sided(sys, JumpSide::Below);
    sp.varphi_above = varphi_sided(sys, JumpSide::Above);
    const double c = sys.omega_s * sys.bath.eta * sys.bath.gamma / 2.0;
    sp.vartheta_tail = {{c, 3.0}, {-c * sys.bath.gamma, 4.0}};
    sp.varphi_tail = {{-c, 3.0}};
    return sp;
}

SpectralProvider spectral_provider(const FermionicBO& sys) {
    SpectralProvider sp;
    sp.statistics = Statistics::fermi();
    sp.varphi = [sys](double w) { return varphi(sys, w); };
    sp.vartheta = [sys](double v) { return vartheta(sys, v); };
    sp.jump_location = sys.omega_s();
    sp.varphi_below = varphi_sided(sys, JumpSide::Below);
    sp.varphi_above = varphi_sided(sys, JumpSide::Above);
    const double eg = sys.bath.eta * sys.bath.gamma;
    sp.vartheta_tail = {{-eg, 2.0}, {eg * sys.bath.gamma, 3.0}};
    sp.varphi_tail = {{-eg * sys.bath.gamma, 3.0}};
    return sp;
}

SumConfig default_sum_config(const SpectralProvider& sp, double T) {
    if (!(T > 0.0)) throw Error("default_sum_config requires T > 0");
    SumConfig cfg;
    cfg.terms = sp.vartheta_tail;
    if (cfg.terms.empty()) cfg.tail = TailKind::None;
    const double beta = 1.0 / T;
    // Truncate once the two-term tail model is accurate to the remainder budget.
    const double varpi_target = (!cfg.terms.empty() && min_exponent(cfg.terms) < 2.5) ? 2000.0 : 1000.0;
    const double by_tail = std::ceil(beta * varpi_target / (2.0 * M_PI));
    cfg.n_terms = static_cast<int>(std::max({200.0, std::ceil(50.0 * T), by_tail}));
    return cfg;
}

double a_by_matsubara(const SpectralProvider& sp, double T, const SumConfig& cfg) {
    if (!(T > 0.0)) throw Error("a_by_matsubara requires T > 0");
    if (cfg.n_terms < 1) throw InvalidCountError("a_by_matsubara requires n_terms >= 1");
    const double beta = 1.0 / T;
    const double spacing = 2.0 * M_PI / beta;
    const double offset = sp.statistics.is_bose() ? 0.0 : -0.5;
    double sum = 0.0;
    for (int n = cfg.n_terms; n >= 1; --n) sum += sp.vartheta((n + offset) * spacing);
    if (cfg.tail == TailKind::PowerLaw) {
        double corr = 0.0;
        for (const auto& t : cfg.terms) {
            corr += t.coefficient * numerics::power_tail_sum(t.exponent, spacing, offset, cfg.n_terms);
        }
        const double varpi_last = (cfg.n_terms + offset) * spacing;
        const double model_err = std::abs(sp.vartheta(varpi_last) - tail_model(cfg.terms, varpi_last));
        const double p = cfg.terms.empty() ? 2.0 : min_exponent(cfg.terms);
        const double remainder_est = model_err * varpi_last / (M_PI * (p + 1.0));
        if (remainder_est > kRemainderBudget) {
            throw NotConvergedError("Matsubara tail remainder estimate above budget");
        }
        sum += corr;
    }
    if (sp.statistics.is_bose()) return -T * sp.vartheta(0.0) - 2.0 * T * sum;
    return 2.0 * T * sum;
}

double a_by_matsubara(const SpectralProvider& sp, double T) {
    return a_by_matsubara(sp, T, default_sum_config(sp, T));
}

double a_by_integral(const SpectralProvider& sp, double T) {
    if (!(T > 0.0)) throw Error("a_by_integral requires T > 0");
    const double beta = 1.0 / T;
    const auto integrand = [&](double w) { return sp.varphi(w) * occupation(sp.statistics, beta, w); };
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> cuts{-inf, 0.0, inf};
    if (sp.jump_location) {
        cuts = {-inf, -*sp.jump_location, 0.0, *sp.jump_location, inf};
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += numerics::integrate(integrand, cuts[i], cuts[i + 1], 1e-10);
    }
    return -total / M_PI;
}

double entropy(const SpectralProvider& sp, double T) {
    if (!(T > 0.0)) throw Error("entropy requires T > 0");
    const double h = std::max(1e-3 * T, 1e-6);
    return -numerics::derivative([&](double x) { return a_by_matsubara(sp, x); }, T, h);
}

double internal_energy(const SpectralProvider& sp, double T) {
    return a_by_matsubara(sp, T) + T * entropy(sp, T);
}

ThermoPoint thermo_point(const SpectralProvider& sp, double T) {
    ThermoPoint pt;
    pt.T = T;
    pt.A = a_by_matsubara(sp, T);
    pt.S = entropy(sp, T);
    pt.U = pt.A + T * pt.S;
    return pt;
}

EqualAreaResult equal_area_check(const SpectralProvider& sp, double cutoff) {
    if (!(cutoff > 0.0)) throw Error("equal_area_check requires cutoff > 0");
    EqualAreaResult res;
    std::vector<double> cuts{0.0, cutoff};
    if (sp.jump_location && *sp.jump_location < cutoff) {
        cuts = {0.0, *sp.jump_location, cutoff};
    }
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        res.phi_area += numerics::integrate(sp.varphi, cuts[i], cuts[i + 1], 1e-10);
    }
    res.phi_area += tail_beyond(sp.varphi_tail, cutoff);
    res.theta_area = numerics::integrate(sp.vartheta, 0.0, cutoff, 1e-10);
    res.theta_area += tail_beyond(sp.vartheta_tail, cutoff);
    const double scale = std::max(std::abs(res.phi_area), std::abs(res.theta_area));
    res.rel_diff = scale > 0.0 ? std::abs(res.phi_area - res.theta_area) / scale : 0.0;
    return res;
}

Asymptotics high_t_asymptotics(const SpectralProvider& sp, double T) {
    if (!(T > 0.0)) throw Error("high_t_asymptotics requires T > 0");
    Asymptotics out;
    if (sp.statistics.is_bose()) {
        const double t0 = sp.vartheta(0.0);
        out.A_approx = -T * t0;
        out.S_approx = t0;
        out.U_approx = 0.0;
        return out;
    }
    const double kappa_a = 3.0;
    const double xi_a = std::sqrt(12.0);
    const double varpi_a = xi_a * T;
    const double h = 1e-4 * std::max(1.0, varpi_a);
    const double dtheta = (sp.vartheta(varpi_a + h) - sp.vartheta(varpi_a - h)) / (2.0 * h);
    out.A_approx = (kappa_a / xi_a) * varpi_a * sp.vartheta(varpi_a);
    out.U_approx = -(kappa_a / xi_a) * varpi_a * varpi_a * dtheta;
    out.S_approx = (out.U_approx - out.A_approx) / T;
    return out;
}

double kappa_lowest_matsubara_a(const SpectralProvider& sp, double T) {
    if (sp.statistics.is_bose()) {
        throw WrongStatisticsError("lowest-Matsubara scheme applies to fermionic statistics");
    }
    if (!(T > 0.0)) throw Error("kappa_lowest_matsubara_a requires T > 0");
    return (M_PI * M_PI / 4.0) * T * sp.vartheta(M_PI * T);
}

}  // namespace impurity::thermo
