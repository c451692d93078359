#include "impurity/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "impurity/entangle.hpp"
#include "impurity/numerics.hpp"

#include <json.hpp>

namespace impurity::verify {

namespace {

using std::abs;
using Complex = std::complex<double>;

Check make_check(std::string name, double measured, double tolerance, std::string detail = {}) {
    Check c;
    c.name = std::move(name);
    c.measured = measured;
    c.tolerance = tolerance;
    c.pass = std::isfinite(measured) && measured <= tolerance;
    c.detail = std::move(detail);
    return c;
}

entangle::MatrixFn scalar_fn(const std::vector<double>& grid,
                             const std::function<Complex(double)>& f) {
    entangle::MatrixFn fn;
    fn.grid = grid;
    for (double x : grid) {
        Eigen::MatrixXcd m(1, 1);
        m(0, 0) = f(x);
        fn.values.push_back(m);
    }
    return fn;
}

Check route_equivalence(const RunConfig& cfg, const thermo::SpectralProvider& sp) {
    const std::vector<double> temps{0.05, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0};
    double worst = 0.0;
    for (double T : temps) {
        const double a_sum = thermo::a_by_matsubara(sp, T, cfg.make_sum_config(sp, T));
        const double a_int = thermo::a_by_integral(sp, T);
        worst = std::max(worst, abs(a_sum - a_int) / std::max(1.0, abs(a_sum)));
    }
    return make_check("route_equivalence", worst, cfg.route_equiv_tol,
                      "Matsubara-sum vs occupation-integral free energy");
}

Check equal_area(const RunConfig& cfg, const thermo::SpectralProvider& sp) {
    const auto res = thermo::equal_area_check(sp);
    return make_check("equal_area", res.rel_diff, cfg.equal_area_tol,
                      "int_0^inf varphi vs int_0^inf vartheta");
}

Check zero_t_area(const RunConfig& cfg, const thermo::SpectralProvider& sp) {
    const auto res = thermo::equal_area_check(sp);
    const double sign = sp.statistics.is_bose() ? -1.0 : 1.0;
    const double a_area = sign * res.theta_area / M_PI;
    const double a_low = thermo::a_by_matsubara(sp, cfg.t_min, cfg.make_sum_config(sp, cfg.t_min));
    return make_check("zero_t_area_consistency", abs(a_low - a_area), 1e-4,
                      "A at the lowest grid temperature vs the T -> 0 area formula");
}

Check third_law(const thermo::SpectralProvider& sp) {
    const double s = thermo::entropy(sp, 0.01);
    return make_check("third_law", abs(s), 1e-3, "|S| at T = 0.01");
}

Check high_t_limit(const RunConfig& cfg, const thermo::SpectralProvider& sp) {
    const double T = cfg.t_max;
    const double a = thermo::a_by_matsubara(sp, T, cfg.make_sum_config(sp, T));
    const auto approx = thermo::high_t_asymptotics(sp, T);
    const double rel = abs(a - approx.A_approx) / std::max(1.0, abs(a));
    return make_check("high_t_limit", rel, 1e-3,
                      "free energy at the top grid temperature vs the high-T approximant");
}

Check varphi_jump(const thermo::SpectralProvider& sp) {
    const double jump = sp.varphi_below - sp.varphi_above;
    return make_check("varphi_jump", abs(jump - M_PI / 2.0), 1e-9,
                      "one-sided varphi limits differ by pi/2 at the jump");
}

Check jump_limits(const thermo::SpectralProvider& sp) {
    if (!sp.jump_location) return make_check("jump_limits", 0.0, 1e-5, "no discontinuity");
    const double ws = *sp.jump_location;
    const double delta = 1e-7;
    const double below = abs(sp.varphi(ws - delta) - sp.varphi_below);
    const double above = abs(sp.varphi(ws + delta) - sp.varphi_above);
    return make_check("jump_limits", std::max(below, above), 1e-5,
                      "varphi near the jump approaches the one-sided values");
}

Check kramers_kronig(const RunConfig& cfg) {
    const BosonicBO sys(cfg.omega_s, cfg.bath);
    const double direct = chi_sb(sys, 0.0, 1.0).real();
    const double integral = (2.0 / M_PI) *
        numerics::integrate([&](double w) { return chi_sb(sys, w, 1.0).imag() / w; }, 0.0,
                            std::numeric_limits<double>::infinity(), 1e-10);
    return make_check("kramers_kronig", abs(direct - integral), 1e-5,
                      "Re chi_sb(0) vs the dispersion integral of Im chi_sb");
}

Check parity(const RunConfig& cfg, const thermo::SpectralProvider& sp) {
    double worst = 0.0;
    for (int i = 1; i <= 40; ++i) {
        const double w = 0.07 * i;  // avoids the grid hitting the jump exactly
        worst = std::max(worst, abs(sp.varphi(w) + sp.varphi(-w)));
        worst = std::max(worst, abs(sp.vartheta(w) - sp.vartheta(-w)));
    }
    if (sp.statistics.is_fermi()) {
        const FermionicBO sys(cfg.epsilon_s, cfg.bath);
        for (int i = 1; i <= 40; ++i) {
            const double w = 0.07 * i;
            const auto [xp_ss, xp_sb] = x_functions(sys, w);
            const auto [xm_ss, xm_sb] = x_functions(sys, -w);
            worst = std::max(worst, abs(xp_ss.real() - xm_ss.real()));
            worst = std::max(worst, abs(xp_ss.imag() + xm_ss.imag()));
            worst = std::max(worst, abs(xp_sb.real() - xm_sb.real()));
            worst = std::max(worst, abs(xp_sb.imag() + xm_sb.imag()));
        }
    }
    return make_check("parity", worst, 1e-12, "varphi odd, vartheta even; Re X even, Im X odd");
}

Check generic_trace_oracle(const RunConfig& cfg) {
    const std::vector<double> grid{-1.3, -0.7, 0.3, 0.7, 1.3};
    double worst = 0.0;
    if (cfg.statistics.is_fermi()) {
        const FermionicBO sys(cfg.epsilon_s, cfg.bath);
        const auto g = scalar_fn(grid, [&](double w) { return phi_tilde(cfg.bath, w); });
        const auto gss = scalar_fn(grid, [&](double w) { return g_ss(sys, w); });
        const auto gbb = entangle::gbb_from_local(g, gss);
        const auto tr = entangle::gsb_trace(g, gss);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Complex gv = phi_tilde(cfg.bath, grid[i]);
            const Complex gs = g_ss(sys, grid[i]);
            worst = std::max(worst, abs(gbb.values[i](0, 0) - (gv - gv * gs * gv)));
            worst = std::max(worst, abs(tr[i] - g_sb(sys, grid[i], 1.0)));
        }
    } else {
        const BosonicBO sys(cfg.omega_s, cfg.bath);
        const auto phi = scalar_fn(grid, [&](double w) { return phi_tilde(cfg.bath, w); });
        const auto chiss = scalar_fn(grid, [&](double w) { return chi_ss(sys, w); });
        const auto tr = entangle::chi_sb_trace(phi, chiss);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            worst = std::max(worst, abs(tr[i] - chi_sb(sys, grid[i], 1.0)));
        }
    }
    return make_check("generic_trace_oracle", worst, 1e-12,
                      "matrix-valued trace plumbing vs the scalar closed forms");
}

Check lambda_quadrature_theta(const RunConfig& cfg, const thermo::SpectralProvider& sp) {
    const std::vector<double> varpis{0.3, 1.0, 4.0};
    const auto lg = entangle::LambdaGrid::gauss_legendre(20);
    const auto bath_laplace =
        scalar_fn(varpis, [&](double v) { return phi_tilde_laplace(cfg.bath, v); });
    std::vector<entangle::MatrixFn> local;
    for (double l2 : lg.nodes) {
        if (cfg.statistics.is_bose()) {
            local.push_back(scalar_fn(varpis, [&](double v) -> Complex {
                const Complex p = phi_tilde_laplace(cfg.bath, v);
                return cfg.omega_s / (cfg.omega_s * cfg.omega_s + v * v - l2 * cfg.omega_s * p);
            }));
        } else {
            local.push_back(scalar_fn(varpis, [&](double v) -> Complex {
                const Complex g = phi_tilde_laplace(cfg.bath, v);
                return Complex(0.0, 1.0) /
                       (Complex(0.0, v) - cfg.epsilon_s + Complex(0.0, 1.0) * l2 * g);
            }));
        }
    }
    const auto theta = entangle::vartheta_by_lambda_quadrature(cfg.statistics, bath_laplace,
                                                               local, lg);
    double worst = 0.0;
    for (std::size_t i = 0; i < varpis.size(); ++i) {
        worst = std::max(worst, abs(theta[i] - sp.vartheta(varpis[i])));
    }
    return make_check("lambda_quadrature_theta", worst, 1e-10,
                      "coupling quadrature of vartheta vs the closed form");
}

Check nonentanglement_identity() {
    // Scalar oracle with <Q>_lambda = c*lambda: a_nen = -eta*c^2/4 exactly.
    const double eta0 = 0.4;
    const double c = 1.7;
    const auto lg = entangle::LambdaGrid::gauss_legendre(8);
    Eigen::MatrixXd eta(1, 1);
    eta(0, 0) = eta0;
    std::vector<entangle::QMeanTrace> samples;
    for (double l2 : lg.nodes) {
        entangle::QMeanTrace s;
        s.lambda2 = l2;
        s.means = Eigen::VectorXd::Constant(1, c * std::sqrt(l2));
        samples.push_back(s);
    }
    const double a = entangle::a_nen(eta, samples, lg);
    double worst = abs(a - (-eta0 * c * c / 4.0));
    Eigen::VectorXd q = Eigen::VectorXd::Constant(1, c);
    worst = std::max(worst, abs(entangle::f_mean_from_q(eta, q)(0) + eta0 * c));
    return make_check("nonentanglement_identity", worst, 1e-12,
                      "a_nen and <F> against a scalar closed form");
}

Check sum_truncation(const RunConfig& cfg, const thermo::SpectralProvider& sp) {
    const std::vector<double> temps{0.05, 1.0, 100.0};
    double worst = 0.0;
    for (double T : temps) {
        auto base = cfg.make_sum_config(sp, T);
        auto dense = base;
        dense.n_terms *= 2;
        worst = std::max(worst, abs(thermo::a_by_matsubara(sp, T, base) -
                                    thermo::a_by_matsubara(sp, T, dense)));
    }
    return make_check("sum_truncation", worst, 1e-9,
                      "free energy is insensitive to doubling the Matsubara truncation");
}

Check finite_values(const RunConfig& cfg, const thermo::SpectralProvider& sp) {
    bool ok = true;
    const double dw = (cfg.omega_max - cfg.omega_min) / (cfg.omega_points - 1);
    for (int i = 0; i < cfg.omega_points; ++i) {
        const double w = cfg.omega_min + i * dw;
        if (sp.jump_location && abs(abs(w) - *sp.jump_location) < 1e-12) continue;
        ok = ok && std::isfinite(sp.varphi(w));
    }
    const double dv = cfg.varpi_max / (cfg.varpi_points - 1);
    for (int i = 0; i < cfg.varpi_points; ++i) {
        ok = ok && std::isfinite(sp.vartheta(i * dv));
    }
    Check c = make_check("finite_values", ok ? 0.0 : 1.0, 0.5,
                         "spectra are finite over the output grids");
    return c;
}

}  // namespace

VerificationReport run_verification(const RunConfig& cfg) {
    cfg.validate();
    const auto sp = cfg.make_provider();

    VerificationReport report;
    report.checks.push_back(route_equivalence(cfg, sp));
    report.checks.push_back(equal_area(cfg, sp));
    report.checks.push_back(zero_t_area(cfg, sp));
    report.checks.push_back(third_law(sp));
    report.checks.push_back(high_t_limit(cfg, sp));
    report.checks.push_back(varphi_jump(sp));
    report.checks.push_back(jump_limits(sp));
    if (cfg.statistics.is_bose()) report.checks.push_back(kramers_kronig(cfg));
    report.checks.push_back(parity(cfg, sp));
    report.checks.push_back(generic_trace_oracle(cfg));
    report.checks.push_back(lambda_quadrature_theta(cfg, sp));
    report.checks.push_back(nonentanglement_identity());
    report.checks.push_back(sum_truncation(cfg, sp));
    report.checks.push_back(finite_values(cfg, sp));

    report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                                 [](const Check& c) { return c.pass; });
    return report;
}

std::string to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["overall"] = report.overall;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["measured"] = c.measured;
        jc["tolerance"] = c.tolerance;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        j["checks"].push_back(jc);
    }
    return j.dump(2) + "\n";
}

}  // namespace impurity::verify
