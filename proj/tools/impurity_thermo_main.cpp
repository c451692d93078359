// impurity-thermo: spectra / thermo / verify driver around libimpurity.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "impurity/bo_bosonic.hpp"
#include "impurity/bo_fermionic.hpp"
#include "impurity/run_config.hpp"
#include "impurity/thermo.hpp"
#include "impurity/verify.hpp"

namespace {

using impurity::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Options {
    std::string config_path;
    std::string stat;  // "", "bose", "fermi", "both"
    std::string out_dir = ".";
};

RunConfig load_config(const Options& opt) {
    RunConfig cfg;
    if (!opt.config_path.empty()) cfg = impurity::parse_config_file(opt.config_path);
    impurity::apply_env_overrides(cfg);
    if (!opt.stat.empty() && opt.stat != "both") {
        cfg.statistics = impurity::parse_statistics(opt.stat);
    }
    cfg.validate();
    return cfg;
}

void write_metadata(std::ostream& os, const RunConfig& cfg, const std::string& kind) {
    os << "# impurity-thermo " << kind << "\n";
    os << "# statistics = " << (cfg.statistics.is_bose() ? "bose" : "fermi") << "\n";
    if (cfg.statistics.is_bose()) {
        os << "# omega_s = " << fmt(cfg.omega_s) << "\n";
    } else {
        os << "# epsilon_s = " << fmt(cfg.epsilon_s) << "\n";
    }
    os << "# bath = drude, eta = " << fmt(cfg.bath.eta) << ", gamma = " << fmt(cfg.bath.gamma)
       << "\n";
    os << "# units: energies in omega_S, hbar = k_B = 1\n";
}

std::vector<double> spectra_grid(const RunConfig& cfg, double jump) {
    std::vector<double> grid;
    const double dw = (cfg.omega_max - cfg.omega_min) / (cfg.omega_points - 1);
    for (int i = 0; i < cfg.omega_points; ++i) {
        const double w = cfg.omega_min + i * dw;
        if (std::abs(std::abs(w) - jump) < 1e-12) continue;  // replaced by one-sided rows
        grid.push_back(w);
    }
    const double eps = cfg.jump_epsilon;
    for (double s : {-1.0, 1.0}) {
        for (double w : {s * (jump - eps), s * (jump + eps)}) {
            if (w > cfg.omega_min && w < cfg.omega_max) grid.push_back(w);
        }
    }
    std::sort(grid.begin(), grid.end());
    return grid;
}

int cmd_spectra(const Options& opt) {
    const RunConfig cfg = load_config(opt);
    const auto sp = cfg.make_provider();
    const double jump = sp.jump_location.value_or(std::numeric_limits<double>::quiet_NaN());

    std::filesystem::create_directories(opt.out_dir);
    const auto path = std::filesystem::path(opt.out_dir) / "spectra.csv";
    std::ofstream os(path);
    if (!os) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kExitBadInput;
    }

    write_metadata(os, cfg, "spectra");
    if (cfg.statistics.is_bose()) {
        os << "# local = chi_ss, nonlocal = chi_sb (lambda^2 = 1)\n";
    } else {
        os << "# local = x_ss, nonlocal = x_sb (frequency resolutions of -Im G)\n";
    }
    os << "omega,re_local,im_local,re_nonlocal,im_nonlocal,varphi,vartheta\n";

    const auto grid = spectra_grid(cfg, jump);
    bool finite = true;
    double parity_phi = 0.0;
    std::map<double, double> phi_by_w;
    for (double w : grid) {
        std::complex<double> local, nonlocal;
        if (cfg.statistics.is_bose()) {
            const impurity::BosonicBO sys(cfg.omega_s, cfg.bath);
            local = impurity::chi_ss(sys, w);
            nonlocal = impurity::chi_sb(sys, w, 1.0);
        } else {
            const impurity::FermionicBO sys(cfg.epsilon_s, cfg.bath);
            std::tie(local, nonlocal) = impurity::x_functions(sys, w);
        }
        const double phi = sp.varphi(w);
        const double theta = sp.vartheta(std::abs(w));
        for (double v : {local.real(), local.imag(), nonlocal.real(), nonlocal.imag(), phi, theta}) {
            finite = finite && std::isfinite(v);
        }
        phi_by_w[w] = phi;
        os << fmt(w) << "," << fmt(local.real()) << "," << fmt(local.imag()) << ","
           << fmt(nonlocal.real()) << "," << fmt(nonlocal.imag()) << "," << fmt(phi) << ","
           << fmt(theta) << "\n";
    }
    for (const auto& [w, phi] : phi_by_w) {
        const auto it = phi_by_w.find(-w);
        if (it != phi_by_w.end()) parity_phi = std::max(parity_phi, std::abs(phi + it->second));
    }
    os << "# parity_residual_varphi = " << fmt(parity_phi) << "\n";

    if (!finite) {
        std::cerr << "error: non-finite value in spectra output\n";
        return kExitBadInput;
    }
    std::cout << "wrote " << path.string() << "\n";
    return kExitOk;
}

int thermo_one(const RunConfig& cfg, const std::filesystem::path& path) {
    const auto sp = cfg.make_provider();
    std::ofstream os(path);
    if (!os) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kExitBadInput;
    }
    write_metadata(os, cfg, "thermo");
    os << "T,A,U,S,A_integral_route,A_highT_approx,route_residual\n";

    std::vector<double> temps;
    for (int i = 0; i < cfg.t_points; ++i) {
        const double f = static_cast<double>(i) / (cfg.t_points - 1);
        if (cfg.t_spacing == impurity::TempSpacing::Log) {
            temps.push_back(cfg.t_min * std::pow(cfg.t_max / cfg.t_min, f));
        } else {
            temps.push_back(cfg.t_min + f * (cfg.t_max - cfg.t_min));
        }
    }

    bool finite = true;
    for (double T : temps) {
        const auto pt = impurity::thermo::thermo_point(sp, T);
        const double a_int = impurity::thermo::a_by_integral(sp, T);
        const double a_hi = impurity::thermo::high_t_asymptotics(sp, T).A_approx;
        const double residual = std::abs(pt.A - a_int);
        for (double v : {pt.A, pt.U, pt.S, a_int, a_hi}) finite = finite && std::isfinite(v);
        os << fmt(T) << "," << fmt(pt.A) << "," << fmt(pt.U) << "," << fmt(pt.S) << ","
           << fmt(a_int) << "," << fmt(a_hi) << "," << fmt(residual) << "\n";
    }
    if (!finite) {
        std::cerr << "error: non-finite value in thermo output\n";
        return kExitBadInput;
    }
    std::cout << "wrote " << path.string() << "\n";
    return kExitOk;
}

int cmd_thermo(const Options& opt) {
    const std::filesystem::path out(opt.out_dir);
    std::filesystem::create_directories(out);
    if (opt.stat == "both") {
        for (const char* stat : {"bose", "fermi"}) {
            Options one = opt;
            one.stat = stat;
            const int rc = thermo_one(load_config(one), out / ("thermo_" + std::string(stat) + ".csv"));
            if (rc != kExitOk) return rc;
        }
        return kExitOk;
    }
    return thermo_one(load_config(opt), out / "thermo.csv");
}

int cmd_verify(const Options& opt) {
    const RunConfig cfg = load_config(opt);
    const auto report = impurity::verify::run_verification(cfg);
    const auto json = impurity::verify::to_json(report);
    std::cout << json;
    std::filesystem::create_directories(opt.out_dir);
    const auto path = std::filesystem::path(opt.out_dir) / "verify.json";
    std::ofstream os(path);
    if (!os) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kExitBadInput;
    }
    os << json;
    return report.overall ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermodynamics of Brownian-oscillator impurity systems"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&](CLI::App* sub, bool allow_both) {
        sub->add_option("--config", opt.config_path, "run configuration file");
        auto stats = allow_both ? std::vector<std::string>{"bose", "fermi", "both"}
                                : std::vector<std::string>{"bose", "fermi"};
        sub->add_option("--stat", opt.stat, "statistics override")->check(CLI::IsMember(stats));
        sub->add_option("--out", opt.out_dir, "output directory");
    };

    auto* spectra = app.add_subcommand("spectra", "write spectral functions as CSV");
    auto* thermo = app.add_subcommand("thermo", "write thermodynamic quantities as CSV");
    auto* verify = app.add_subcommand("verify", "run the internal consistency suite");
    add_common(spectra, false);
    add_common(thermo, true);
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (spectra->parsed()) return cmd_spectra(opt);
        if (thermo->parsed()) return cmd_thermo(opt);
        return cmd_verify(opt);
    } catch (const impurity::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
