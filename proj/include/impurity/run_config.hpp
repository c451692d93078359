#pragma once

#include <string>

#include "impurity/bath.hpp"
#include "impurity/statfun.hpp"
#include "impurity/thermo.hpp"

namespace impurity {

enum class TempSpacing { Linear, Log };

// Run configuration shared by the CLI subcommands. Flat key = value text with
// [section] headers; CLI flags override file values.
struct RunConfig {
    Statistics statistics = Statistics::bose();

    double omega_s = 1.0;     // bosonic oscillator frequency
    double epsilon_s = -1.0;  // fermionic on-site energy

    BathModel bath = BathModel::drude(0.4, 4.0);

    double omega_min = -6.0;
    double omega_max = 6.0;
    int omega_points = 2401;

    double varpi_max = 6.0;
    int varpi_points = 1201;

    double t_min = 0.02;
    double t_max = 100.0;
    int t_points = 200;
    TempSpacing t_spacing = TempSpacing::Log;

    double route_equiv_tol = 1e-6;
    double equal_area_tol = 1e-6;

    int sum_n_terms = 0;  // 0 = automatic truncation
    thermo::TailKind sum_tail = thermo::TailKind::PowerLaw;

    double jump_epsilon = 1e-9;
    int threads = 0;  // 0 = auto; cap read from IMPURITY_THERMO_THREADS

    void validate() const;

    thermo::SpectralProvider make_provider() const;
    thermo::SumConfig make_sum_config(const thermo::SpectralProvider& sp, double T) const;
};

RunConfig parse_config_file(const std::string& path);
void apply_env_overrides(RunConfig& cfg);

Statistics parse_statistics(const std::string& text);

}  // namespace impurity
