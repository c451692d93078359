#include "impurity/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>

namespace impurity {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

double to_double(const std::string& key, const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": field '" + key +
                          "' expects a number, got '" + v + "'");
    }
}

int to_int(const std::string& key, const std::string& v, int line) {
    const double x = to_double(key, v, line);
    if (x != std::floor(x)) {
        throw ConfigError("line " + std::to_string(line) + ": field '" + key + "' expects an integer");
    }
    return static_cast<int>(x);
}

}  // namespace

Statistics parse_statistics(const std::string& text) {
    const auto t = lower(trim(text));
    if (t == "bose" || t == "bosonic") return Statistics::bose();
    if (t == "fermi" || t == "fermionic") return Statistics::fermi();
    throw ConfigError("field 'statistics' expects bose or fermi, got '" + text + "'");
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    RunConfig cfg;
    std::string section;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        if (stripped.front() == '[') {
            if (stripped.back() != ']') {
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
            }
            section = lower(trim(stripped.substr(1, stripped.size() - 2)));
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        }
        const auto key = lower(trim(stripped.substr(0, eq)));
        const auto value = trim(stripped.substr(eq + 1));
        const auto full = section.empty() ? key : section + "." + key;

        if (full == "statistics") {
            cfg.statistics = parse_statistics(value);
        } else if (full == "system.omega_s") {
            cfg.omega_s = to_double(full, value, lineno);
        } else if (full == "system.epsilon_s") {
            cfg.epsilon_s = to_double(full, value, lineno);
        } else if (full == "bath.eta") {
            cfg.bath.eta = to_double(full, value, lineno);
        } else if (full == "bath.gamma") {
            cfg.bath.gamma = to_double(full, value, lineno);
        } else if (full == "grid.omega_min") {
            cfg.omega_min = to_double(full, value, lineno);
        } else if (full == "grid.omega_max") {
            cfg.omega_max = to_double(full, value, lineno);
        } else if (full == "grid.omega_points") {
            cfg.omega_points = to_int(full, value, lineno);
        } else if (full == "grid.varpi_max") {
            cfg.varpi_max = to_double(full, value, lineno);
        } else if (full == "grid.varpi_points") {
            cfg.varpi_points = to_int(full, value, lineno);
        } else if (full == "grid.t_min") {
            cfg.t_min = to_double(full, value, lineno);
        } else if (full == "grid.t_max") {
            cfg.t_max = to_double(full, value, lineno);
        } else if (full == "grid.t_points") {
            cfg.t_points = to_int(full, value, lineno);
        } else if (full == "grid.t_spacing") {
            const auto v = lower(value);
            if (v == "linear") {
                cfg.t_spacing = TempSpacing::Linear;
            } else if (v == "log") {
                cfg.t_spacing = TempSpacing::Log;
            } else {
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": grid.t_spacing expects linear or log");
            }
        } else if (full == "tolerances.route_equiv") {
            cfg.route_equiv_tol = to_double(full, value, lineno);
        } else if (full == "tolerances.equal_area") {
            cfg.equal_area_tol = to_double(full, value, lineno);
        } else if (full == "sum.n_terms") {
            cfg.sum_n_terms = to_int(full, value, lineno);
        } else if (full == "sum.tail") {
            const auto v = lower(value);
            if (v == "none") {
                cfg.sum_tail = thermo::TailKind::None;
            } else if (v == "powerlaw") {
                cfg.sum_tail = thermo::TailKind::PowerLaw;
            } else {
                throw ConfigError("line " + std::to_string(lineno) + ": sum.tail expects none or powerlaw");
            }
        } else if (full == "output.jump_epsilon") {
            cfg.jump_epsilon = to_double(full, value, lineno);
        } else {
            throw ConfigError("line " + std::to_string(lineno) + ": unknown field '" + full + "'");
        }
    }
    return cfg;
}

void apply_env_overrides(RunConfig& cfg) {
    if (const char* env = std::getenv("IMPURITY_THERMO_THREADS")) {
        try {
            cfg.threads = std::stoi(env);
        } catch (const std::exception&) {
            throw ConfigError("IMPURITY_THERMO_THREADS must be an integer");
        }
        if (cfg.threads < 0) throw ConfigError("IMPURITY_THERMO_THREADS must be >= 0");
    }
}

void RunConfig::validate() const {
    if (!(bath.gamma > 0.0)) throw ConfigError("bath.gamma must be > 0");
    if (!(bath.eta >= 0.0)) throw ConfigError("bath.eta must be >= 0");
    if (!(omega_min < omega_max)) throw ConfigError("grid.omega_min must be < grid.omega_max");
    if (omega_points < 2) throw ConfigError("grid.omega_points must be >= 2");
    if (!(varpi_max > 0.0)) throw ConfigError("grid.varpi_max must be > 0");
    if (varpi_points < 2) throw ConfigError("grid.varpi_points must be >= 2");
    if (!(t_min > 0.0 && t_min < t_max)) throw ConfigError("temperature grid must satisfy 0 < t_min < t_max");
    if (t_points < 2) throw ConfigError("grid.t_points must be >= 2");
    if (!(route_equiv_tol > 0.0)) throw ConfigError("tolerances.route_equiv must be > 0");
    if (!(equal_area_tol > 0.0)) throw ConfigError("tolerances.equal_area must be > 0");
    if (sum_n_terms < 0) throw ConfigError("sum.n_terms must be >= 0 (0 = auto)");
    if (!(jump_epsilon > 0.0)) throw ConfigError("output.jump_epsilon must be > 0");
    if (statistics.is_bose()) {
        if (!(omega_s > 0.0)) throw ConfigError("system.omega_s must be > 0");
        if (!(bath.eta < omega_s)) {
            throw ConfigError("unstable bosonic configuration: stability requires eta < omega_s "
                              "(omega_s^2 - omega_s*Re phi(0) > 0)");
        }
    }
}

thermo::SpectralProvider RunConfig::make_provider() const {
    validate();
    if (statistics.is_bose()) return thermo::spectral_provider(BosonicBO(omega_s, bath));
    return thermo::spectral_provider(FermionicBO(epsilon_s, bath));
}

thermo::SumConfig RunConfig::make_sum_config(const thermo::SpectralProvider& sp, double T) const {
    thermo::SumConfig cfg = thermo::default_sum_config(sp, T);
    if (sum_n_terms > 0) cfg.n_terms = sum_n_terms;
    cfg.tail = sum_tail;
    return cfg;
}

}  // namespace impurity
