#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "impurity/run_config.hpp"

using namespace impurity;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = (std::filesystem::temp_directory_path() /
                ("impurity_cfg_" + std::to_string(++counter) + ".cfg"))
                   .string();
        std::ofstream os(path);
        os << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("defaults are the demo parameters") {
    RunConfig cfg;
    CHECK(cfg.statistics.is_bose());
    CHECK(cfg.omega_s == 1.0);
    CHECK(cfg.epsilon_s == -1.0);
    CHECK(cfg.bath.eta == 0.4);
    CHECK(cfg.bath.gamma == 4.0);
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("config file parsing") {
    TempFile f(
        "statistics = fermi\n"
        "\n"
        "[system]\n"
        "epsilon_s = -0.5  # on-site energy\n"
        "[bath]\n"
        "eta = 0.2\n"
        "gamma = 2.0\n"
        "[grid]\n"
        "t_min = 0.1\n"
        "t_max = 10\n"
        "t_points = 7\n"
        "t_spacing = linear\n"
        "[sum]\n"
        "n_terms = 5000\n"
        "tail = none\n");
    const auto cfg = parse_config_file(f.path);
    CHECK(cfg.statistics.is_fermi());
    CHECK(cfg.epsilon_s == -0.5);
    CHECK(cfg.bath.eta == 0.2);
    CHECK(cfg.bath.gamma == 2.0);
    CHECK(cfg.t_min == 0.1);
    CHECK(cfg.t_points == 7);
    CHECK(cfg.t_spacing == TempSpacing::Linear);
    CHECK(cfg.sum_n_terms == 5000);
    CHECK(cfg.sum_tail == thermo::TailKind::None);
}

TEST_CASE("parse errors carry the offending line") {
    TempFile unknown("[system]\nnope = 3\n");
    CHECK_THROWS_AS(parse_config_file(unknown.path), ConfigError);
    TempFile bad_number("[bath]\neta = abc\n");
    CHECK_THROWS_AS(parse_config_file(bad_number.path), ConfigError);
    TempFile no_eq("[bath]\neta\n");
    CHECK_THROWS_AS(parse_config_file(no_eq.path), ConfigError);
    CHECK_THROWS_AS(parse_config_file("/nonexistent/impurity.cfg"), ConfigError);
}

TEST_CASE("validation rejects unstable bosonic configs") {
    RunConfig cfg;
    cfg.bath.eta = 1.2;  // >= omega_s
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.statistics = Statistics::fermi();
    CHECK_NOTHROW(cfg.validate());  // no stability bound on the fermionic side
}

TEST_CASE("validation rejects malformed grids") {
    RunConfig cfg;
    cfg.omega_min = 2.0;
    cfg.omega_max = -2.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = RunConfig{};
    cfg.t_min = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = RunConfig{};
    cfg.t_points = 1;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("statistics override parsing") {
    CHECK(parse_statistics("bose").is_bose());
    CHECK(parse_statistics(" Fermi ").is_fermi());
    CHECK_THROWS_AS(parse_statistics("anyon"), ConfigError);
}

TEST_CASE("provider factory follows the statistics") {
    RunConfig cfg;
    CHECK(cfg.make_provider().statistics.is_bose());
    cfg.statistics = Statistics::fermi();
    CHECK(cfg.make_provider().statistics.is_fermi());
}

TEST_CASE("sum config override") {
    RunConfig cfg;
    const auto sp = cfg.make_provider();
    cfg.sum_n_terms = 12345;
    const auto sc = cfg.make_sum_config(sp, 1.0);
    CHECK(sc.n_terms == 12345);
    CHECK(sc.tail == thermo::TailKind::PowerLaw);
}
