#include "impurity/sampled_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace impurity::entangle {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

void write_matrix_fn(std::ostream& os, const MatrixFn& fn) {
    fn.validate();
    const auto d = fn.dim();
    os << "omega";
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            os << ",re_" << r << "_" << c << ",im_" << r << "_" << c;
        }
    }
    os << "\n";
    for (std::size_t i = 0; i < fn.grid.size(); ++i) {
        os << fmt(fn.grid[i]);
        for (Eigen::Index r = 0; r < d; ++r) {
            for (Eigen::Index c = 0; c < d; ++c) {
                const auto v = fn.values[i](r, c);
                os << "," << fmt(v.real()) << "," << fmt(v.imag());
            }
        }
        os << "\n";
    }
}

MatrixFn read_matrix_fn(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ConfigError("sampled-function stream is empty");
    std::size_t columns = 1;
    for (char ch : line) {
        if (ch == ',') ++columns;
    }
    if (columns < 3 || (columns - 1) % 2 != 0) {
        throw ConfigError("sampled-function header must carry omega plus re/im pairs");
    }
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt((columns - 1) / 2.0)));
    if (static_cast<std::size_t>(2 * d * d) + 1 != columns) {
        throw ConfigError("sampled-function column count is not 1 + 2*d^2");
    }
    MatrixFn fn;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<double> nums;
        while (std::getline(row, cell, ',')) {
            try {
                nums.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw ConfigError("sampled-function row contains a non-numeric cell: " + cell);
            }
        }
        if (nums.size() != columns) throw ConfigError("sampled-function row width mismatch");
        fn.grid.push_back(nums[0]);
        Eigen::MatrixXcd m(d, d);
        std::size_t k = 1;
        for (Eigen::Index r = 0; r < d; ++r) {
            for (Eigen::Index c = 0; c < d; ++c) {
                m(r, c) = {nums[k], nums[k + 1]};
                k += 2;
            }
        }
        fn.values.push_back(std::move(m));
    }
    fn.validate();
    return fn;
}

}  // namespace impurity::entangle
