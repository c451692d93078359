#include "impurity/statfun.hpp"

#include <cmath>

namespace impurity {

double Statistics::matsubara(int n, double beta) const {
    return (2.0 * n - 1.0 + delta()) * M_PI / beta;
}

double occupation(Statistics statistics, double beta, double omega) {
    if (!(beta > 0.0)) throw Error("occupation requires beta > 0");
    const double x = beta * omega;
    if (statistics.is_bose()) {
        if (omega == 0.0) throw BoseAtZeroError("Bose occupation at omega = 0");
        // 1/(1 - e^-x); branch on sign so only negative exponentials appear.
        if (x > 0.0) return 1.0 / (-std::expm1(-x));
        return -std::exp(x) / (-std::expm1(x));
    }
    // 1/(1 + e^x)
    if (x > 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

double fermi_pade01(double beta, double omega) {
    if (!(beta > 0.0)) throw Error("fermi_pade01 requires beta > 0");
    const double xi = std::sqrt(12.0) / beta;
    return 0.5 - 3.0 * (omega / beta) / (omega * omega + xi * xi);
}

double fermi_lowest_matsubara(double beta, double omega) {
    if (!(beta > 0.0)) throw Error("fermi_lowest_matsubara requires beta > 0");
    const double v1 = M_PI / beta;
    return 0.5 - (M_PI * M_PI / 4.0) * (omega / beta) / (omega * omega + v1 * v1);
}

MatsubaraGrid matsubara_grid(Statistics statistics, double beta, int count) {
    if (!(beta > 0.0)) throw Error("matsubara_grid requires beta > 0");
    if (count < 1) throw InvalidCountError("matsubara_grid requires count >= 1");
    MatsubaraGrid grid;
    grid.beta = beta;
    grid.frequencies.reserve(count);
    for (int n = 1; n <= count; ++n) grid.frequencies.push_back(statistics.matsubara(n, beta));
    return grid;
}

}  // namespace impurity
