#pragma once

#include <vector>

#include "impurity/errors.hpp"

namespace impurity {

enum class StatKind { Bose, Fermi };

// Statistics tag carrying delta (1 bosonic, 0 fermionic) and the Matsubara
// frequency rule varpi_n = (2n - 1 + delta) * pi / beta.
struct Statistics {
    StatKind kind{StatKind::Bose};

    static Statistics bose() { return {StatKind::Bose}; }
    static Statistics fermi() { return {StatKind::Fermi}; }

    int delta() const { return kind == StatKind::Bose ? 1 : 0; }
    bool is_bose() const { return kind == StatKind::Bose; }
    bool is_fermi() const { return kind == StatKind::Fermi; }

    double matsubara(int n, double beta) const;
};

struct MatsubaraGrid {
    double beta{};
    std::vector<double> frequencies;

    int count() const { return static_cast<int>(frequencies.size()); }
};

// Bose: 1/(1 - exp(-beta*w)); Fermi: 1/(1 + exp(beta*w)).
// Stable for |beta*w| well beyond 700 (only negative exponentials are formed).
double occupation(Statistics statistics, double beta, double omega);

// Pade [0/1] approximant of the Fermi function, 1/2 - 3(w/b)/(w^2 + 12/b^2).
// Error O((beta*w)^5).
double fermi_pade01(double beta, double omega);

// Lowest-Matsubara single-pole scheme, 1/2 - (pi^2/4)(w/b)/(w^2 + (pi/b)^2).
// Error O((beta*w)^3).
double fermi_lowest_matsubara(double beta, double omega);

MatsubaraGrid matsubara_grid(Statistics statistics, double beta, int count);

}  // namespace impurity
