#pragma once

#include <functional>
#include <vector>

#include "impurity/errors.hpp"

namespace impurity::numerics {

struct QuadratureNodes {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre nodes/weights on [-1, 1], arbitrary order.
QuadratureNodes gauss_legendre(int n);

// Same rule mapped to [a, b].
QuadratureNodes gauss_legendre(int n, double a, double b);

// Adaptive Gauss-Kronrod integration; [a, b] may be infinite
// (use +-std::numeric_limits<double>::infinity()). Throws QuadratureError
// when the error estimate exceeds the requested tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, int max_depth = 15);

// Sum_{n=N+1}^infty (scale*(n+offset))^(-p) via Euler-Maclaurin.
double power_tail_sum(double p, double scale, double offset, int n_last);

// Richardson-extrapolated central difference df/dx at x with base step h.
double derivative(const std::function<double(double)>& f, double x, double h);

}  // namespace impurity::numerics
