#include "impurity/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace impurity::numerics {

QuadratureNodes gauss_legendre(int n) {
    if (n < 1) throw Error("gauss_legendre requires n >= 1");
    QuadratureNodes q;
    q.nodes.resize(n);
    q.weights.resize(n);
    // Newton iteration on P_n, seeded by the Chebyshev-like estimate.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        q.nodes[i] = -x;
        q.nodes[n - 1 - i] = x;
        q.weights[i] = w;
        q.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) q.nodes[n / 2] = 0.0;
    return q;
}

QuadratureNodes gauss_legendre(int n, double a, double b) {
    QuadratureNodes q = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        q.nodes[i] = mid + half * q.nodes[i];
        q.weights[i] *= half;
    }
    return q;
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 int max_depth) {
    using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
    double error = 0.0;
    const double value = gk::integrate(f, a, b, max_depth, rel_tol, &error);
    const double scale = std::max(1.0, std::abs(value));
    if (!(error <= 100.0 * rel_tol * scale) || !std::isfinite(value)) {
        throw QuadratureError("adaptive quadrature failed to meet tolerance");
    }
    return value;
}

double power_tail_sum(double p, double scale, double offset, int n_last) {
    // Euler-Maclaurin at M = n_last + 1 for f(n) = (scale*(n+offset))^-p.
    const double x0 = n_last + 1 + offset;
    const double f0 = std::pow(x0, -p);
    double s = std::pow(x0, 1.0 - p) / (p - 1.0);  // integral term
    s += 0.5 * f0;
    s += p * std::pow(x0, -p - 1.0) / 12.0;
    s -= p * (p + 1.0) * (p + 2.0) * std::pow(x0, -p - 3.0) / 720.0;
    return s * std::pow(scale, -p);
}

double derivative(const std::function<double(double)>& f, double x, double h) {
    const auto central = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
    const double d1 = central(h);
    const double d2 = central(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

}  // namespace impurity::numerics
