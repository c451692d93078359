#include "impurity/entangle.hpp"

#include <cmath>

#include "impurity/numerics.hpp"

namespace impurity::entangle {

namespace {

void require_compatible(const MatrixFn& a, const MatrixFn& b) {
    if (a.dim() != b.dim()) throw ShapeMismatchError("matrix dimensions differ");
    if (a.grid.size() != b.grid.size()) throw ShapeMismatchError("grid sizes differ");
    for (std::size_t i = 0; i < a.grid.size(); ++i) {
        if (a.grid[i] != b.grid[i]) throw GridMismatchError("grids differ (off-grid evaluation is not supported)");
    }
}

void require_family(const MatrixFn& bath, const std::vector<MatrixFn>& family,
                    const LambdaGrid& lg) {
    if (static_cast<int>(family.size()) != lg.count()) {
        throw GridMismatchError("local family must be sampled at exactly the lambda nodes");
    }
    for (const auto& fn : family) require_compatible(bath, fn);
}

}  // namespace

void MatrixFn::validate() const {
    if (grid.size() != values.size()) throw ShapeMismatchError("grid/value count mismatch");
    const auto d = dim();
    for (const auto& m : values) {
        if (m.rows() != d || m.cols() != d) throw ShapeMismatchError("non-uniform matrix dimension");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) throw GridMismatchError("grid must be strictly increasing");
    }
}

LambdaGrid LambdaGrid::gauss_legendre(int n) {
    const auto q = numerics::gauss_legendre(n, 0.0, 1.0);
    return LambdaGrid{q.nodes, q.weights};
}

MatrixFn gbb_from_local(const MatrixFn& g, const MatrixFn& gss) {
    require_compatible(g, gss);
    MatrixFn out;
    out.grid = g.grid;
    out.values.reserve(g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        out.values.push_back(g.values[i] - g.values[i] * gss.values[i] * g.values[i]);
    }
    return out;
}

std::vector<std::complex<double>> gsb_trace(const MatrixFn& g, const MatrixFn& gss) {
    require_compatible(g, gss);
    std::vector<std::complex<double>> out(g.values.size());
    const std::complex<double> m2i(0, -2);
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        out[i] = m2i * (g.values[i] * gss.values[i]).trace();
    }
    return out;
}

std::vector<std::complex<double>> chi_sb_trace(const MatrixFn& phi, const MatrixFn& chiss) {
    require_compatible(phi, chiss);
    std::vector<std::complex<double>> out(phi.values.size());
    for (std::size_t i = 0; i < phi.values.size(); ++i) {
        out[i] = -(phi.values[i] * chiss.values[i]).trace();
    }
    return out;
}

std::vector<double> vartheta_by_lambda_quadrature(Statistics kind, const MatrixFn& bath_laplace,
                                                  const std::vector<MatrixFn>& local_laplace,
                                                  const LambdaGrid& lg) {
    require_family(bath_laplace, local_laplace, lg);
    const std::size_t npts = bath_laplace.grid.size();
    std::vector<double> out(npts, 0.0);
    double worst_imag = 0.0;
    for (std::size_t i = 0; i < npts; ++i) {
        std::complex<double> acc = 0.0;
        for (int k = 0; k < lg.count(); ++k) {
            acc += lg.weights[k] * (bath_laplace.values[i] * local_laplace[k].values[i]).trace();
        }
        if (kind.is_fermi()) {
            out[i] = -acc.real();
        } else {
            out[i] = 0.5 * acc.real();
            worst_imag = std::max(worst_imag, std::abs(0.5 * acc.imag()));
        }
    }
    if (kind.is_bose() && worst_imag > 1e-8) {
        throw NonRealResultError("bosonic vartheta integrand has imaginary residual " +
                                 std::to_string(worst_imag));
    }
    return out;
}

std::vector<double> varphi_by_lambda_quadrature(Statistics kind, const MatrixFn& bath_real,
                                                const std::vector<MatrixFn>& local_real,
                                                const LambdaGrid& lg) {
    require_family(bath_real, local_real, lg);
    const std::size_t npts = bath_real.grid.size();
    for (std::size_t i = 0; i < npts; ++i) {
        const double mirror = bath_real.grid[npts - 1 - i];
        if (std::abs(bath_real.grid[i] + mirror) > 1e-12) {
            throw AsymmetricGridError("varphi quadrature requires a grid symmetric about 0");
        }
    }
    std::vector<double> out(npts, 0.0);
    for (std::size_t i = 0; i < npts; ++i) {
        const std::size_t j = npts - 1 - i;  // index of -omega
        std::complex<double> acc = 0.0;
        for (int k = 0; k < lg.count(); ++k) {
            const auto x_plus = (bath_real.values[i] * local_real[k].values[i]).trace();
            if (kind.is_fermi()) {
                const auto x_minus = (bath_real.values[j] * local_real[k].values[j]).trace();
                acc += lg.weights[k] * (x_plus - x_minus);
            } else {
                acc += lg.weights[k] * x_plus;
            }
        }
        out[i] = kind.is_fermi() ? -0.5 * acc.imag() : 0.5 * acc.imag();
    }
    return out;
}

Eigen::VectorXd f_mean_from_q(const Eigen::MatrixXd& eta, const Eigen::VectorXd& q_means) {
    if (eta.cols() != q_means.size()) throw ShapeMismatchError("eta/q dimension mismatch");
    return -eta * q_means;
}

double a_nen(const Eigen::MatrixXd& eta, const std::vector<QMeanTrace>& samples,
             const LambdaGrid& lg) {
    if (static_cast<int>(samples.size()) != lg.count()) {
        throw GridMismatchError("q-mean samples must match the lambda nodes");
    }
    double acc = 0.0;
    for (int k = 0; k < lg.count(); ++k) {
        if (std::abs(samples[k].lambda2 - lg.nodes[k]) > 1e-12) {
            throw GridMismatchError("q-mean sample lambda2 off the quadrature node");
        }
        if (samples[k].means.size() != eta.rows()) throw ShapeMismatchError("q-mean dimension mismatch");
        acc += lg.weights[k] * samples[k].means.dot(eta * samples[k].means);
    }
    return -0.5 * acc;
}

}  // namespace impurity::entangle
