#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "impurity/errors.hpp"
#include "impurity/statfun.hpp"

namespace impurity::entangle {

// Matrix-valued complex function sampled on a strictly increasing grid.
struct MatrixFn {
    std::vector<double> grid;
    std::vector<Eigen::MatrixXcd> values;  // one d x d matrix per grid point

    Eigen::Index dim() const { return values.empty() ? 0 : values.front().rows(); }
    std::size_t size() const { return grid.size(); }
    void validate() const;
};

// Quadrature over lambda^2 in (0, 1); weights sum to 1.
struct LambdaGrid {
    std::vector<double> nodes;    // lambda^2 values, strictly inside (0, 1)
    std::vector<double> weights;

    static LambdaGrid gauss_legendre(int n);
    int count() const { return static_cast<int>(nodes.size()); }
};

// <Q_u> means sampled at one lambda^2 node.
struct QMeanTrace {
    double lambda2{};
    Eigen::VectorXd means;
};

// g - g*Gss*g per grid point (bath-bath Green's function from local input).
MatrixFn gbb_from_local(const MatrixFn& g, const MatrixFn& gss);

// -2i tr[g*Gss] per grid point.
std::vector<std::complex<double>> gsb_trace(const MatrixFn& g, const MatrixFn& gss);

// -tr[phi*chiss] per grid point.
std::vector<std::complex<double>> chi_sb_trace(const MatrixFn& phi, const MatrixFn& chiss);

// lambda^2-quadrature of the entanglement free-energy spectrum on the Laplace
// grid of bath_laplace. local_laplace[k] is the local function at coupling
// lg.nodes[k]. Fermionic: -sum_k w_k Re tr[g(iv) Gss(iv; l_k)];
// bosonic: (1/2) sum_k w_k tr[phi(iv) chiss(iv; l_k)], imaginary residual
// above 1e-8 raises NonRealResultError.
std::vector<double> vartheta_by_lambda_quadrature(Statistics kind, const MatrixFn& bath_laplace,
                                                  const std::vector<MatrixFn>& local_laplace,
                                                  const LambdaGrid& lg);

// lambda^2-quadrature of the free-energy spectral density on the (symmetric)
// real-frequency grid of bath_real. Fermionic uses the +-omega
// antisymmetrization; the result is odd by construction.
std::vector<double> varphi_by_lambda_quadrature(Statistics kind, const MatrixFn& bath_real,
                                                const std::vector<MatrixFn>& local_real,
                                                const LambdaGrid& lg);

// <F_u> = -sum_v eta_uv <Q_v>.
Eigen::VectorXd f_mean_from_q(const Eigen::MatrixXd& eta, const Eigen::VectorXd& q_means);

// Nonentanglement free energy
// -(1/2) sum_uv eta_uv int_0^1 dlambda^2 <Q_u>_l <Q_v>_l.
double a_nen(const Eigen::MatrixXd& eta, const std::vector<QMeanTrace>& samples,
             const LambdaGrid& lg);

}  // namespace impurity::entangle
