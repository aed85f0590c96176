#pragma once

// Quadrature for the weighted measure, Hermite analysis/synthesis and the
// matrices of delta_j, delta_j^*, L^{-1/2} and R_j on the truncated basis.

#include "dunkl/hermite.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>

namespace dunkl {

/// sum_q weights[q] g(nodes[q]) approximates int g(x) e^{-a|x|^2} w(x) dx,
/// with a = gaussian_exponent.
struct QuadratureRule {
    std::vector<Point> nodes;
    std::vector<double> weights;
    double gaussian_exponent = 1.0;
    std::string kind;

    /// int F(x) w(x) dx for an integrand that already carries its decay.
    double integrate(const std::function<double(const Point&)>& F) const;
};

/// Z2^d: tensor of Golub-Welsch rules for |u|^{2k} e^{-u^2};
/// d = 2: polar rule (radial Gauss for r^{2 gamma + 1} e^{-r^2}, Gauss-Legendre
/// on each arc between mirrors); otherwise a tensor Gauss-Hermite rule with
/// w multiplied into the weights.
QuadratureRule quadrature_rule(const RootSystem& rs, int order);

/// Composite Gauss-Legendre on [a, b] for w(x) dx (d = 1, no Gaussian factor).
QuadratureRule interval_rule(const RootSystem& rs, double a, double b, int panels, int points_per_panel);

/// Coefficients <f, h_n> in basis order.
using SpectralVector = Eigen::VectorXd;

SpectralVector analyze(const HermiteBasis& basis, const QuadratureRule& rule,
                       const std::function<double(const Point&)>& f);
double synthesize(const HermiteBasis& basis, const SpectralVector& v, const Point& x);
SpectralVector heat_apply(const HermiteBasis& basis, double t, const SpectralVector& v);
SpectralVector inv_sqrt_apply(const HermiteBasis& basis, const SpectralVector& v);

enum class DeltaVariant { Lower, Raise };

/// Dense matrix on the basis: column n holds the coefficients of the image of h_n.
struct OperatorMatrix {
    Eigen::MatrixXd M;
    /// Columns with |n| <= safe_degree are exact; above it the image leaves the truncation.
    int safe_degree = 0;
    bool leakage = false;
};

/// Exact route through the basis polynomials:
/// delta_j (e^{-|x|^2/2} H) = e^{-|x|^2/2} T_j H and
/// delta_j^* (e^{-|x|^2/2} H) = e^{-|x|^2/2} (2 x_j H - T_j H),
/// re-expanded in the H basis with the pairing.
OperatorMatrix delta_matrix_polynomial(const HermiteBasis& basis, int j, DeltaVariant variant);
/// Z2^d closed form: delta_j h_n = sqrt(2 mu(n_j)) h_{n - e_j}.
OperatorMatrix delta_matrix_ladder(const HermiteBasis& basis, int j, DeltaVariant variant);
/// Ladder form for Z2^d, polynomial route otherwise.
OperatorMatrix delta_matrix(const HermiteBasis& basis, int j, DeltaVariant variant);

/// R_j = delta_j L^{-1/2}.
OperatorMatrix riesz_matrix(const HermiteBasis& basis, int j);
/// R_j^* = delta_j^* L^{-1/2}.
OperatorMatrix riesz_adjoint_matrix(const HermiteBasis& basis, int j);

/// Largest singular value by power iteration on M^T M.
double operator_norm(const Eigen::MatrixXd& M, double tol = 1e-12, int max_iter = 100000);

/// Columns (and rows) restricted to |n| <= k.
Eigen::MatrixXd restrict_to_degree(const HermiteBasis& basis, const Eigen::MatrixXd& M, int k);

/// row,col,value for every nonzero entry (CRLF line ends).
std::string matrix_to_csv(const HermiteBasis& basis, const OperatorMatrix& m);
nlohmann::json spectral_vector_to_json(const HermiteBasis& basis, const SpectralVector& v);

}  // namespace dunkl
