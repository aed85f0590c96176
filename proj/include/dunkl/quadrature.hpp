#pragma once

// One-dimensional quadrature building blocks.

#include "dunkl/field.hpp"

#include <functional>
#include <vector>

namespace dunkl {

struct IntegrationResult {
    double value = 0;
    double error = 0;
    int evaluations = 0;
    int intervals = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b], bisecting the interval with the
/// largest error estimate until error <= max(abs_tol, rel_tol * |value|).
IntegrationResult integrate_gk15(const std::function<double(double)>& f, double a, double b, double abs_tol,
                                 double rel_tol, int max_intervals = 4000);

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes/weights from the three-term recurrence of the monic orthogonal
/// polynomials: p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1}; beta_0 is the mass.
GaussRule golub_welsch(const std::vector<double>& alpha, const std::vector<double>& beta);

struct Recurrence {
    std::vector<double> alpha;
    std::vector<double> beta;
};

/// Chebyshev's algorithm: the first n recurrence coefficients from the
/// moments m_0 .. m_{2n-1}. Exact over the rationals.
Recurrence recurrence_from_moments(const std::vector<Rational>& moments, int n);

GaussRule gauss_legendre(int n);
/// Weight |u|^{2 kappa} e^{-u^2} on the real line.
GaussRule generalized_hermite_rule(double kappa, int n);
/// Weight r^{2 gamma + 1} e^{-r^2} on (0, inf).
GaussRule radial_rule(double gamma, int n);
/// Double-exponential rule on [a, b] with step 2^-level; nodes stay strictly inside.
GaussRule tanh_sinh_rule(double a, double b, int level);

}  // namespace dunkl
