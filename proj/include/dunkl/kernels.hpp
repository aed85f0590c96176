#pragma once

// Dunkl kernel, heat kernels, Gaussian translations and the Riesz kernel.

#include "dunkl/hermite.hpp"

#include <optional>

namespace dunkl {

struct KernelConfig {
    /// Largest series index for dunkl_kernel_1d.
    int series_truncation = 64;
    double series_tol = 1e-16;
    /// Fixed Mehler parameter; chosen per point when empty.
    std::optional<double> mehler_r;
    /// Largest accepted relative size of the last degree shell in the Mehler sum.
    double mehler_tol = 1e-8;
    /// Time-integral tolerances for the Riesz kernel.
    double quad_rel_tol = 1e-10;
    double quad_abs_tol = 0.0;
    int quad_max_intervals = 4000;
    /// Orbit separation below which the Riesz kernel is refused.
    double separation_floor = 1e-6;
};

/// Rank-1 Dunkl kernel E(u, v) by its power series; SeriesNonConvergence when
/// the tail is not below tolerance within series_truncation terms.
double dunkl_kernel_1d(double kappa, double u, double v, const KernelConfig& cfg = {});

/// log E(u, v) for the rank-1 kernel, valid for any real arguments
/// (power series for small |uv|, modified Bessel functions otherwise).
double log_dunkl_kernel_1d(double kappa, double u, double v);

/// Rank-1 kernel through the Bessel closed form
/// Gamma(k+1/2) (|z|/2)^{1/2-k} [I_{k-1/2}(|z|) + sgn(z) I_{k+1/2}(|z|)], z = uv.
double dunkl_kernel_1d_bessel(double kappa, double u, double v);

/// d/dz log E(z, 1) for the rank-1 kernel.
double dunkl_kernel_1d_log_derivative(double kappa, double z);

/// Product of rank-1 kernels for Z2^d; WrongGroup otherwise.
double dunkl_kernel_z2d(const RootSystem& rs, const Point& x, const Point& y);
double log_dunkl_kernel_z2d(const RootSystem& rs, const Point& x, const Point& y);

struct MehlerResult {
    double value = 0;
    double r = 0;
    /// |last two degree shells| / |sum|.
    double last_shell = 0;
};

/// E(x, y) by inverting the Mehler formula with the basis polynomials.
MehlerResult dunkl_kernel_mehler(const HermiteBasis& basis, const Point& x, const Point& y,
                                 const KernelConfig& cfg = {});

/// Truncated Mehler sum sum_{|n|<=N} H_n(x) H_n(y) r^{|n|} / 2^{|n|}.
double mehler_sum(const HermiteBasis& basis, const Point& x, const Point& y, double r);

/// E(x, y) with the best evaluator for the basis' group.
double dunkl_kernel(const HermiteBasis& basis, const Point& x, const Point& y, const KernelConfig& cfg = {});

/// k_t(x, y) = c^{-1} (sinh 2t)^{-gamma-d/2} e^{-coth(2t)(|x|^2+|y|^2)/2} E(x / sinh 2t, y).
double heat_kernel(const HermiteBasis& basis, double t, const Point& x, const Point& y,
                   const KernelConfig& cfg = {});
/// The same closed form with prefactor m instead of 1/c.
double heat_kernel_m_prefactor(const HermiteBasis& basis, double t, const Point& x, const Point& y,
                                    const KernelConfig& cfg = {});
/// sum_n e^{-t(2|n|+2gamma+d)} h_n(x) h_n(y) over the basis.
double heat_kernel_spectral(const HermiteBasis& basis, double t, const Point& x, const Point& y);
/// d/dy_j k_t(x, y) (Z2^d only).
double heat_kernel_dy(const HermiteBasis& basis, double t, const Point& x, const Point& y, int j);

/// (2 pi sinh 2t)^{-d/2} exp(-(tanh t |x+y|^2 + coth t |x-y|^2) / 4).
double heat_kernel_classical(double t, const Point& x, const Point& y);
/// (2 pi sinh 2t)^{-d/2} exp(-coth(2t) |x-y|^2 / 2 - tanh t <x,y>).
double heat_kernel_classical_alt(double t, const Point& x, const Point& y);
double heat_kernel_classical_dy(double t, const Point& x, const Point& y, int j);

/// tau_x(e^{-c|.|^2})(-y) = e^{-c(|x|^2+|y|^2)} E(2c y, x).
double gaussian_translate(const HermiteBasis& basis, double c, const Point& x, const Point& y,
                          const KernelConfig& cfg = {});

struct RieszKernelResult {
    double value = 0;
    double error = 0;
    int evaluations = 0;
    int intervals = 0;
};

/// Integrand of the Riesz kernel in t: k_t(x,y) ((1 - coth 2t) x_j + y_j / sinh 2t) / sqrt(pi t).
double riesz_integrand(const HermiteBasis& basis, int j, double t, const Point& x, const Point& y,
                       const KernelConfig& cfg = {});

/// K_j(x, y) = pi^{-1/2} int_0^inf delta_j k_t(x, y) t^{-1/2} dt; OrbitTooClose when y is
/// within separation_floor of G.x.
RieszKernelResult riesz_kernel(const HermiteBasis& basis, int j, const Point& x, const Point& y,
                               const KernelConfig& cfg = {});

}  // namespace dunkl
