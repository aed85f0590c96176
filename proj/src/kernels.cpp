#include "dunkl/kernels.hpp"

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <cmath>
#include <limits>

namespace dunkl {

namespace {

const bool kGslQuiet = [] {
    gsl_set_error_handler_off();
    return true;
}();

// sum_n c_n z^n with c_0 = 1, c_n = c_{n-1} / mu_n; also returns the derivative.
struct SeriesValue {
    double value, derivative;
    int terms;
    bool converged;
};

SeriesValue rank1_series(double kappa, double z, int max_terms, double tol) {
    double term = 1.0, sum = 1.0, dsum = 0.0;
    for (int n = 1; n <= max_terms; ++n) {
        double mu = rank1_mu(kappa, n);
        dsum += n * term / mu;  // n c_n z^{n-1}
        term *= z / mu;
        sum += term;
        // remaining terms are bounded by a geometric series with ratio |z| / mu_{n+1}
        double ratio = std::abs(z) / rank1_mu(kappa, n + 1);
        if (ratio < 0.5 && std::abs(term) * ratio / (1.0 - ratio) <= tol * std::abs(sum))
            return {sum, dsum, n, true};
    }
    return {sum, dsum, max_terms, false};
}

double scaled_I(double nu, double x) {
    gsl_sf_result r;
    if (nu >= 0) {
        if (gsl_sf_bessel_Inu_scaled_e(nu, x, &r) != GSL_SUCCESS)
            throw SeriesNonConvergence("Bessel I evaluation failed");
        return r.val;
    }
    // I_{-v} = I_v + (2/pi) sin(v pi) K_v
    gsl_sf_result k;
    if (gsl_sf_bessel_Inu_scaled_e(-nu, x, &r) != GSL_SUCCESS || gsl_sf_bessel_Knu_scaled_e(-nu, x, &k) != GSL_SUCCESS)
        throw SeriesNonConvergence("Bessel I/K evaluation failed");
    return r.val + (2.0 / M_PI) * std::sin(-nu * M_PI) * k.val * std::exp(-2.0 * x);
}

// e^{-x} (I_{k-1/2}(x) + s I_{k+1/2}(x)) for large x from the Hankel expansion
// e^{-x} I_v(x) ~ (2 pi x)^{-1/2} sum_k (-1)^k a_k(v) x^{-k}, summed as one series
// so the leading terms cancel exactly when s = -1.
double asymptotic_bracket(double kappa, double x, double s) {
    const double m1 = 4.0 * (kappa - 0.5) * (kappa - 0.5), m2 = 4.0 * (kappa + 0.5) * (kappa + 0.5);
    double a1 = 1.0, a2 = 1.0, sum = 1.0 + s, prev = INFINITY;
    for (int k = 1; k < 200; ++k) {
        const double odd = (2.0 * k - 1.0) * (2.0 * k - 1.0);
        a1 *= -(m1 - odd) / (8.0 * k * x);
        a2 *= -(m2 - odd) / (8.0 * k * x);
        const double term = a1 + s * a2;
        if (std::abs(term) > prev) break;  // asymptotic series started to diverge
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return sum / std::sqrt(2.0 * M_PI * x);
}

double log_bessel_form(double kappa, double z) {
    const double x = std::abs(z);
    const double s = z > 0 ? 1.0 : -1.0;
    const double bracket = x > 50.0 + 2.0 * (kappa + 0.5) * (kappa + 0.5)
                               ? asymptotic_bracket(kappa, x, s)
                               : scaled_I(kappa - 0.5, x) + s * scaled_I(kappa + 0.5, x);
    return std::lgamma(kappa + 0.5) + (0.5 - kappa) * std::log(0.5 * x) + x + std::log(bracket);
}

double log_e1(double kappa, double z) {
    if (kappa == 0.0) return z;
    if (std::abs(z) <= 1.0 || (z > 0 && z <= 30.0)) {
        auto s = rank1_series(kappa, z, 400, 1e-17);
        if (s.converged) return std::log(s.value);
    }
    return log_bessel_form(kappa, z);
}

void check_coordinate(const RootSystem& rs) {
    if (!rs.is_coordinate_system()) throw WrongGroup("product Dunkl kernel requires the group Z2^d");
}

double coth(double x) { return 1.0 / std::tanh(x); }

}  // namespace

double dunkl_kernel_1d(double kappa, double u, double v, const KernelConfig& cfg) {
    if (kappa < 0) throw InvalidRootSystem("negative multiplicity");
    auto s = rank1_series(kappa, u * v, cfg.series_truncation, cfg.series_tol);
    if (!s.converged)
        throw SeriesNonConvergence("rank-1 series for uv = " + std::to_string(u * v) + " did not converge in " +
                                   std::to_string(cfg.series_truncation) + " terms");
    return s.value;
}

double log_dunkl_kernel_1d(double kappa, double u, double v) { return log_e1(kappa, u * v); }

double dunkl_kernel_1d_bessel(double kappa, double u, double v) {
    const double z = u * v;
    if (z == 0.0) return 1.0;
    return std::exp(log_bessel_form(kappa, z));
}

double dunkl_kernel_1d_log_derivative(double kappa, double z) {
    if (kappa == 0.0) return 1.0;
    if (std::abs(z) <= 0.5) {
        auto s = rank1_series(kappa, z, 200, 1e-18);
        return s.derivative / s.value;
    }
    // E' = E - kappa (E(z) - E(-z)) / z
    double ratio = std::exp(log_e1(kappa, -z) - log_e1(kappa, z));
    return 1.0 - kappa * (1.0 - ratio) / z;
}

double log_dunkl_kernel_z2d(const RootSystem& rs, const Point& x, const Point& y) {
    check_coordinate(rs);
    if (x.size() != rs.dim() || y.size() != rs.dim()) throw DimensionMismatch("point dimension");
    double s = 0;
    for (int j = 0; j < rs.dim(); ++j) s += log_e1(rs.axis_multiplicity(j), x[j] * y[j]);
    return s;
}

double dunkl_kernel_z2d(const RootSystem& rs, const Point& x, const Point& y) {
    return std::exp(log_dunkl_kernel_z2d(rs, x, y));
}

double mehler_sum(const HermiteBasis& basis, const Point& x, const Point& y, double r) {
    Eigen::VectorXd hx = basis.eval_H(x), hy = basis.eval_H(y);
    double s = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) s += hx[i] * hy[i] * std::pow(0.5 * r, basis.index(i).order());
    return s;
}

MehlerResult dunkl_kernel_mehler(const HermiteBasis& basis, const Point& x, const Point& y, const KernelConfig& cfg) {
    const int d = basis.dim();
    if (x.size() != d || y.size() != d) throw DimensionMismatch("point dimension");
    std::vector<double> candidates;
    if (cfg.mehler_r) {
        if (!(*cfg.mehler_r > 0 && *cfg.mehler_r < 1)) throw ConfigError("mehler_r must lie in (0, 1)");
        candidates.push_back(*cfg.mehler_r);
    } else {
        candidates = {0.5, 0.4, 0.3, 0.2, 0.15, 0.1, 0.07, 0.05, 0.03, 0.02};
    }
    const Eigen::VectorXd hy = basis.eval_H(y);
    const int N = basis.degree();
    MehlerResult best;
    best.last_shell = std::numeric_limits<double>::infinity();
    for (double r : candidates) {
        const double q = 1.0 - r * r;
        Point xp = (q / (2.0 * r)) * x;
        Eigen::VectorXd hx = basis.eval_H(xp);
        std::vector<double> shell(static_cast<std::size_t>(N) + 1, 0.0);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            int k = basis.index(i).order();
            shell[k] += hx[i] * hy[i] * std::pow(0.5 * r, k);
        }
        double total = 0;
        for (double s : shell) total += s;
        double last = std::abs(shell[N]) + (N > 0 ? std::abs(shell[N - 1]) : 0.0);
        double rel = total != 0 ? last / std::abs(total) : std::numeric_limits<double>::infinity();
        if (N == 0) rel = 0;
        if (rel < best.last_shell) {
            best.last_shell = rel;
            best.r = r;
            best.value = std::pow(q, basis.gamma() + 0.5 * d) *
                         std::exp(r * r * (xp.squaredNorm() + y.squaredNorm()) / q) * total;
        }
    }
    if (best.last_shell > cfg.mehler_tol)
        throw TruncationTooCoarse("Mehler sum at degree " + std::to_string(N) + ": last shells contribute " +
                                  std::to_string(best.last_shell) + " (r = " + std::to_string(best.r) + ")");
    return best;
}

double dunkl_kernel(const HermiteBasis& basis, const Point& x, const Point& y, const KernelConfig& cfg) {
    if (basis.gamma() == 0.0) return std::exp(x.dot(y));
    if (basis.root_system().is_coordinate_system()) return dunkl_kernel_z2d(basis.root_system(), x, y);
    return dunkl_kernel_mehler(basis, x, y, cfg).value;
}

namespace {

// log of the factor e^{-coth(2t)(|x|^2+|y|^2)/2} E(x / sinh 2t, y), or its value
// for groups without the product formula.
double heat_core(const HermiteBasis& basis, double t, const Point& x, const Point& y, const KernelConfig& cfg,
                 double log_prefactor) {
    if (!(t > 0)) throw std::invalid_argument("heat kernel requires t > 0");
    const double s = std::sinh(2.0 * t);
    const double expo = -0.5 * coth(2.0 * t) * (x.squaredNorm() + y.squaredNorm());
    const double power = -(basis.gamma() + 0.5 * basis.dim()) * std::log(s);
    if (basis.gamma() == 0.0) return std::exp(log_prefactor + power + expo + x.dot(y) / s);
    if (basis.root_system().is_coordinate_system())
        return std::exp(log_prefactor + power + expo + log_dunkl_kernel_z2d(basis.root_system(), x / s, y));
    Point xs = x / s;
    double e = dunkl_kernel_mehler(basis, xs, y, cfg).value;
    return std::exp(log_prefactor + power + expo) * e;
}

}  // namespace

double heat_kernel(const HermiteBasis& basis, double t, const Point& x, const Point& y, const KernelConfig& cfg) {
    return heat_core(basis, t, x, y, cfg, -std::log(basis.c_kappa()));
}

double heat_kernel_m_prefactor(const HermiteBasis& basis, double t, const Point& x, const Point& y,
                                    const KernelConfig& cfg) {
    return heat_core(basis, t, x, y, cfg, std::log(basis.m_kappa()));
}

double heat_kernel_spectral(const HermiteBasis& basis, double t, const Point& x, const Point& y) {
    Eigen::VectorXd hx = basis.eval_h(x), hy = basis.eval_h(y);
    double s = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) s += std::exp(-t * basis.eigenvalue(i)) * hx[i] * hy[i];
    return s;
}

double heat_kernel_dy(const HermiteBasis& basis, double t, const Point& x, const Point& y, int j) {
    const RootSystem& rs = basis.root_system();
    check_coordinate(rs);
    const double s = std::sinh(2.0 * t);
    const double k = heat_kernel(basis, t, x, y);
    const double z = x[j] * y[j] / s;
    return k * (-coth(2.0 * t) * y[j] + (x[j] / s) * dunkl_kernel_1d_log_derivative(rs.axis_multiplicity(j), z));
}

double heat_kernel_classical(double t, const Point& x, const Point& y) {
    const double d = static_cast<double>(x.size());
    return std::pow(2.0 * M_PI * std::sinh(2.0 * t), -0.5 * d) *
           std::exp(-0.25 * (std::tanh(t) * (x + y).squaredNorm() + coth(t) * (x - y).squaredNorm()));
}

double heat_kernel_classical_alt(double t, const Point& x, const Point& y) {
    const double d = static_cast<double>(x.size());
    return std::pow(2.0 * M_PI * std::sinh(2.0 * t), -0.5 * d) *
           std::exp(-0.5 * coth(2.0 * t) * (x - y).squaredNorm() - std::tanh(t) * x.dot(y));
}

double heat_kernel_classical_dy(double t, const Point& x, const Point& y, int j) {
    return -0.5 * (std::tanh(t) * (x[j] + y[j]) + coth(t) * (y[j] - x[j])) * heat_kernel_classical(t, x, y);
}

double gaussian_translate(const HermiteBasis& basis, double c, const Point& x, const Point& y,
                          const KernelConfig& cfg) {
    if (!(c > 0)) throw std::invalid_argument("gaussian_translate requires c > 0");
    const double expo = -c * (x.squaredNorm() + y.squaredNorm());
    Point y2 = 2.0 * c * y;
    if (basis.gamma() == 0.0) return std::exp(expo + y2.dot(x));
    if (basis.root_system().is_coordinate_system())
        return std::exp(expo + log_dunkl_kernel_z2d(basis.root_system(), y2, x));
    return std::exp(expo) * dunkl_kernel_mehler(basis, y2, x, cfg).value;
}

double riesz_integrand(const HermiteBasis& basis, int j, double t, const Point& x, const Point& y,
                       const KernelConfig& cfg) {
    const double k = heat_kernel(basis, t, x, y, cfg);
    if (k == 0.0) return 0.0;
    // 1 - coth(2t) = -2 / (e^{4t} - 1)
    const double factor = -2.0 / std::expm1(4.0 * t) * x[j] + y[j] / std::sinh(2.0 * t);
    return k * factor / std::sqrt(M_PI * t);
}

RieszKernelResult riesz_kernel(const HermiteBasis& basis, int j, const Point& x, const Point& y,
                               const KernelConfig& cfg) {
    if (j < 0 || j >= basis.dim()) throw DimensionMismatch("Riesz kernel axis out of range");
    const double dmin = min_orbit_distance(basis.root_system().group(), x, y);
    if (dmin < cfg.separation_floor)
        throw OrbitTooClose("y lies within " + std::to_string(dmin) + " of the orbit of x");

    const double tol = cfg.quad_rel_tol;
    const double t_lo = std::min(0.5, dmin * dmin / 2000.0);
    const double rate = 2.0 * basis.gamma() + basis.dim();
    const double t_hi = 1.0 + (std::log(1.0 / tol) + 10.0) / rate;

    auto g = [&](double t) { return riesz_integrand(basis, j, t, x, y, cfg); };
    // small times in s = log t, where the integrand is a smooth bump
    auto small = integrate_gk15([&](double s) {
        double t = std::exp(s);
        return g(t) * t;
    }, std::log(t_lo), 0.0, cfg.quad_abs_tol, tol, cfg.quad_max_intervals);
    auto large = integrate_gk15(g, 1.0, t_hi, cfg.quad_abs_tol, tol, cfg.quad_max_intervals);
    const double tail = std::abs(g(t_hi)) / rate;

    RieszKernelResult r;
    r.value = small.value + large.value;
    r.error = small.error + large.error + tail;
    r.evaluations = small.evaluations + large.evaluations + 1;
    r.intervals = small.intervals + large.intervals;
    const double allowed = std::max(cfg.quad_abs_tol, 10.0 * tol * (std::abs(small.value) + std::abs(large.value)));
    if ((!small.converged || !large.converged) && r.error > allowed)
        throw QuadratureNonConvergence("Riesz kernel time integral did not converge (error " +
                                       std::to_string(r.error) + ")");
    return r;
}

}  // namespace dunkl
