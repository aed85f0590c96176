#include "dunkl/errors.hpp"
#include "dunkl/kernels.hpp"

#include "doctest.h"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

using namespace dunkl;

namespace {

Point p1(double v) { return (Point(1) << v).finished(); }
Point p2(double a, double b) { return (Point(2) << a, b).finished(); }

// Gamma(k+1/2) (z/2)^{1/2-k} [I_{k-1/2}(z) + sgn I_{k+1/2}(z)] via boost, |z| moderate
double bessel_oracle(double k, double z) {
    const double a = std::abs(z);
    const double s = z < 0 ? -1.0 : 1.0;
    return boost::math::tgamma(k + 0.5) * std::pow(a / 2, 0.5 - k) *
           (boost::math::cyl_bessel_i(k - 0.5, a) + s * boost::math::cyl_bessel_i(k + 0.5, a));
}

}  // namespace

TEST_CASE("rank-1 kernel: series, GSL Bessel form and boost agree") {
    for (double k : {0.25, 0.5, 1.0, 2.0, 3.5})
        for (double z : {-20.0, -5.0, -0.7, 0.3, 1.0, 6.0, 25.0}) {
            const double ref = bessel_oracle(k, z);
            CHECK(dunkl_kernel_1d(k, z, 1.0, {.series_truncation = 200}) == doctest::Approx(ref).epsilon(1e-11));
            CHECK(dunkl_kernel_1d_bessel(k, z, 1.0) == doctest::Approx(ref).epsilon(1e-11));
            CHECK(log_dunkl_kernel_1d(k, z, 1.0) == doctest::Approx(std::log(ref)).epsilon(1e-11));
        }
}

TEST_CASE("rank-1 kernel at large arguments stays finite and matches boost in log form") {
    for (double k : {0.0, 0.5, 1.0, 2.0})
        for (double z : {120.0, 600.0, 700.0, -300.0, -650.0}) {
            const double a = std::abs(z);
            const double s = z < 0 ? -1.0 : 1.0;
            // scaled by e^{-a} so nothing overflows
            const double br = boost::math::cyl_bessel_i(k - 0.5, a) + s * boost::math::cyl_bessel_i(k + 0.5, a);
            const double lg = std::log(boost::math::tgamma(k + 0.5)) + (0.5 - k) * std::log(a / 2) + std::log(br);
            const double v = log_dunkl_kernel_1d(k, z, 1.0);
            CHECK(std::isfinite(v));
            if (std::isfinite(lg)) CHECK(v == doctest::Approx(lg).epsilon(1e-10));
        }
}

TEST_CASE("kappa = 0 kernel is the exponential") {
    for (double z : {-3.0, 0.0, 2.5}) CHECK(dunkl_kernel_1d(0.0, z, 1.0) == doctest::Approx(std::exp(z)));
    const auto basis = build_basis(RootSystem::catalogue("A2", {0.0}), 2);
    CHECK(dunkl_kernel(basis, p2(0.3, -1.2), p2(0.7, 0.4)) == doctest::Approx(std::exp(0.21 - 0.48)));
}

TEST_CASE("log derivative against a central difference") {
    for (double k : {0.5, 1.5})
        for (double z : {-4.0, 0.5, 8.0}) {
            const double h = 1e-5;
            const double fd = (log_dunkl_kernel_1d(k, z + h, 1.0) - log_dunkl_kernel_1d(k, z - h, 1.0)) / (2 * h);
            CHECK(dunkl_kernel_1d_log_derivative(k, z) == doctest::Approx(fd).epsilon(1e-7));
        }
}

TEST_CASE("Mehler inversion reproduces the Z2^2 product kernel") {
    const auto rs = RootSystem::catalogue("Z2^2", {0.5, 1.0});
    const auto basis = build_basis(rs, 12);
    for (auto [x, y] : {std::pair{p2(0.3, -0.4), p2(0.5, 0.2)}, std::pair{p2(-0.8, 0.1), p2(0.2, -0.6)}})
        CHECK(dunkl_kernel_mehler(basis, x, y).value == doctest::Approx(dunkl_kernel_z2d(rs, x, y)).epsilon(1e-8));
}

TEST_CASE("Mehler kernel for A2 is an eigenfunction of the Dunkl operators") {
    // T_j E(., y) = y_j E(., y), with d_j by central differences
    const auto rs = RootSystem::catalogue("A2", {1.0});
    const auto basis = build_basis(rs, 12);
    KernelConfig cfg;
    cfg.mehler_r = 0.2;
    cfg.mehler_tol = 1.0;
    auto E = [&](const Point& x, const Point& y) { return dunkl_kernel_mehler(basis, x, y, cfg).value; };
    const Point x = p2(0.31, 0.17), y = p2(0.4, -0.25);
    for (int j = 0; j < 2; ++j) {
        const double h = 1e-4;
        Point e = Point::Zero(2);
        e[j] = h;
        double Tj = (E(x + e, y) - E(x - e, y)) / (2 * h);
        for (std::size_t r = 0; r < rs.size(); ++r) {
            const Root& a = rs.root(r);
            Tj += rs.multiplicity(r) * a.components[j] * (E(x, y) - E(reflect(a, x), y)) / x.dot(a.components);
        }
        CHECK(Tj == doctest::Approx(y[j] * E(x, y)).epsilon(1e-6));
    }
    // symmetry, invariance and normalisation, to the truncation level of the fixed r
    CHECK(E(x, y) == doctest::Approx(E(y, x)).epsilon(1e-8));
    const Matrix& g = rs.group()[3];
    CHECK(E(g * x, g * y) == doctest::Approx(E(x, y)).epsilon(1e-8));
    CHECK(E(x, Point::Zero(2)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("heat kernel: closed form, spectral series and classical reduction") {
    const auto b0 = build_basis(RootSystem::catalogue("Z2", {0.0}), 60, {.polynomials = false});
    for (double t : {0.2, 1.0})
        for (auto [x, y] : {std::pair{0.3, -0.5}, std::pair{1.2, 0.4}}) {
            const double k = heat_kernel(b0, t, p1(x), p1(y));
            CHECK(k == doctest::Approx(heat_kernel_classical(t, p1(x), p1(y))).epsilon(1e-12));
            CHECK(k == doctest::Approx(heat_kernel_classical_alt(t, p1(x), p1(y))).epsilon(1e-12));
        }
    const auto b = build_basis(RootSystem::catalogue("Z2", {0.5}), 120, {.polynomials = false});
    for (double t : {0.3, 1.0})
        CHECK(heat_kernel(b, t, p1(0.7), p1(-0.2)) ==
              doctest::Approx(heat_kernel_spectral(b, t, p1(0.7), p1(-0.2))).epsilon(1e-10));
}

TEST_CASE("heat kernel y-derivative against a central difference") {
    const auto b = build_basis(RootSystem::catalogue("Z2^2", {0.5, 1.0}), 2);
    const Point x = p2(0.4, -0.9), y = p2(0.8, 0.3);
    for (int j = 0; j < 2; ++j) {
        Point e = Point::Zero(2);
        e[j] = 1e-5;
        const double fd = (heat_kernel(b, 0.4, x, y + e) - heat_kernel(b, 0.4, x, y - e)) / 2e-5;
        CHECK(heat_kernel_dy(b, 0.4, x, y, j) == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("Gaussian translate at kappa = 0 is a shifted Gaussian") {
    const auto b = build_basis(RootSystem::catalogue("Z2", {0.0}), 2);
    CHECK(gaussian_translate(b, 0.7, p1(0.5), p1(-1.1)) == doctest::Approx(std::exp(-0.7 * 1.6 * 1.6)));
}

TEST_CASE("Riesz kernel matches tanh-sinh / exp-sinh integration of the same integrand") {
    for (double k : {0.0, 0.5, 1.0}) {
        const auto b = build_basis(RootSystem::catalogue("Z2", {k}), 2);
        for (auto [x, y] : {std::pair{1.0, 2.5}, std::pair{-0.4, 1.3}, std::pair{2.0, 0.2}}) {
            auto f = [&](double t) { return riesz_integrand(b, 0, t, p1(x), p1(y)); };
            boost::math::quadrature::tanh_sinh<double> ts;
            boost::math::quadrature::exp_sinh<double> es;
            const double ref = ts.integrate(f, 0.0, 1.0) + es.integrate([&](double t) { return f(1.0 + t); });
            const auto r = riesz_kernel(b, 0, p1(x), p1(y));
            CHECK(r.value == doctest::Approx(ref).epsilon(1e-8));
            CHECK(r.error < 1e-8 * std::abs(r.value) + 1e-14);
        }
    }
}

TEST_CASE("Riesz kernel refuses points on the orbit and non-product groups for z2d") {
    const auto b = build_basis(RootSystem::catalogue("Z2", {0.5}), 2);
    CHECK_THROWS_AS(riesz_kernel(b, 0, p1(1.0), p1(-1.0)), OrbitTooClose);
    CHECK_THROWS_AS(dunkl_kernel_z2d(RootSystem::catalogue("A2", {1.0}), p2(0, 1), p2(1, 0)), WrongGroup);
    CHECK_THROWS_AS(dunkl_kernel_1d(1.0, 200.0, 1.0, {.series_truncation = 10}), SeriesNonConvergence);
}
