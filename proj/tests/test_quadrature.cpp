#include "dunkl/quadrature.hpp"

#include "doctest.h"

#include <gsl/gsl_integration.h>

#include <cmath>

using namespace dunkl;

TEST_CASE("generalized Hermite rule reduces to Gauss-Hermite at kappa = 0") {
    const int n = 20;
    gsl_integration_fixed_workspace* w =
        gsl_integration_fixed_alloc(gsl_integration_fixed_hermite, n, 0.0, 1.0, 0.0, 0.0);
    const double* xs = gsl_integration_fixed_nodes(w);
    const double* ws = gsl_integration_fixed_weights(w);
    const GaussRule r = generalized_hermite_rule(0.0, n);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        CHECK(r.nodes[i] == doctest::Approx(xs[i]).epsilon(1e-12));
        CHECK(r.weights[i] == doctest::Approx(ws[i]).epsilon(1e-10));
    }
    gsl_integration_fixed_free(w);
}

TEST_CASE("generalized Hermite rule integrates even moments exactly") {
    // int |u|^{2k} u^{2j} e^{-u^2} du = Gamma(k + j + 1/2)
    for (double kappa : {0.5, 1.0, 2.3}) {
        const GaussRule r = generalized_hermite_rule(kappa, 12);
        for (int j = 0; j < 12; ++j) {
            double s = 0;
            for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], 2 * j);
            CHECK(s == doctest::Approx(std::tgamma(kappa + j + 0.5)).epsilon(1e-11));
        }
    }
}

TEST_CASE("radial rule moments") {
    // int_0^inf r^{2g+1} r^{2j} e^{-r^2} dr = Gamma(g + j + 1) / 2
    const double g = 1.5;
    const GaussRule r = radial_rule(g, 10);
    for (int j = 0; j < 10; ++j) {
        double s = 0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], 2 * j);
        CHECK(s == doctest::Approx(std::tgamma(g + j + 1) / 2).epsilon(1e-11));
    }
}

TEST_CASE("Gauss-Legendre against GSL") {
    const int n = 15;
    gsl_integration_fixed_workspace* w =
        gsl_integration_fixed_alloc(gsl_integration_fixed_legendre, n, -1.0, 1.0, 0.0, 0.0);
    const GaussRule r = gauss_legendre(n);
    for (int i = 0; i < n; ++i) {
        CHECK(r.nodes[i] == doctest::Approx(gsl_integration_fixed_nodes(w)[i]).epsilon(1e-13));
        CHECK(r.weights[i] == doctest::Approx(gsl_integration_fixed_weights(w)[i]).epsilon(1e-12));
    }
    gsl_integration_fixed_free(w);
}

TEST_CASE("Chebyshev algorithm is exact on Hermite moments") {
    // moments of e^{-x^2}/sqrt(pi): 1, 0, 1/2, 0, 3/4, ... ; beta_k = k/2
    std::vector<Rational> m(12);
    Rational v(1);
    for (int k = 0; k < 12; ++k) {
        m[k] = (k % 2) ? Rational(0) : v;
        if (k % 2 == 0) v *= Rational(k + 1, 2);
    }
    const Recurrence rec = recurrence_from_moments(m, 6);
    for (int k = 0; k < 6; ++k) CHECK(rec.alpha[k] == doctest::Approx(0.0));
    for (int k = 1; k < 6; ++k) CHECK(rec.beta[k] == doctest::Approx(k / 2.0).epsilon(1e-14));
}

TEST_CASE("adaptive GK15 against GSL QAGS on an endpoint singularity") {
    auto f = [](double x) { return std::log(x) / std::sqrt(x); };
    const IntegrationResult r = integrate_gk15(f, 0.0, 1.0, 0.0, 1e-10);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(-4.0).epsilon(1e-9));
    gsl_function F;
    F.function = [](double x, void*) { return std::log(x) / std::sqrt(x); };
    F.params = nullptr;
    gsl_integration_workspace* ws = gsl_integration_workspace_alloc(1000);
    double val = 0, err = 0;
    gsl_integration_qags(&F, 0.0, 1.0, 0.0, 1e-12, 1000, ws, &val, &err);
    gsl_integration_workspace_free(ws);
    CHECK(r.value == doctest::Approx(val).epsilon(1e-9));
}

TEST_CASE("tanh-sinh nodes stay inside the interval") {
    const GaussRule r = tanh_sinh_rule(0.0, 1.0, 5);
    double s = 0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        CHECK(r.nodes[i] > 0.0);
        CHECK(r.nodes[i] < 1.0);
        s += r.weights[i] / std::sqrt(r.nodes[i]);
    }
    CHECK(s == doctest::Approx(2.0).epsilon(1e-8));
}
