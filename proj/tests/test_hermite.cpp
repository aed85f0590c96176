#include "dunkl/errors.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/spectral.hpp"

#include "doctest.h"

#include <cmath>

using namespace dunkl;

namespace {

Point pt1(double v) { return (Point(1) << v).finished(); }

// physicists' Hermite polynomials by their recurrence
std::vector<double> classical_hermite(int N, double x) {
    std::vector<double> h(N + 1);
    h[0] = 1;
    if (N >= 1) h[1] = 2 * x;
    for (int n = 1; n < N; ++n) h[n + 1] = 2 * x * h[n] - 2 * n * h[n - 1];
    return h;
}

}  // namespace

TEST_CASE("c_kappa closed form for Z2") {
    // int |sqrt2 x|^{2k} e^{-x^2/2} dx = 2^{2k+1/2} Gamma(k + 1/2)
    for (double k : {0.0, 0.5, 1.0, 2.0}) {
        const auto rs = RootSystem::catalogue("Z2", {k});
        CHECK(c_kappa(rs) == doctest::Approx(std::pow(2.0, 2 * k + 0.5) * std::tgamma(k + 0.5)).epsilon(1e-12));
    }
    CHECK(c_kappa(RootSystem::catalogue("Z2", {1.0})) == doctest::Approx(2 * std::sqrt(2 * M_PI)).epsilon(1e-12));
    // product structure
    const auto z22 = RootSystem::catalogue("Z2^2", {1.0, 0.5});
    CHECK(c_kappa(z22) == doctest::Approx(c_kappa(RootSystem::catalogue("Z2", {1.0})) *
                                          c_kappa(RootSystem::catalogue("Z2", {0.5})))
                              .epsilon(1e-12));
}

TEST_CASE("c_kappa for A2 against direct polar integration") {
    const auto rs = RootSystem::catalogue("A2", {1.0});
    // radial part int r^{2g+1} e^{-r^2/2} dr = 2^g Gamma(g+1), angular part by midpoint sum
    const double g = gamma(rs);
    const int M = 20000;
    double ang = 0;
    for (int i = 0; i < M; ++i) {
        const double th = 2 * M_PI * (i + 0.5) / M;
        ang += weight(rs, (Point(2) << std::cos(th), std::sin(th)).finished());
    }
    ang *= 2 * M_PI / M;
    CHECK(c_kappa(rs) == doctest::Approx(ang * std::pow(2.0, g) * std::tgamma(g + 1)).epsilon(1e-9));
}

TEST_CASE("kappa = 0 gives classical Hermite polynomials") {
    const auto basis = build_basis(RootSystem::catalogue("Z2", {0.0}), 15);
    for (double x : {-2.1, -0.3, 0.0, 0.7, 1.9}) {
        const auto H = basis.eval_H(pt1(x));
        const auto ref = classical_hermite(15, x);
        for (int n = 0; n <= 15; ++n)
            CHECK(H[n] == doctest::Approx(ref[n] / std::sqrt(std::tgamma(n + 1.0))).epsilon(1e-11));
    }
}

TEST_CASE("rank-1 recurrence agrees with the polynomial basis") {
    for (double k : {0.5, 1.0, 2.0}) {
        const auto basis = build_basis(RootSystem::catalogue("Z2", {k}), 20);
        for (double x : {-1.5, -0.2, 0.4, 2.5}) {
            const auto h = basis.eval_h(pt1(x));
            const auto r = rank1_hermite_functions(k, 20, x);
            for (int n = 0; n <= 20; ++n) CHECK(h[n] == doctest::Approx(r[n]).epsilon(1e-10).scale(1e-12));
        }
    }
}

TEST_CASE("rank-1 recurrence is stable for large degree and argument") {
    const auto h = rank1_hermite_functions(0.5, 2000, 40.0);
    for (double v : h) CHECK(std::isfinite(v));
    // h_n are bounded by a constant for kappa = 1/2 (|x|^{gamma} h_n stays O(1))
    double mx = 0;
    for (double v : h) mx = std::max(mx, std::abs(v));
    CHECK(mx < 1.0);
}

TEST_CASE("exact eigen identity and orthogonality for A2 and B2") {
    for (const char* name : {"A2", "B2"}) {
        const auto basis = build_basis(RootSystem::catalogue(name, {1.0}), 5);
        REQUIRE(basis.exact() != nullptr);
        const auto& bp = *basis.exact();
        const QuadraticNumber lam0 = bp.algebra.gamma() * QuadraticNumber(2) + QuadraticNumber(2);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const QuadraticNumber lam = lam0 + QuadraticNumber(2 * basis.index(i).order());
            CHECK(bp.algebra.conjugated_oscillator(bp.htilde[i]) == bp.htilde[i] * lam);
            for (std::size_t k = 0; k < i; ++k) CHECK(bp.algebra.pairing(bp.psi[i], bp.psi[k]).is_zero());
        }
    }
}

TEST_CASE("h_n are orthonormal in L2(w) for I2(5) (float field)") {
    const auto basis = build_basis(RootSystem::catalogue("I2(5)", {0.5}), 4);
    CHECK(basis.mode() == ArithmeticMode::Float128);
    const auto rule = quadrature_rule(basis.root_system(), 16);
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(basis.size(), basis.size());
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const auto h = basis.eval_h(rule.nodes[q]);
        G += rule.weights[q] * std::exp(rule.gaussian_exponent * rule.nodes[q].squaredNorm()) * h * h.transpose();
    }
    CHECK((G - Eigen::MatrixXd::Identity(basis.size(), basis.size())).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("json round trip preserves exact data") {
    const auto basis = build_basis(RootSystem::catalogue("A2", {0.5}), 4);
    const auto back = HermiteBasis::from_json(basis.to_json());
    REQUIRE(back.exact() != nullptr);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(back.exact()->psi[i] == basis.exact()->psi[i]);
        CHECK(back.exact()->norms[i] == basis.exact()->norms[i]);
    }
    CHECK(back.to_json().dump() == basis.to_json().dump());
}

TEST_CASE("index beyond the truncation throws") {
    const auto basis = build_basis(RootSystem::catalogue("Z2", {0.5}), 3);
    CHECK_THROWS_AS(hermite_function_eval(basis, MultiIndex({4}), pt1(0.1)), IndexOutOfTruncation);
}

TEST_CASE("FNV-1a reference values") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
