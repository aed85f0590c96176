#include "dunkl/spectral.hpp"

#include "doctest.h"

#include <Eigen/SVD>

#include <cmath>
#include <random>

using namespace dunkl;

namespace {

Point p1(double v) { return (Point(1) << v).finished(); }

double gaussian_mass(const QuadratureRule& rule) {
    // int e^{-|x|^2} w dx
    return rule.integrate([](const Point& x) { return std::exp(-x.squaredNorm()); });
}

}  // namespace

TEST_CASE("weighted quadrature integrates the Gaussian mass") {
    // int e^{-|x|^2} w = 2^{-gamma - d/2} c
    for (const char* name : {"Z2^2", "A2", "B2", "I2(5)"}) {
        const auto rs = RootSystem::catalogue(name, {1.0});
        const auto rule = quadrature_rule(rs, 12);
        CHECK(gaussian_mass(rule) == doctest::Approx(std::pow(2.0, -gamma(rs) - 1.0) * c_kappa(rs)).epsilon(1e-10));
    }
}

TEST_CASE("analysis then synthesis reproduces a band-limited function") {
    for (const char* name : {"Z2", "A2"}) {
        const auto rs = RootSystem::catalogue(name, {0.5});
        const auto basis = build_basis(rs, 5);
        const auto rule = quadrature_rule(rs, 12);
        Eigen::VectorXd coef = Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(basis.size()), 1.0, -1.0);
        auto f = [&](const Point& x) { return basis.eval_h(x).dot(coef); };
        const auto v = analyze(basis, rule, f);
        CHECK((v - coef).cwiseAbs().maxCoeff() < 1e-10);
        Point x = Point::Constant(rs.dim(), 0.37);
        CHECK(synthesize(basis, v, x) == doctest::Approx(f(x)).epsilon(1e-10));
    }
}

TEST_CASE("heat and inverse square root act diagonally") {
    const auto basis = build_basis(RootSystem::catalogue("Z2", {1.0}), 4);
    const Eigen::VectorXd v = Eigen::VectorXd::Ones(5);
    const auto ht = heat_apply(basis, 0.5, v);
    const auto is = inv_sqrt_apply(basis, v);
    for (int n = 0; n <= 4; ++n) {
        const double lam = 2.0 * n + 3.0;
        CHECK(ht[n] == doctest::Approx(std::exp(-0.5 * lam)));
        CHECK(is[n] == doctest::Approx(1.0 / std::sqrt(lam)));
    }
}

TEST_CASE("ladder matrices match the polynomial route on Z2^2") {
    const auto basis = build_basis(RootSystem::catalogue("Z2^2", {0.5, 1.5}), 6);
    for (int j = 0; j < 2; ++j)
        for (auto v : {DeltaVariant::Lower, DeltaVariant::Raise}) {
            const auto a = delta_matrix_ladder(basis, j, v);
            const auto b = delta_matrix_polynomial(basis, j, v);
            CHECK((a.M - b.M).cwiseAbs().maxCoeff() < 1e-12);
            CHECK(a.safe_degree == b.safe_degree);
            CHECK(a.leakage == b.leakage);
        }
}

TEST_CASE("kappa = 0 ladder entries are sqrt(2n)") {
    const auto basis = build_basis(RootSystem::catalogue("Z2", {0.0}), 8);
    const auto m = delta_matrix(basis, 0, DeltaVariant::Lower);
    for (int n = 1; n <= 8; ++n) CHECK(m.M(n - 1, n) == doctest::Approx(std::sqrt(2.0 * n)));
}

TEST_CASE("raise is the transpose of lower on the safe block, also for A2") {
    for (const char* name : {"A2", "B2"}) {
        const auto basis = build_basis(RootSystem::catalogue(name, {1.0}), 5);
        for (int j = 0; j < 2; ++j) {
            const auto lo = delta_matrix(basis, j, DeltaVariant::Lower);
            const auto up = delta_matrix(basis, j, DeltaVariant::Raise);
            CHECK(up.leakage);
            const auto k = static_cast<Eigen::Index>(basis.shell_begin(basis.degree()));
            CHECK((up.M.leftCols(k) - lo.M.transpose().leftCols(k)).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("R_j h_1 = h_0 for Z2 with kappa = 1/2") {
    const auto basis = build_basis(RootSystem::catalogue("Z2", {0.5}), 4);
    const auto R = riesz_matrix(basis, 0);
    // sqrt(2 mu_1) / sqrt(lambda_1) = sqrt(4) / sqrt(4)
    CHECK(R.M(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(R.M.col(1).cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("power iteration against SVD") {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> n01;
    for (int trial = 0; trial < 5; ++trial) {
        Eigen::MatrixXd M(12, 9);
        for (Eigen::Index i = 0; i < M.size(); ++i) M.data()[i] = n01(rng);
        const double svd = Eigen::JacobiSVD<Eigen::MatrixXd>(M).singularValues()[0];
        CHECK(operator_norm(M) == doctest::Approx(svd).epsilon(1e-10));
    }
    const auto basis = build_basis(RootSystem::catalogue("A2", {1.0}), 5);
    const auto R = riesz_matrix(basis, 0);
    CHECK(operator_norm(R.M) == doctest::Approx(Eigen::JacobiSVD<Eigen::MatrixXd>(R.M).singularValues()[0]).epsilon(1e-9));
}

TEST_CASE("restriction keeps the leading degree blocks") {
    const auto basis = build_basis(RootSystem::catalogue("Z2^2", {1.0}), 4);
    const Eigen::MatrixXd M = Eigen::MatrixXd::Random(15, 15);
    const auto r = restrict_to_degree(basis, M, 2);
    CHECK(r.rows() == 6);
    CHECK(r.cols() == 6);
    CHECK(r(5, 5) == M(5, 5));
}

TEST_CASE("csv export") {
    const auto basis = build_basis(RootSystem::catalogue("Z2", {0.0}), 2);
    const auto csv = matrix_to_csv(basis, delta_matrix(basis, 0, DeltaVariant::Lower));
    CHECK(csv.rfind("row,col,value\r\n", 0) == 0);
    // two nonzero entries plus the header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    const auto j = spectral_vector_to_json(basis, Eigen::VectorXd::Ones(3));
    CHECK(j["coefficients"].size() == 3);
}
