#include "dunkl/errors.hpp"
#include "dunkl/polynomial.hpp"

#include "doctest.h"

#include <random>

using namespace dunkl;
using Q = QuadraticNumber;
using P = Polynomial<Q>;

namespace {

P random_poly(int dim, int deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-4, 4);
    P p(dim);
    for (const auto& a : indices_up_to(dim, deg)) p.add_term(a, Q(c(rng)));
    return p;
}

}  // namespace

TEST_CASE("graded index enumeration") {
    CHECK(indices_of_degree(2, 3).size() == 4);
    CHECK(indices_up_to(3, 2).size() == 10);
    const auto idx = indices_of_degree(2, 2);
    CHECK(idx[0] == MultiIndex({2, 0}));
    CHECK(idx[2] == MultiIndex({0, 2}));
    CHECK(MultiIndex::parse(MultiIndex({3, 1}).to_string()) == MultiIndex({3, 1}));
}

TEST_CASE("rank-1 Dunkl operator on monomials") {
    // T x^n = (n + 2 kappa [n odd]) x^{n-1}
    const auto alg = exact_algebra(RootSystem::catalogue("Z2", {0.75}));
    for (int n = 1; n <= 9; ++n) {
        const P xn = P::monomial(MultiIndex({n}));
        const Q mu = Q(n) + ((n % 2) ? Q(Rational(3, 2)) : Q(0));
        CHECK(alg.dunkl(0, xn) == P::monomial(MultiIndex({n - 1}), mu));
    }
}

TEST_CASE("divided difference is exact for every catalogue root") {
    std::mt19937_64 rng(3);
    for (const char* name : {"A2", "B2", "I2(6)"}) {
        const auto rs = RootSystem::catalogue(name, {1.0});
        const auto alg = exact_algebra(rs);
        const P p = random_poly(2, 5, rng);
        for (std::size_t r = 0; r < alg.root_count(); ++r) {
            const P q = alg.divided_difference(p, r);
            // <x,beta> q = p - p o sigma
            const auto& b = alg.direction(r);
            const P lin = P::variable(2, 0) * b[0] + P::variable(2, 1) * b[1];
            const Q bb = b[0] * b[0] + b[1] * b[1];
            std::vector<std::vector<Q>> S = {{Q(1) - Q(2) * b[0] * b[0] / bb, Q(-2) * b[0] * b[1] / bb},
                                             {Q(-2) * b[1] * b[0] / bb, Q(1) - Q(2) * b[1] * b[1] / bb}};
            CHECK(lin * q == p - p.compose_linear(S));
        }
    }
}

TEST_CASE("Dunkl operators commute") {
    std::mt19937_64 rng(11);
    for (const char* name : {"A2", "B2", "I2(6)", "Z2^2"}) {
        const auto alg = exact_algebra(RootSystem::catalogue(name, {1.0}));
        const P p = random_poly(2, 5, rng);
        CHECK(alg.dunkl(0, alg.dunkl(1, p)) == alg.dunkl(1, alg.dunkl(0, p)));
    }
}

TEST_CASE("Dunkl operators are G-equivariant") {
    // T_xi (p o g^{-1}) = ((T_{g^{-1} xi} p)) o g^{-1}; checked for the reflections of A2
    std::mt19937_64 rng(5);
    const auto rs = RootSystem::catalogue("A2", {0.5});
    const auto alg = exact_algebra(rs);
    const P p = random_poly(2, 4, rng);
    const auto& b = alg.direction(0);
    const Q bb = b[0] * b[0] + b[1] * b[1];
    std::vector<std::vector<Q>> S = {{Q(1) - Q(2) * b[0] * b[0] / bb, Q(-2) * b[0] * b[1] / bb},
                                     {Q(-2) * b[1] * b[0] / bb, Q(1) - Q(2) * b[1] * b[1] / bb}};
    const P ps = p.compose_linear(S);
    for (int j = 0; j < 2; ++j) {
        P lhs = alg.dunkl(j, ps);
        P rhs(2);
        for (int k = 0; k < 2; ++k) rhs += alg.dunkl(k, p).compose_linear(S) * S[k][j];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pairing is symmetric and vanishes across degrees") {
    std::mt19937_64 rng(2);
    const auto alg = exact_algebra(RootSystem::catalogue("B2", {0.5, 1.0}));
    const P p = random_poly(2, 4, rng), q = random_poly(2, 4, rng);
    CHECK(alg.pairing(p, q) == alg.pairing(q, p));
    const P a = P::monomial(MultiIndex({2, 1})), c = P::monomial(MultiIndex({1, 1}));
    CHECK(alg.pairing(a, c).is_zero());
}

TEST_CASE("exp_laplacian matches the truncated exponential series") {
    std::mt19937_64 rng(9);
    const auto alg = exact_algebra(RootSystem::catalogue("A2", {1.0}));
    const P p = random_poly(2, 6, rng);
    const Q s(Rational(-1, 4));
    P series = p, term = p;
    for (int k = 1; k <= 4; ++k) {
        term = alg.laplacian(term) * (s / Q(k));
        series += term;
    }
    CHECK(alg.exp_laplacian(p, s) == series);
}

TEST_CASE("float field agrees with the exact field") {
    const auto rs = RootSystem::catalogue("I2(5)", {1.0});
    const auto falg = float_algebra(rs);
    Polynomial<Real128> p(2);
    p.add_term(MultiIndex({3, 2}), Real128(1));
    p.add_term(MultiIndex({0, 4}), Real128(-2));
    // T_1 T_2 = T_2 T_1 holds to float128 accuracy
    const auto d = falg.dunkl(0, falg.dunkl(1, p)) - falg.dunkl(1, falg.dunkl(0, p));
    CHECK(d.max_abs_coefficient() < 1e-25);
}

TEST_CASE("dimension mismatch is reported") {
    CHECK_THROWS_AS(P::variable(2, 0) + P::variable(3, 0), DimensionMismatch);
}
