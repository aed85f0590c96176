#include "dunkl/errors.hpp"
#include "dunkl/verify.hpp"

#include "doctest.h"

#include <cmath>

using namespace dunkl;

namespace {

HermiteBasis z2(double k, int N) { return build_basis(RootSystem::catalogue("Z2", {k}), N); }

}  // namespace

TEST_CASE("eigen and orthonormality pass exactly on catalogue groups") {
    for (const char* name : {"Z2", "A2", "I2(4)"}) {
        const auto b = build_basis(RootSystem::catalogue(name, {1.0}), 5);
        const auto e = check_eigen(b);
        CHECK(e.passed());
        CHECK(e.residuals["arithmetic"] == "exact");
        CHECK(check_orthonormality(b).passed());
    }
}

TEST_CASE("eigen check on the float field") {
    const auto b = build_basis(RootSystem::catalogue("I2(5)", {0.5}), 5);
    const auto e = check_eigen(b);
    CHECK(e.passed());
    CHECK(e.residuals["arithmetic"] == "float128");
}

TEST_CASE("Hormander integral vanishes when y = y0") {
    const auto b = z2(0.5, 2);
    HormanderOptions o;
    o.mc_samples = 200;
    const auto v = hormander_integral(b, 0, 1.0, 1.0, false, o, {}, 1);
    CHECK(v.quadrature == 0.0);
    CHECK(v.mc == 0.0);
}

TEST_CASE("Hormander quadrature and Monte Carlo agree") {
    const auto b = z2(0.5, 2);
    HormanderOptions o;
    o.mc_samples = 4000;
    const auto v = hormander_integral(b, 0, 1.0, 1.2, false, o, {}, 3);
    CHECK(v.quadrature > 0);
    CHECK(std::abs(v.mc - v.quadrature) < 4 * v.mc_se);
    CHECK(v.tail_bound < 1e-8);
}

TEST_CASE("integral representation: zero data and overlapping support") {
    const auto rs = RootSystem::catalogue("Z2", {0.5});
    IntegralRepOptions o;
    o.spectral_degree = 200;
    const auto z = integral_representation(rs, 0, [](double) { return 0.0; }, o);
    for (double v : z.spectral) CHECK(v == 0.0);
    for (double v : z.kernel) CHECK(v == 0.0);
    o.points = {-2.5};
    CHECK_THROWS_AS(integral_representation(rs, 0, [](double) { return 1.0; }, o), SupportOverlap);
}

TEST_CASE("heat check detects the m prefactor") {
    const auto b = z2(1.0, 4);
    HeatOptions o;
    o.spectral_degree = 120;
    const auto r = check_heat(b, {}, o);
    CHECK(r.passed());
    CHECK(r.residuals["m_prefactor_fails"] == true);
    CHECK(r.constants["m_prefactor_factor"].get<double>() == doctest::Approx(std::pow(2.0, 1.5)));
}

TEST_CASE("Riesz L2 bounds on several groups") {
    for (const char* name : {"Z2", "Z2^2", "A2"}) {
        const auto r = check_riesz_l2(build_basis(RootSystem::catalogue(name, {1.0}), 5));
        CHECK(r.passed());
    }
}

TEST_CASE("Mehler check fails honestly at low degree and passes at high degree") {
    CHECK(check_mehler(z2(0.5, 8)).failed());
    CHECK(check_mehler(z2(0.5, 40)).passed());
}

TEST_CASE("unsupported groups are skipped, not failed") {
    const auto b = build_basis(RootSystem::catalogue("A2", {1.0}), 3);
    CHECK(check_lemma_bounds(b).status == "skipped");
    CHECK(check_kernel_decay(b).status == "skipped");
    CHECK(check_hormander(b).status == "skipped");
    CHECK(check_lp_empirical(b).status == "skipped");
}

TEST_CASE("empty check list and report serialisation") {
    const auto b = z2(0.5, 4);
    RunConfig cfg;
    const auto empty = run_checks({}, b, cfg);
    CHECK(empty.results.empty());
    CHECK(empty.all_passed());
    CHECK(empty.to_json(false)["checks"].empty());

    const auto rep = run_checks({"eigen", "riesz_l2"}, b, cfg);
    CHECK(rep.all_passed());
    const auto j = rep.to_json(false);
    CHECK_FALSE(j["checks"][0].contains("runtime_ms"));
    CHECK(rep.to_json(true)["checks"][0].contains("runtime_ms"));
    CHECK(rep.constants_csv().rfind("check,constant,value\r\n", 0) == 0);
}

TEST_CASE("Lp check is deterministic in its seed") {
    const auto b = z2(0.5, 20);
    LpOptions o;
    o.functions = 10;
    const auto a = check_lp_empirical(b, o), c = check_lp_empirical(b, o);
    CHECK(a.constants == c.constants);
    o.seed += 1;
    CHECK(check_lp_empirical(b, o).constants != a.constants);
}
