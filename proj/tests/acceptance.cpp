// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance                 run all eleven
//   acceptance --criterion N   run one (exit 1 on FAIL)
// Every tolerance and configuration used for a verdict is written out here.

#include "dunkl/spectral.hpp"
#include "dunkl/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace dunkl;

namespace {

// pinned tolerances
constexpr double kMehlerTol = 1e-6;
constexpr double kHeatTol = 1e-6;
constexpr double kReductionTol = 1e-10;
constexpr double kL2OrthoTol = 1e-6;
constexpr double kNormSlack = 1e-8;
constexpr double kAdjointTol = 1e-10;
constexpr double kLadderTol = 1e-10;
constexpr double kMaxGrowth = 0.05;
constexpr double kMaxSlope = 0.05;
constexpr double kMaxRelativeSE = 0.05;
constexpr double kIntegralRepTol = 1e-3;
constexpr double kL2Slack = 0.05;

struct Config {
    std::string name;
    std::vector<double> kappa;
};

// the configurations of the eigen criterion, reused by the L2 bound
const std::vector<Config> kGroups = {
    {"Z2", {0.0}}, {"Z2", {0.5}}, {"Z2", {1.0}}, {"Z2", {2.0}}, {"Z2^2", {1.0, 1.0}}, {"A2", {1.0}}, {"I2(4)", {1.0, 1.0}},
};

std::string label(const Config& c) {
    std::ostringstream s;
    s << c.name << " k=(";
    for (std::size_t i = 0; i < c.kappa.size(); ++i) s << (i ? "," : "") << c.kappa[i];
    s << ")";
    return s.str();
}

HermiteBasis basis_for(const Config& c, int N) { return build_basis(RootSystem::catalogue(c.name, c.kappa), N); }

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [fail]");
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Verdict eigen_identity() {
    Verdict v;
    for (const auto& c : kGroups) {
        const auto r = check_eigen(basis_for(c, 6));
        const bool exact = r.residuals["arithmetic"] == "exact";
        v.require(r.passed() && exact, label(c) + " zero residuals " +
                                           std::to_string(r.residuals["exact_zero"].get<long>()) + "/" +
                                           std::to_string(r.samples));
    }
    return v;
}

Verdict orthonormality() {
    Verdict v;
    OrthonormalityOptions o;
    o.l2_tol = kL2OrthoTol;
    for (const auto& c : kGroups) {
        const auto rs = RootSystem::catalogue(c.name, c.kappa);
        const int N = rs.is_coordinate_system() ? 8 : 6;
        const auto r = check_orthonormality(build_basis(rs, N), o);
        const auto& p = r.residuals["pairing"];
        const bool exact_ok = p["nonzero"].get<long>() == 0;
        std::string what = label(c) + " N=" + std::to_string(N) + " pairing exact";
        bool ok = exact_ok;
        if (rs.is_coordinate_system()) {
            const double l2 = r.residuals["l2_max_deviation"].get<double>();
            ok = ok && l2 < kL2OrthoTol;
            what += ", L2 dev " + num(l2);
        }
        v.require(ok, what);
    }
    return v;
}

Verdict mehler() {
    Verdict v;
    MehlerOptions o;
    o.r_values = {0.1, 0.2, 0.3, 0.4, 0.5};
    o.grid = {-1.0, -0.5, 0.0, 0.5, 1.0};
    o.tol = kMehlerTol;
    for (double k : {0.0, 0.5, 1.0}) {
        const auto r = check_mehler(basis_for({"Z2", {k}}, 12), o);
        v.require(r.passed(), "Z2 k=" + num(k) + " N=12 max rel err " +
                                  num(r.residuals["max_relative_error"].get<double>()));
    }
    return v;
}

Verdict heat() {
    Verdict v;
    HeatOptions o;
    o.times = {0.1, 0.3, 1.0, 2.0};
    o.tol = kHeatTol;
    o.reduction_tol = kReductionTol;
    for (const Config& c : {Config{"Z2", {0.5}}, Config{"Z2", {1.0}}, Config{"Z2^2", {0.5, 1.0}}}) {
        const auto r = check_heat(basis_for(c, 4), {}, o);
        const auto& res = r.residuals;
        v.require(r.passed(), label(c) + " closed vs spectral " + num(res["closed_vs_spectral"].get<double>()) +
                                  ", k=0 reduction " + num(res["kappa0_vs_classical"].get<double>()) +
                                  ", m prefactor off by " +
                                  num(r.constants["m_prefactor_factor"].get<double>()) +
                                  (res["m_prefactor_fails"].get<bool>() ? " (detected)" : " (NOT detected)"));
    }
    return v;
}

Verdict riesz_l2() {
    Verdict v;
    RieszL2Options o;
    o.norm_slack = kNormSlack;
    o.adjoint_tol = kAdjointTol;
    for (const auto& c : kGroups) {
        const auto r = check_riesz_l2(basis_for(c, 6), o);
        double worst = 0;
        for (const auto& n : r.residuals["norms"]) worst = std::max(worst, n["riesz"].get<double>());
        v.require(r.passed(), label(c) + " max |R_j| " + num(worst) + ", adjoint dev " +
                                  num(r.residuals["adjoint_max_deviation"].get<double>()));
    }
    return v;
}

Verdict ladder() {
    Verdict v;
    {
        const auto b = build_basis(RootSystem::catalogue("Z2", {0.0}), 20);
        const auto m = delta_matrix(b, 0, DeltaVariant::Lower);
        double dev = 0;
        for (int n = 1; n <= 20; ++n) dev = std::max(dev, std::abs(m.M(n - 1, n) - std::sqrt(2.0 * n)));
        // no other nonzero entries
        double off = m.M.cwiseAbs().sum();
        for (int n = 1; n <= 20; ++n) off -= std::abs(m.M(n - 1, n));
        v.require(dev < kLadderTol && std::abs(off) < kLadderTol, "k=0 entries vs sqrt(2n) dev " + num(dev));
    }
    {
        const auto b = build_basis(RootSystem::catalogue("Z2", {0.5}), 6);
        const auto R = riesz_matrix(b, 0);
        Eigen::VectorXd e = Eigen::VectorXd::Zero(7), h1 = Eigen::VectorXd::Zero(7);
        h1[1] = 1;
        e[0] = 1;
        const double dev = (R.M * h1 - e).cwiseAbs().maxCoeff();
        v.require(dev < kLadderTol, "k=1/2 R h1 - h0 dev " + num(dev));
    }
    return v;
}

Verdict decay() {
    Verdict v;
    DecayOptions o;
    o.s_min = 0.1;
    o.s_max = 10.0;
    o.refine.max_growth = kMaxGrowth;
    for (double k : {0.0, 0.5}) {
        const auto r = check_kernel_decay(basis_for({"Z2", {k}}, 2), {}, o);
        v.require(r.passed(), "Z2 k=" + num(k) + " C_fit growth " + num(r.residuals["growth"].get<double>()));
    }
    return v;
}

Verdict hormander() {
    Verdict v;
    HormanderOptions o;
    o.deltas = {0.05, 0.1, 0.2, 0.5, 1.0};
    o.max_slope = kMaxSlope;
    o.max_relative_se = kMaxRelativeSE;
    const auto r = check_hormander(basis_for({"Z2", {0.5}}, 2), {}, o);
    for (const auto& run : r.residuals["runs"]) {
        const double slope = run["normalized_slope"].get<double>();
        const double se = run["max_relative_se"].get<double>();
        v.require(slope <= kMaxSlope && se < kMaxRelativeSE,
                  run["condition"].get<std::string>() + " y=" + num(run["y"].get<double>()) + " slope " + num(slope) +
                      ", rel SE " + num(se) + ", slope below delta=0.05 " +
                      num(run["diagnostic_normalized_slope"].get<double>()));
    }
    if (!r.passed()) v.pass = false;
    return v;
}

Verdict integral_rep() {
    Verdict v;
    IntegralRepOptions o;
    o.support_lo = 2.0;
    o.support_hi = 3.0;
    o.points = {0.2, 0.5, 1.0};
    o.tol = kIntegralRepTol;
    const auto r = check_integral_representation(basis_for({"Z2", {0.5}}, 2), {}, o);
    v.require(r.passed(), "Z2 k=1/2 max rel diff " + num(r.residuals["max_relative_error"].get<double>()) +
                              " at 3 points");
    return v;
}

Verdict lemma() {
    Verdict v;
    LemmaOptions o;
    o.a = 0.125;
    o.b = 0.125;
    o.c = 0.0625;
    o.refine.max_growth = kMaxGrowth;
    for (const Config& c : {Config{"Z2", {0.5}}, Config{"Z2", {1.0}}, Config{"Z2^2", {0.5, 1.0}}}) {
        const auto r = check_lemma_bounds(basis_for(c, 2), o);
        double worst = 0;
        for (const auto& [k, g] : r.residuals["growth"].items()) worst = std::max(worst, g.get<double>());
        v.require(r.passed(), label(c) + " 14/14 fits, max growth " + num(worst));
    }
    return v;
}

Verdict lp() {
    Verdict v;
    LpOptions o;
    o.exponents = {1.5, 2.0, 3.0, 4.0};
    o.functions = 50;
    o.l2_slack = kL2Slack;
    const auto r = check_lp_empirical(basis_for({"Z2", {0.5}}, 2), o);
    std::string what = "Z2 k=1/2 max ratio";
    for (const auto& [p, s] : r.constants.items()) what += " " + p + ":" + num(s["max"].get<double>());
    v.require(r.passed(), what + " (evidence only)");
    return v;
}

struct Criterion {
    const char* title;
    std::function<Verdict()> run;
};

const std::vector<Criterion> kCriteria = {
    {"exact eigenfunction identity", eigen_identity},
    {"pairing and L2 orthonormality", orthonormality},
    {"Mehler formula at N=12", mehler},
    {"heat kernel consistency", heat},
    {"Riesz L2 bound and adjointness", riesz_l2},
    {"ladder reduction", ladder},
    {"kernel decay", decay},
    {"Hormander conditions", hormander},
    {"integral representation", integral_rep},
    {"lemma inequalities", lemma},
    {"Lp evidence", lp},
};

bool run_one(int n) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = kCriteria[n - 1].run();
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %s: %s (%s) [%.1fs]\n", n, v.pass ? "PASS" : "FAIL", kCriteria[n - 1].title,
                v.detail.c_str(), s);
    std::fflush(stdout);
    return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(kCriteria.size())) {
        std::fprintf(stderr, "criterion must lie in 1..%zu\n", kCriteria.size());
        return 2;
    }
    bool all = true;
    if (only) return run_one(only) ? 0 : 1;
    for (std::size_t n = 1; n <= kCriteria.size(); ++n) all = run_one(static_cast<int>(n)) && all;
    return all ? 0 : 1;
}
