#pragma once

// Named numerical checks. Each returns a CheckResult; failures are results,
// not exceptions. Everything random is drawn from a seeded mt19937_64.

#include "dunkl/config.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/spectral.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dunkl {

struct CheckResult {
    std::string check;
    nlohmann::json config = nlohmann::json::object();
    /// "pass", "fail" or "skipped".
    std::string status = "fail";
    nlohmann::json constants = nlohmann::json::object();
    nlohmann::json residuals = nlohmann::json::object();
    long samples = 0;
    std::uint64_t seed = 0;
    double runtime_ms = 0;
    std::string note;

    bool passed() const { return status == "pass"; }
    bool failed() const { return status == "fail"; }
    nlohmann::json to_json(bool timing) const;
};

struct VerificationReport {
    std::vector<CheckResult> results;

    bool all_passed() const;
    nlohmann::json to_json(bool timing) const;
    /// check,constant,value rows for every numeric entry of `constants`.
    std::string constants_csv() const;
};

/// Refinement protocol shared by the existential-constant checks.
struct RefinementOptions {
    /// Largest accepted relative growth of C_fit from the coarse to the refined grid.
    double max_growth = 0.05;
};

// eigenfunction identity: exact when the basis carries exact polynomials.
CheckResult check_eigen(const HermiteBasis& basis);

// [phi_m, phi_n] = delta_mn (exact or float128) and <h_m, h_n> = delta_mn by quadrature.
struct OrthonormalityOptions {
    int quadrature_order = 0;  // 0: degree + 8
    double l2_tol = 1e-6;
};
CheckResult check_orthonormality(const HermiteBasis& basis, const OrthonormalityOptions& opts = {});

// truncated Mehler sum against the closed form built on an independent E (Z2^d series).
struct MehlerOptions {
    std::vector<double> r_values = {0.1, 0.2, 0.3, 0.4, 0.5};
    std::vector<double> grid = {-1.0, -0.5, 0.0, 0.5, 1.0};
    double tol = 1e-6;
};
CheckResult check_mehler(const HermiteBasis& basis, const MehlerOptions& opts = {});

// spectral series against the closed form, kappa = 0 reduction, symmetry and
// the factor carried by the alternative prefactor m.
struct HeatOptions {
    std::vector<double> times = {0.1, 0.3, 1.0, 2.0};
    std::vector<double> grid = {-1.0, -0.4, 0.3, 1.0};
    /// Degree of the numeric Z2^d basis used for the spectral series.
    int spectral_degree = 160;
    double tol = 1e-6;
    double reduction_tol = 1e-10;
    double symmetry_tol = 1e-10;
};
CheckResult check_heat(const HermiteBasis& basis, const KernelConfig& cfg = {}, const HeatOptions& opts = {});

// constant fits for the fourteen kernel inequalities.
struct LemmaOptions {
    double a = 0.125, b = 0.125, c = 0.0625;
    double t_min = 1e-3;
    double t_max = 5.0;
    double box = 3.0;
    /// Coarse grid; the refined grid doubles every density.
    int t_small_points = 25;
    int t_large_points = 17;
    int box_points = 25;
    /// Per-axis box density for d >= 2.
    int box_points_multi = 5;
    /// Refine each grid maximum by a bounded compass search in (log t, x, y)
    /// before comparing coarse and refined fits.
    bool polish = true;
    int polish_starts = 8;
    double polish_min_step = 1e-6;
    long polish_max_evaluations = 20000;
    RefinementOptions refine;
};
CheckResult check_lemma_bounds(const HermiteBasis& basis, const LemmaOptions& opts = {});

// |K_j| min_g |y - g x|^{2 gamma + d} over separations in [s_min, s_max].
struct DecayOptions {
    double s_min = 0.1, s_max = 10.0;
    /// Coarse grid: log-spaced separations and x on a uniform grid of [-box, box]^d;
    /// the refined grid doubles both densities.
    int separations = 9;
    int base_points = 9;
    double box = 2.0;
    /// Extra random directions (d > 1) besides +-e_j.
    int random_directions = 4;
    std::uint64_t seed = 20240917;
    RefinementOptions refine;
};
CheckResult check_kernel_decay(const HermiteBasis& basis, const KernelConfig& cfg = {},
                               const DecayOptions& opts = {});

// int_{min_g |g x - y| > 2|y - y0|} |K_j(x,y) - K_j(x,y0)| dmu(x) and the transposed form.
struct HormanderOptions {
    std::vector<double> deltas = {0.05, 0.1, 0.2, 0.5, 1.0};
    /// Smaller separations evaluated by quadrature only; their slope is reported
    /// as a diagnostic and does not enter the verdict.
    std::vector<double> diagnostic_deltas = {0.025, 0.0125, 0.00625, 0.003125, 0.0015625};
    std::vector<double> centres = {1.0, 0.4};
    int mc_samples = 8000;
    double max_relative_se = 0.05;
    /// Largest accepted slope of value against log(1/delta), relative to the mean value.
    double max_slope = 0.05;
    /// Decay constant of the Gaussian tail; the region is truncated at
    /// max(|y|, |y0|) + 12 / sqrt(decay).
    double decay = 0.125;
    double quad_rel_tol = 1e-6;
    std::uint64_t seed = 20240917;
};
/// Value of the Hormander integral by adaptive quadrature (d = 1) and its
/// importance-sampled estimate.
struct HormanderIntegral {
    double quadrature = 0, quadrature_error = 0, tail_bound = 0;
    double mc = 0, mc_se = 0;
    long evaluations = 0;
};
HormanderIntegral hormander_integral(const HermiteBasis& basis, int j, double y, double y0, bool transposed,
                                     const HormanderOptions& opts, const KernelConfig& cfg, std::uint64_t seed);
CheckResult check_hormander(const HermiteBasis& basis, const KernelConfig& cfg = {}, const HormanderOptions& opts = {});

// operator norms, transpose adjointness and the sum identity.
struct RieszL2Options {
    double norm_slack = 1e-8;
    double adjoint_tol = 1e-10;
    double identity_tol = 1e-10;
    int random_vectors = 20;
    std::uint64_t seed = 20240917;
};
CheckResult check_riesz_l2(const HermiteBasis& basis, const RieszL2Options& opts = {});

// spectral route against kernel quadrature for a bump away from the orbit.
struct IntegralRepOptions {
    double support_lo = 2.0, support_hi = 3.0;
    /// f(y) = exp(-(y - centre)^2 / (2 sigma^2)) on the support, 0 elsewhere.
    double sigma = 0.1;
    std::vector<double> points = {0.2, 0.5, 1.0};
    /// Degree of the numeric basis for the spectral route.
    int spectral_degree = 1600;
    int panels = 64;
    int points_per_panel = 20;
    double tol = 1e-3;
};
struct IntegralRepValues {
    std::vector<double> spectral, kernel;
};
/// Both routes at each point; SupportOverlap if G.x meets the support.
IntegralRepValues integral_representation(const RootSystem& rs, int j, const std::function<double(double)>& f,
                                          const IntegralRepOptions& opts, const KernelConfig& cfg = {});
CheckResult check_integral_representation(const HermiteBasis& basis, const KernelConfig& cfg = {},
                                          const IntegralRepOptions& opts = {});

// ||R_j f||_p / ||f||_p for random band-limited f. Soft evidence only.
struct LpOptions {
    std::vector<double> exponents = {1.5, 2.0, 3.0, 4.0};
    int functions = 50;
    int degree = 20;
    double half_width = 12.0;
    int panels = 480;
    int points_per_panel = 8;
    double max_over_median = 10.0;
    double l2_slack = 0.05;
    std::uint64_t seed = 20240917;
};
CheckResult check_lp_empirical(const HermiteBasis& basis, const LpOptions& opts = {});

/// Runs the named checks in order; an empty list gives an empty report.
VerificationReport run_checks(const std::vector<std::string>& names, const HermiteBasis& basis,
                              const RunConfig& cfg);

}  // namespace dunkl
