#include "dunkl/spectral.hpp"

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace dunkl {

double QuadratureRule::integrate(const std::function<double(const Point&)>& F) const {
    long double s = 0;
    for (std::size_t q = 0; q < nodes.size(); ++q) {
        double g = F(nodes[q]);
        if (g == 0.0) continue;
        s += weights[q] * g * std::exp(gaussian_exponent * nodes[q].squaredNorm());
    }
    return static_cast<double>(s);
}

QuadratureRule quadrature_rule(const RootSystem& rs, int order) {
    if (order < 1) throw OrderTooSmall("quadrature order must be >= 1");
    const int d = rs.dim();
    QuadratureRule rule;
    rule.gaussian_exponent = 1.0;

    auto tensor = [&](const std::vector<GaussRule>& axes, bool multiply_weight) {
        std::vector<int> idx(d, 0);
        while (true) {
            Point x(d);
            double w = 1;
            for (int j = 0; j < d; ++j) {
                x[j] = axes[j].nodes[idx[j]];
                w *= axes[j].weights[idx[j]];
            }
            if (multiply_weight) w *= weight(rs, x);
            if (w > 0) {
                rule.nodes.push_back(x);
                rule.weights.push_back(w);
            }
            int j = 0;
            while (j < d && ++idx[j] == static_cast<int>(axes[j].nodes.size())) idx[j++] = 0;
            if (j == d) break;
        }
    };

    if (rs.is_coordinate_system()) {
        rule.kind = "tensor-generalized-hermite";
        std::vector<GaussRule> axes;
        for (int j = 0; j < d; ++j) {
            double k = rs.axis_multiplicity(j);
            GaussRule g = generalized_hermite_rule(k, order);
            // w(x) = prod |sqrt2 x_j|^{2 k_j}
            for (double& w : g.weights) w *= std::pow(2.0, k);
            axes.push_back(std::move(g));
        }
        tensor(axes, false);
        return rule;
    }
    if (d == 2) {
        rule.kind = "polar";
        GaussRule radial = radial_rule(gamma(rs), order);
        std::vector<double> mirrors;
        for (const auto& r : rs.positive_roots()) {
            double th = std::atan2(r.components[1], r.components[0]) + 0.5 * M_PI;
            for (int s = 0; s < 2; ++s) {
                double t = std::fmod(th + s * M_PI, 2.0 * M_PI);
                mirrors.push_back(t < 0 ? t + 2.0 * M_PI : t);
            }
        }
        std::sort(mirrors.begin(), mirrors.end());
        mirrors.push_back(mirrors.front() + 2.0 * M_PI);
        GaussRule gl = gauss_legendre(order);
        for (std::size_t a = 0; a + 1 < mirrors.size(); ++a) {
            double lo = mirrors[a], hi = mirrors[a + 1];
            if (hi - lo < 1e-15) continue;
            for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
                double th = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.nodes[i];
                Point u(2);
                u << std::cos(th), std::sin(th);
                double wa = 0.5 * (hi - lo) * gl.weights[i] * weight(rs, u);
                for (std::size_t q = 0; q < radial.nodes.size(); ++q) {
                    rule.nodes.push_back(radial.nodes[q] * u);
                    rule.weights.push_back(wa * radial.weights[q]);
                }
            }
        }
        return rule;
    }
    rule.kind = "tensor-hermite-weighted";
    std::vector<GaussRule> axes(d, generalized_hermite_rule(0.0, order));
    tensor(axes, true);
    return rule;
}

QuadratureRule interval_rule(const RootSystem& rs, double a, double b, int panels, int points_per_panel) {
    if (rs.dim() != 1) throw DimensionMismatch("interval rules are one-dimensional");
    if (panels < 1 || points_per_panel < 1 || !(b > a)) throw OrderTooSmall("empty interval rule");
    QuadratureRule rule;
    rule.kind = "interval";
    rule.gaussian_exponent = 0.0;
    GaussRule gl = gauss_legendre(points_per_panel);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            Point x(1);
            x[0] = lo + 0.5 * h * (gl.nodes[i] + 1.0);
            rule.nodes.push_back(x);
            rule.weights.push_back(0.5 * h * gl.weights[i] * weight(rs, x));
        }
    }
    return rule;
}

SpectralVector analyze(const HermiteBasis& basis, const QuadratureRule& rule,
                       const std::function<double(const Point&)>& f) {
    SpectralVector v = SpectralVector::Zero(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const Point& x = rule.nodes[q];
        double fx = f(x);
        if (fx == 0.0) continue;
        v += (rule.weights[q] * fx * std::exp(rule.gaussian_exponent * x.squaredNorm())) * basis.eval_h(x);
    }
    return v;
}

double synthesize(const HermiteBasis& basis, const SpectralVector& v, const Point& x) {
    if (v.size() != static_cast<Eigen::Index>(basis.size())) throw DimensionMismatch("coefficient vector size");
    return basis.eval_h(x).dot(v);
}

SpectralVector heat_apply(const HermiteBasis& basis, double t, const SpectralVector& v) {
    if (t < 0) throw std::invalid_argument("heat_apply requires t >= 0");
    SpectralVector out = v;
    for (std::size_t i = 0; i < basis.size(); ++i) out[i] *= std::exp(-t * basis.eigenvalue(i));
    return out;
}

SpectralVector inv_sqrt_apply(const HermiteBasis& basis, const SpectralVector& v) {
    SpectralVector out = v;
    for (std::size_t i = 0; i < basis.size(); ++i) out[i] /= std::sqrt(basis.eigenvalue(i));
    return out;
}

namespace {

template <typename F>
Real128 as_r128(const F& v) {
    if constexpr (std::is_same_v<F, Real128>)
        return v;
    else
        return v.to_real128();
}

template <typename F>
OperatorMatrix delta_from_polynomials(const HermiteBasis& basis, const BasisPolynomials<F>& P, int j,
                                      DeltaVariant variant) {
    const int N = basis.degree();
    const auto n_el = static_cast<Eigen::Index>(basis.size());
    OperatorMatrix out;
    out.M = Eigen::MatrixXd::Zero(n_el, n_el);
    out.safe_degree = variant == DeltaVariant::Lower ? N : N - 1;
    const auto& A = P.algebra;
    const F quarter = F(1) / F(4);
    for (Eigen::Index n = 0; n < n_el; ++n) {
        const int kn = basis.index(n).order();
        const int km = variant == DeltaVariant::Lower ? kn - 1 : kn + 1;
        if (km < 0) continue;
        if (km > N) {
            out.leakage = true;
            continue;
        }
        Polynomial<F> img = A.dunkl(j, P.htilde[n]);
        if (variant == DeltaVariant::Raise) img = P.htilde[n].multiply_variable(j) * F(2) - img;
        if (img.is_zero()) continue;
        Polynomial<F> Q = A.exp_laplacian(img, quarter);
        const auto block = indices_of_degree(basis.dim(), km);
        const auto vals = A.pair_with_monomials(block, Q);
        std::map<MultiIndex, F> pv;
        for (std::size_t a = 0; a < block.size(); ++a) pv.emplace(block[a], vals[a]);
        F two_m(1);
        for (int i = 0; i < km; ++i) two_m *= F(2);
        const std::size_t start = basis.shell_begin(km);
        for (std::size_t m = start; m < start + block.size(); ++m) {
            F pair(0);
            for (const auto& [a, c] : P.psi[m].terms()) pair += c * pv.at(a);
            if (FieldTraits<F>::is_zero(pair)) continue;
            F b = pair / (two_m * P.norms[m]);
            Real128 entry = as_r128(b) * sqrt(as_r128(P.norms[m]) / as_r128(P.norms[n])) *
                            pow(Real128(2), Real128(km - kn) / 2);
            out.M(static_cast<Eigen::Index>(m), n) = entry.template convert_to<double>();
        }
    }
    return out;
}

}  // namespace

OperatorMatrix delta_matrix_polynomial(const HermiteBasis& basis, int j, DeltaVariant variant) {
    if (j < 0 || j >= basis.dim()) throw DimensionMismatch("axis out of range");
    if (basis.exact()) return delta_from_polynomials(basis, *basis.exact(), j, variant);
    if (basis.floating()) return delta_from_polynomials(basis, *basis.floating(), j, variant);
    throw PolynomialsUnavailable("basis was built without polynomial data");
}

OperatorMatrix delta_matrix_ladder(const HermiteBasis& basis, int j, DeltaVariant variant) {
    const RootSystem& rs = basis.root_system();
    if (!rs.is_coordinate_system()) throw WrongGroup("ladder matrices require the group Z2^d");
    if (j < 0 || j >= basis.dim()) throw DimensionMismatch("axis out of range");
    const double kappa = rs.axis_multiplicity(j);
    const int N = basis.degree();
    const auto n_el = static_cast<Eigen::Index>(basis.size());
    OperatorMatrix out;
    out.M = Eigen::MatrixXd::Zero(n_el, n_el);
    out.safe_degree = variant == DeltaVariant::Lower ? N : N - 1;
    for (Eigen::Index n = 0; n < n_el; ++n) {
        MultiIndex idx = basis.index(n);
        if (variant == DeltaVariant::Lower) {
            if (idx.e[j] == 0) continue;
            const double v = std::sqrt(2.0 * rank1_mu(kappa, idx.e[j]));
            --idx.e[j];
            out.M(static_cast<Eigen::Index>(basis.position(idx)), n) = v;
        } else {
            if (idx.order() + 1 > N) {
                out.leakage = true;
                continue;
            }
            const double v = std::sqrt(2.0 * rank1_mu(kappa, idx.e[j] + 1));
            ++idx.e[j];
            out.M(static_cast<Eigen::Index>(basis.position(idx)), n) = v;
        }
    }
    return out;
}

OperatorMatrix delta_matrix(const HermiteBasis& basis, int j, DeltaVariant variant) {
    if (basis.root_system().is_coordinate_system()) return delta_matrix_ladder(basis, j, variant);
    return delta_matrix_polynomial(basis, j, variant);
}

namespace {

OperatorMatrix with_inv_sqrt(const HermiteBasis& basis, OperatorMatrix m) {
    for (Eigen::Index n = 0; n < m.M.cols(); ++n) m.M.col(n) /= std::sqrt(basis.eigenvalue(n));
    return m;
}

}  // namespace

OperatorMatrix riesz_matrix(const HermiteBasis& basis, int j) {
    return with_inv_sqrt(basis, delta_matrix(basis, j, DeltaVariant::Lower));
}

OperatorMatrix riesz_adjoint_matrix(const HermiteBasis& basis, int j) {
    return with_inv_sqrt(basis, delta_matrix(basis, j, DeltaVariant::Raise));
}

double operator_norm(const Eigen::MatrixXd& M, double tol, int max_iter) {
    if (M.size() == 0 || M.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    Eigen::VectorXd v(M.cols());
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = 1.0 + 0.5 * std::sin(1.0 + 7.0 * static_cast<double>(i));
    v.normalize();
    double s = 0;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXd u = M * v;
        double s_new = u.norm();
        if (s_new == 0.0) return 0.0;
        Eigen::VectorXd w = M.transpose() * u;
        double wn = w.norm();
        if (wn == 0.0) return s_new;
        v = w / wn;
        // sqrt(|M^T M v|) >= |M v| for unit v; the two bracket the top singular value
        // once v has converged
        if (std::abs(s_new - s) <= tol * s_new && std::abs(std::sqrt(wn) - s_new) <= tol * s_new)
            return std::sqrt(wn);
        s = s_new;
    }
    return s;
}

Eigen::MatrixXd restrict_to_degree(const HermiteBasis& basis, const Eigen::MatrixXd& M, int k) {
    const auto n = static_cast<Eigen::Index>(basis.shell_begin(k + 1));
    return M.topLeftCorner(std::min(n, M.rows()), std::min(n, M.cols()));
}

std::string matrix_to_csv(const HermiteBasis& basis, const OperatorMatrix& m) {
    std::string out = "row,col,value\r\n";
    char buf[96];
    for (Eigen::Index c = 0; c < m.M.cols(); ++c)
        for (Eigen::Index r = 0; r < m.M.rows(); ++r) {
            if (m.M(r, c) == 0.0) continue;
            std::snprintf(buf, sizeof buf, "\"%s\",\"%s\",%.17g\r\n", basis.index(r).to_string().c_str(),
                          basis.index(c).to_string().c_str(), m.M(r, c));
            out += buf;
        }
    return out;
}

nlohmann::json spectral_vector_to_json(const HermiteBasis& basis, const SpectralVector& v) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[basis.index(i).to_string()] = v[static_cast<Eigen::Index>(i)];
    return {{"degree", basis.degree()}, {"dim", basis.dim()}, {"coefficients", coeffs}};
}

}  // namespace dunkl
