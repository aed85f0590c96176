#include "dunkl/hermite.hpp"

#include "dunkl/config.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace dunkl {

namespace {

using json = nlohmann::json;

int default_cap(int dim) { return dim == 1 ? 40 : 12; }

// Values v_n = scale * s_n of the rank-1 recurrence
//   x q_n = b_{n+1} q_{n+1} + b_n q_{n-1},  b_n = sqrt(mu_n / 2),
// started from q_0 = 1, returned as exp(log_offset + n * log_step + log q_n).
std::vector<double> rank1_recurrence(double kappa, int N, double x, double log_offset, double log_step) {
    std::vector<double> out(static_cast<std::size_t>(N) + 1);
    double E = log_offset;
    double prev = 0.0, cur = 1.0;
    constexpr double kBig = 1e150;
    const double kLogBig = std::log(kBig);
    auto emit = [&](int n, double s) {
        out[n] = (s == 0.0) ? 0.0 : std::copysign(std::exp(E + std::log(std::abs(s)) + n * log_step), s);
    };
    emit(0, cur);
    for (int n = 0; n < N; ++n) {
        double bn = n > 0 ? std::sqrt(rank1_mu(kappa, n) / 2.0) : 0.0;
        double bn1 = std::sqrt(rank1_mu(kappa, n + 1) / 2.0);
        double next = (x * cur - bn * prev) / bn1;
        prev = cur;
        cur = next;
        if (std::abs(cur) > kBig) {
            cur /= kBig;
            prev /= kBig;
            E += kLogBig;
        } else if (cur != 0.0 && std::abs(cur) < 1.0 / kBig && std::abs(prev) < 1.0 / kBig) {
            cur *= kBig;
            prev *= kBig;
            E -= kLogBig;
        }
        emit(n + 1, cur);
    }
    return out;
}

double log_p0(double kappa) { return -0.5 * (kappa * std::log(2.0) + std::lgamma(kappa + 0.5)); }

template <typename F>
Real128 to_r128(const F& v) {
    if constexpr (std::is_same_v<F, Real128>)
        return v;
    else
        return v.to_real128();
}

template <typename F>
std::shared_ptr<BasisPolynomials<F>> orthogonalise(DunklAlgebra<F> alg, int N) {
    auto out = std::make_shared<BasisPolynomials<F>>(BasisPolynomials<F>{std::move(alg), {}, {}, {}});
    const auto& A = out->algebra;
    const int d = A.dim();
    const F quarter = F(-1) / F(4);
    for (int k = 0; k <= N; ++k) {
        const auto block = indices_of_degree(d, k);
        const std::size_t B = block.size();
        // G[l][m] = [x^{a_l}, x^{a_m}]
        std::vector<std::vector<F>> G(B, std::vector<F>(B, F(0)));
        for (std::size_t m = 0; m < B; ++m) {
            auto col = A.pair_with_monomials(block, Polynomial<F>::monomial(block[m]));
            for (std::size_t l = 0; l < B; ++l) G[l][m] = col[l];
        }
        auto form = [&](const std::vector<F>& u, const std::vector<F>& v) {
            F s(0);
            for (std::size_t l = 0; l < B; ++l) {
                if (FieldTraits<F>::is_zero(u[l])) continue;
                F inner(0);
                for (std::size_t m = 0; m < B; ++m)
                    if (!FieldTraits<F>::is_zero(v[m])) inner += G[l][m] * v[m];
                s += u[l] * inner;
            }
            return s;
        };
        double diag_scale = 0;
        for (std::size_t l = 0; l < B; ++l) diag_scale = std::max(diag_scale, FieldTraits<F>::abs_double(G[l][l]));

        std::vector<std::vector<F>> C;
        std::vector<F> norms;
        for (std::size_t i = 0; i < B; ++i) {
            std::vector<F> c(B, F(0));
            c[i] = F(1);
            for (std::size_t q = 0; q < i; ++q) {
                F coef = form(c, C[q]) / norms[q];
                if (FieldTraits<F>::is_zero(coef)) continue;
                for (std::size_t l = 0; l < B; ++l) c[l] -= coef * C[q][l];
            }
            F nrm = form(c, c);
            if constexpr (FieldTraits<F>::exact) {
                if (nrm.sign() <= 0) throw GramSingular("Gram block of degree " + std::to_string(k) + " is singular");
            } else {
                if (!(nrm > 1e-20 * std::max(1.0, diag_scale)))
                    throw GramSingular("Gram block of degree " + std::to_string(k) + " is numerically singular");
            }
            C.push_back(c);
            norms.push_back(nrm);
        }
        F two_k(1);
        for (int i = 0; i < k; ++i) two_k *= F(2);
        for (std::size_t i = 0; i < B; ++i) {
            Polynomial<F> psi(d);
            for (std::size_t l = 0; l < B; ++l) psi.add_term(block[l], C[i][l]);
            out->htilde.push_back(A.exp_laplacian(psi, quarter) * two_k);
            out->psi.push_back(std::move(psi));
            out->norms.push_back(norms[i]);
        }
    }
    return out;
}

template <typename F>
Eigen::MatrixXd coefficient_matrix(const BasisPolynomials<F>& P, const std::vector<MultiIndex>& index) {
    const Eigen::Index n = static_cast<Eigen::Index>(index.size());
    std::map<MultiIndex, Eigen::Index> col;
    for (Eigen::Index i = 0; i < n; ++i) col.emplace(index[i], i);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Real128 inv = 1 / sqrt(to_r128(P.norms[i]));
        for (const auto& [a, c] : P.htilde[i].terms()) M(i, col.at(a)) = (to_r128(c) * inv).template convert_to<double>();
    }
    return M;
}

double angular_integral(const RootSystem& rs) {
    std::vector<double> mirrors;
    for (const auto& r : rs.positive_roots()) {
        double th = std::atan2(r.components[1], r.components[0]) + 0.5 * M_PI;
        for (int s = 0; s < 2; ++s) {
            double t = std::fmod(th + s * M_PI, 2.0 * M_PI);
            if (t < 0) t += 2.0 * M_PI;
            mirrors.push_back(t);
        }
    }
    std::sort(mirrors.begin(), mirrors.end());
    mirrors.push_back(mirrors.front() + 2.0 * M_PI);
    auto omega = [&](double th) {
        Point u(2);
        u << std::cos(th), std::sin(th);
        return weight(rs, u);
    };
    double total = 0;
    for (std::size_t i = 0; i + 1 < mirrors.size(); ++i) {
        if (mirrors[i + 1] - mirrors[i] < 1e-15) continue;
        auto r = integrate_gk15(omega, mirrors[i], mirrors[i + 1], 0.0, 1e-13);
        if (!r.converged && r.error > 1e-10 * std::abs(r.value))
            throw QuadratureNonConvergence("angular integral did not converge");
        total += r.value;
    }
    return total;
}

}  // namespace

double c_kappa(const RootSystem& rs) {
    const int d = rs.dim();
    if (rs.is_coordinate_system()) {
        double c = 1.0;
        for (int j = 0; j < d; ++j) {
            double k = rs.axis_multiplicity(j);
            c *= std::pow(2.0, 2.0 * k + 0.5) * std::tgamma(k + 0.5);
        }
        return c;
    }
    const double g = gamma(rs);
    if (d == 2) return std::pow(2.0, g) * std::tgamma(g + 1.0) * angular_integral(rs);

    // x = sqrt2 u: integral = 2^{d/2 + gamma} * integral e^{-|u|^2} w(u) du
    auto tensor = [&](int n) {
        GaussRule r = generalized_hermite_rule(0.0, n);
        std::vector<int> idx(d, 0);
        double sum = 0;
        while (true) {
            Point u(d);
            double w = 1;
            for (int j = 0; j < d; ++j) {
                u[j] = r.nodes[idx[j]];
                w *= r.weights[idx[j]];
            }
            sum += w * weight(rs, u);
            int j = 0;
            while (j < d && ++idx[j] == n) idx[j++] = 0;
            if (j == d) break;
        }
        return std::pow(2.0, 0.5 * d + g) * sum;
    };
    double a = tensor(24), b = tensor(48);
    if (std::abs(a - b) > 1e-8 * std::abs(b)) throw QuadratureNonConvergence("c_kappa tensor rule did not converge");
    return b;
}

std::vector<double> rank1_hermite_functions(double kappa, int N, double x) {
    return rank1_recurrence(kappa, N, x, log_p0(kappa) - 0.5 * x * x, 0.0);
}

std::vector<double> rank1_hermite_polynomials(double kappa, int N, double x) {
    return rank1_recurrence(kappa, N, x, 0.0, 0.5 * std::log(2.0));
}

HermiteBasis build_basis(const RootSystem& rs, int N, const BasisOptions& opts) {
    if (N < 0) throw DegreeCapExceeded("degree must be >= 0");
    const int cap = opts.degree_cap > 0 ? opts.degree_cap : default_cap(rs.dim());
    if (opts.polynomials && N > cap)
        throw DegreeCapExceeded("degree " + std::to_string(N) + " exceeds the cap " + std::to_string(cap));
    if (!opts.polynomials && !rs.is_coordinate_system())
        throw PolynomialsUnavailable("bases without polynomial data exist only for Z2^d");

    HermiteBasis b(rs);
    b.N_ = N;
    b.index_ = indices_up_to(rs.dim(), N);
    for (int k = 0; k <= N; ++k)
        b.shell_start_.push_back(k == 0 ? 0 : b.shell_start_.back() + indices_of_degree(rs.dim(), k - 1).size());
    b.gamma_ = gamma(rs);
    b.c_ = c_kappa(rs);
    b.m_ = std::pow(2.0, b.gamma_ + 0.5 * rs.dim()) / b.c_;
    if (opts.polynomials) {
        if (rs.mode() == ArithmeticMode::Exact && rs.exact_multiplicities() && !opts.force_float)
            b.exact_ = orthogonalise(exact_algebra(rs), N);
        else
            b.float_ = orthogonalise(float_algebra(rs), N);
    }
    b.finish_numeric();
    return b;
}

void HermiteBasis::finish_numeric() {
    if (exact_)
        Hcoef_ = coefficient_matrix(*exact_, index_);
    else if (float_)
        Hcoef_ = coefficient_matrix(*float_, index_);
}

std::size_t HermiteBasis::position(const MultiIndex& n) const {
    if (n.dim() != dim()) throw DimensionMismatch("multi-index dimension does not match the basis");
    if (n.order() > N_) throw IndexOutOfTruncation("|n| = " + std::to_string(n.order()) + " exceeds degree " +
                                                   std::to_string(N_));
    auto it = std::lower_bound(index_.begin(), index_.end(), n);
    return static_cast<std::size_t>(it - index_.begin());
}

std::size_t HermiteBasis::shell_begin(int k) const {
    if (k > N_) return index_.size();
    return shell_start_[k];
}

const Eigen::MatrixXd& HermiteBasis::H_coefficients() const {
    if (!has_polynomials()) throw PolynomialsUnavailable("basis was built without polynomial data");
    return Hcoef_;
}

Eigen::VectorXd HermiteBasis::eval_H(const Point& x) const {
    if (x.size() != dim()) throw DimensionMismatch("point dimension does not match the basis");
    Eigen::VectorXd out(size());
    if (rs_.is_coordinate_system()) {
        std::vector<std::vector<double>> axis;
        for (int j = 0; j < dim(); ++j) axis.push_back(rank1_hermite_polynomials(rs_.axis_multiplicity(j), N_, x[j]));
        for (std::size_t i = 0; i < size(); ++i) {
            double v = 1;
            for (int j = 0; j < dim(); ++j) v *= axis[j][index_[i][j]];
            out[i] = v;
        }
        return out;
    }
    Eigen::VectorXd mono(size());
    for (std::size_t i = 0; i < size(); ++i) {
        double v = 1;
        for (int j = 0; j < dim(); ++j) v *= std::pow(x[j], index_[i][j]);
        mono[i] = v;
    }
    return H_coefficients() * mono;
}

Eigen::VectorXd HermiteBasis::eval_h(const Point& x) const {
    if (x.size() != dim()) throw DimensionMismatch("point dimension does not match the basis");
    if (rs_.is_coordinate_system()) {
        Eigen::VectorXd out(size());
        std::vector<std::vector<double>> axis;
        for (int j = 0; j < dim(); ++j) axis.push_back(rank1_hermite_functions(rs_.axis_multiplicity(j), N_, x[j]));
        for (std::size_t i = 0; i < size(); ++i) {
            double v = 1;
            for (int j = 0; j < dim(); ++j) v *= axis[j][index_[i][j]];
            out[i] = v;
        }
        return out;
    }
    Eigen::VectorXd H = eval_H(x);
    const double base = std::sqrt(m_) * std::exp(-0.5 * x.squaredNorm());
    for (std::size_t i = 0; i < size(); ++i) H[i] *= base * std::pow(2.0, -0.5 * index_[i].order());
    return H;
}

double hermite_function_eval(const HermiteBasis& basis, const MultiIndex& n, const Point& x) {
    std::size_t i = basis.position(n);
    return basis.eval_h(x)[static_cast<Eigen::Index>(i)];
}

// ---------------------------------------------------------------------------
// serialisation

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

template <typename F>
json poly_to_json(const Polynomial<F>& p) {
    json j = json::object();
    for (const auto& [a, c] : p.terms()) j[a.to_string()] = FieldTraits<F>::to_string(c);
    return j;
}

template <typename F>
Polynomial<F> poly_from_json(const json& j, int dim) {
    Polynomial<F> p(dim);
    for (const auto& [k, v] : j.items()) {
        MultiIndex a = MultiIndex::parse(k);
        if (a.dim() != dim) throw ConfigError("basis file: term '" + k + "' has the wrong dimension");
        p.add_term(a, FieldTraits<F>::parse(v.template get<std::string>()));
    }
    return p;
}

template <typename F>
json elements_to_json(const BasisPolynomials<F>& P, const std::vector<MultiIndex>& index) {
    json arr = json::array();
    for (std::size_t i = 0; i < index.size(); ++i)
        arr.push_back({{"n", index[i].to_string()},
                       {"norm", FieldTraits<F>::to_string(P.norms[i])},
                       {"psi", poly_to_json(P.psi[i])},
                       {"H", poly_to_json(P.htilde[i])}});
    return arr;
}

template <typename F>
std::shared_ptr<BasisPolynomials<F>> elements_from_json(DunklAlgebra<F> alg, const json& arr,
                                                        const std::vector<MultiIndex>& index) {
    if (arr.size() != index.size()) throw ConfigError("basis file: element count does not match the degree");
    auto P = std::make_shared<BasisPolynomials<F>>(BasisPolynomials<F>{std::move(alg), {}, {}, {}});
    const int d = P->algebra.dim();
    for (std::size_t i = 0; i < index.size(); ++i) {
        const json& e = arr[i];
        if (MultiIndex::parse(e.at("n").get<std::string>()) != index[i])
            throw ConfigError("basis file: elements out of order");
        P->norms.push_back(FieldTraits<F>::parse(e.at("norm").get<std::string>()));
        P->psi.push_back(poly_from_json<F>(e.at("psi"), d));
        P->htilde.push_back(poly_from_json<F>(e.at("H"), d));
    }
    return P;
}

}  // namespace

json HermiteBasis::to_json() const {
    json payload;
    payload["format"] = "dunkl-hermite-basis/1";
    payload["root_system"] = root_system_to_json(rs_);
    payload["degree"] = N_;
    payload["mode"] = exact_ ? "exact" : (float_ ? "float128" : "numeric");
    payload["constants"] = {{"c_kappa", c_}, {"m_kappa", m_}, {"gamma", gamma_}};
    if (exact_)
        payload["elements"] = elements_to_json(*exact_, index_);
    else if (float_)
        payload["elements"] = elements_to_json(*float_, index_);
    json j = payload;
    j["checksum"] = fnv1a_hex(payload.dump());
    return j;
}

HermiteBasis HermiteBasis::from_json(const json& j) {
    try {
        if (!j.is_object() || !j.contains("checksum")) throw ChecksumError("basis file has no checksum");
        json payload = j;
        payload.erase("checksum");
        if (fnv1a_hex(payload.dump()) != j.at("checksum").get<std::string>())
            throw ChecksumError("basis file checksum mismatch");
        if (payload.at("format") != "dunkl-hermite-basis/1") throw ConfigError("unknown basis file format");

        HermiteBasis b(root_system_from_json(payload.at("root_system")));
        b.N_ = payload.at("degree").get<int>();
        b.index_ = indices_up_to(b.rs_.dim(), b.N_);
        for (int k = 0; k <= b.N_; ++k)
            b.shell_start_.push_back(k == 0 ? 0 : b.shell_start_.back() + indices_of_degree(b.rs_.dim(), k - 1).size());
        b.gamma_ = dunkl::gamma(b.rs_);
        b.c_ = payload.at("constants").at("c_kappa").get<double>();
        b.m_ = payload.at("constants").at("m_kappa").get<double>();
        const std::string mode = payload.at("mode").get<std::string>();
        if (mode == "exact")
            b.exact_ = elements_from_json(exact_algebra(b.rs_), payload.at("elements"), b.index_);
        else if (mode == "float128")
            b.float_ = elements_from_json(float_algebra(b.rs_), payload.at("elements"), b.index_);
        else if (mode != "numeric" || !b.rs_.is_coordinate_system())
            throw ConfigError("basis file: invalid mode '" + mode + "'");
        b.finish_numeric();
        return b;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("basis file: ") + e.what());
    }
}

}  // namespace dunkl
