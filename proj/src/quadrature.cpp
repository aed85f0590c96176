#include "dunkl/quadrature.hpp"

#include "dunkl/errors.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <queue>

namespace dunkl {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the nodes kXgk[1], kXgk[3], kXgk[5], kXgk[7]
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double k = fc * kWgk[7];
    double g = fc * kWg[3];
    for (int i = 0; i < 7; ++i) {
        double x = h * kXgk[i];
        double s = f(c - x) + f(c + x);
        k += kWgk[i] * s;
        if (i % 2 == 1) g += kWg[i / 2] * s;
    }
    return {a, b, k * h, std::abs((k - g) * h)};
}

using HighPrec = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<250>>;

template <typename T>
Recurrence chebyshev(const std::vector<T>& m, int n) {
    if (n < 1) throw OrderTooSmall("quadrature order must be >= 1");
    if (static_cast<int>(m.size()) < 2 * n) throw OrderTooSmall("not enough moments for the requested order");
    std::vector<T> alpha(n), beta(n);
    std::vector<T> prev2(2 * n, T(0)), prev(m.begin(), m.begin() + 2 * n), cur(2 * n, T(0));
    if (m[0] == 0) throw MomentMatrixSingular("zero mass");
    alpha[0] = m[1] / m[0];
    beta[0] = m[0];
    for (int k = 1; k < n; ++k) {
        for (int l = k; l < 2 * n - k; ++l) cur[l] = prev[l + 1] - alpha[k - 1] * prev[l] - beta[k - 1] * prev2[l];
        if (cur[k] == 0) throw MomentMatrixSingular("moment matrix singular at order " + std::to_string(k));
        alpha[k] = cur[k + 1] / cur[k] - prev[k] / prev[k - 1];
        beta[k] = cur[k] / prev[k - 1];
        if (beta[k] < 0) throw MomentMatrixSingular("moment sequence is not positive definite");
        prev2.swap(prev);
        prev.swap(cur);
    }
    Recurrence r;
    for (int k = 0; k < n; ++k) {
        if constexpr (std::is_same_v<T, Rational>) {
            r.alpha.push_back(alpha[k].get_d());
            r.beta.push_back(beta[k].get_d());
        } else {
            r.alpha.push_back(alpha[k].template convert_to<double>());
            r.beta.push_back(beta[k].template convert_to<double>());
        }
    }
    return r;
}

}  // namespace

IntegrationResult integrate_gk15(const std::function<double(double)>& f, double a, double b, double abs_tol,
                                 double rel_tol, int max_intervals) {
    IntegrationResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    std::priority_queue<Panel> heap;
    Panel first = gk15(f, a, b);
    heap.push(first);
    double total = first.value, err = first.error;
    res.evaluations = 15;
    while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (static_cast<int>(heap.size()) >= max_intervals) break;
        Panel worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            heap.push(worst);
            break;
        }
        Panel l = gk15(f, worst.a, mid), r = gk15(f, mid, worst.b);
        res.evaluations += 30;
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
    }
    // re-sum to shed accumulated rounding from the running updates
    total = 0;
    err = 0;
    res.intervals = static_cast<int>(heap.size());
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    res.value = total;
    res.error = err;
    res.converged = err <= std::max(abs_tol, rel_tol * std::abs(total));
    return res;
}

GaussRule golub_welsch(const std::vector<double>& alpha, const std::vector<double>& beta) {
    const int n = static_cast<int>(alpha.size());
    if (n < 1 || beta.size() < alpha.size()) throw OrderTooSmall("empty recurrence");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        J(k, k) = alpha[k];
        if (k + 1 < n) J(k, k + 1) = J(k + 1, k) = std::sqrt(beta[k + 1]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    GaussRule g;
    for (int k = 0; k < n; ++k) {
        double v = es.eigenvectors()(0, k);
        g.nodes.push_back(es.eigenvalues()(k));
        g.weights.push_back(beta[0] * v * v);
    }
    return g;
}

Recurrence recurrence_from_moments(const std::vector<Rational>& moments, int n) { return chebyshev(moments, n); }

GaussRule gauss_legendre(int n) {
    if (n < 1) throw OrderTooSmall("Gauss-Legendre order must be >= 1");
    std::vector<double> alpha(n, 0.0), beta(n);
    beta[0] = 2.0;
    for (int k = 1; k < n; ++k) beta[k] = static_cast<double>(k) * k / (4.0 * k * k - 1.0);
    GaussRule g = golub_welsch(alpha, beta);
    // symmetrise to remove eigensolver noise
    for (int i = 0; i < n / 2; ++i) {
        double x = 0.5 * (g.nodes[n - 1 - i] - g.nodes[i]);
        double w = 0.5 * (g.weights[i] + g.weights[n - 1 - i]);
        g.nodes[i] = -x;
        g.nodes[n - 1 - i] = x;
        g.weights[i] = g.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) g.nodes[n / 2] = 0.0;
    return g;
}

GaussRule generalized_hermite_rule(double kappa, int n) {
    if (n < 1) throw OrderTooSmall("quadrature order must be >= 1");
    if (!(kappa >= 0)) throw MomentMatrixSingular("negative multiplicity");
    Recurrence rec;
    Rational q;
    if (rationalize(kappa, q, 100000, 1e-14)) {
        // m_{2k} / m_0 = prod_{i<k} (i + kappa + 1/2); odd moments vanish
        std::vector<Rational> m(2 * n, Rational(0));
        m[0] = 1;
        Rational half(1, 2);
        for (int k = 1; 2 * k < 2 * n; ++k) {
            m[2 * k] = m[2 * k - 2] * (Rational(k - 1) + q + half);
            m[2 * k].canonicalize();
        }
        rec = chebyshev(m, n);
    } else {
        std::vector<HighPrec> m(2 * n, HighPrec(0));
        m[0] = 1;
        for (int k = 1; 2 * k < 2 * n; ++k) m[2 * k] = m[2 * k - 2] * (HighPrec(k - 1) + HighPrec(kappa) + HighPrec(0.5));
        rec = chebyshev(m, n);
    }
    rec.beta[0] = std::tgamma(kappa + 0.5);
    for (double& a : rec.alpha) a = 0.0;
    GaussRule g = golub_welsch(rec.alpha, rec.beta);
    for (int i = 0; i < n / 2; ++i) {
        double x = 0.5 * (g.nodes[n - 1 - i] - g.nodes[i]);
        double w = 0.5 * (g.weights[i] + g.weights[n - 1 - i]);
        g.nodes[i] = -x;
        g.nodes[n - 1 - i] = x;
        g.weights[i] = g.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) g.nodes[n / 2] = 0.0;
    return g;
}

GaussRule radial_rule(double gamma, int n) {
    if (n < 1) throw OrderTooSmall("quadrature order must be >= 1");
    // m_k = Gamma(gamma + 1 + k/2) / 2, normalised by m_0
    std::vector<HighPrec> m(2 * n);
    const HighPrec g1 = boost::math::tgamma(HighPrec(gamma) + 1);
    for (int k = 0; k < 2 * n; ++k) m[k] = boost::math::tgamma(HighPrec(gamma) + 1 + HighPrec(k) / 2) / g1;
    Recurrence rec = chebyshev(m, n);
    rec.beta[0] = 0.5 * std::tgamma(gamma + 1.0);
    return golub_welsch(rec.alpha, rec.beta);
}

GaussRule tanh_sinh_rule(double a, double b, int level) {
    const double h = std::ldexp(1.0, -level);
    const double half = 0.5 * (b - a);
    const double pi2 = 0.5 * M_PI;
    GaussRule g;
    for (int k = 0;; ++k) {
        double t = k * h;
        double u = pi2 * std::sinh(t);
        double ch = std::cosh(u);
        double w = h * pi2 * std::cosh(t) / (ch * ch);
        // distance from the nearer endpoint, in units of half: 1 - tanh(u)
        double gap = 2.0 / (1.0 + std::exp(2.0 * u));
        if (w * half < 1e-300 || gap * half <= 0 || !std::isfinite(w)) break;
        if (k == 0) {
            g.nodes.push_back(a + half);
            g.weights.push_back(w * half);
        } else {
            double left = a + half * gap, right = b - half * gap;
            if (left <= a || right >= b) break;
            g.nodes.push_back(left);
            g.weights.push_back(w * half);
            g.nodes.push_back(right);
            g.weights.push_back(w * half);
        }
        if (w < 1e-20 && k > 0) break;
    }
    return g;
}

}  // namespace dunkl
