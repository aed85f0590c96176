#include "dunkl/polynomial.hpp"

#include "dunkl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dunkl {

MultiIndex::MultiIndex(std::initializer_list<int> entries) : d(static_cast<std::uint8_t>(entries.size())) {
    if (entries.size() > static_cast<std::size_t>(kMaxDim)) throw DimensionMismatch("multi-index too long");
    int i = 0;
    for (int v : entries) e[i++] = static_cast<std::uint16_t>(v);
}

std::string MultiIndex::to_string() const {
    std::string s;
    for (int i = 0; i < d; ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s;
}

MultiIndex MultiIndex::parse(const std::string& s) {
    MultiIndex m;
    std::stringstream ss(s);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= kMaxDim) throw DimensionMismatch("multi-index too long: " + s);
        m.e[i++] = static_cast<std::uint16_t>(std::stoi(part));
    }
    m.d = static_cast<std::uint8_t>(i);
    return m;
}

namespace {

void fill_degree(int dim, int pos, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (pos == dim - 1) {
        cur.e[pos] = static_cast<std::uint16_t>(remaining);
        out.push_back(cur);
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur.e[pos] = static_cast<std::uint16_t>(v);
        fill_degree(dim, pos + 1, remaining - v, cur, out);
    }
    cur.e[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> indices_of_degree(int dim, int k) {
    if (dim < 1 || dim > kMaxDim) throw DimensionMismatch("dimension out of range");
    std::vector<MultiIndex> out;
    MultiIndex cur(dim);
    fill_degree(dim, 0, k, cur, out);
    return out;
}

std::vector<MultiIndex> indices_up_to(int dim, int N) {
    std::vector<MultiIndex> out;
    for (int k = 0; k <= N; ++k) {
        auto block = indices_of_degree(dim, k);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial

template <typename F>
Polynomial<F> Polynomial<F>::constant(int dim, const F& c) {
    Polynomial p(dim);
    p.add_term(MultiIndex(dim), c);
    return p;
}

template <typename F>
Polynomial<F> Polynomial<F>::monomial(const MultiIndex& a, const F& c) {
    Polynomial p(a.dim());
    p.add_term(a, c);
    return p;
}

template <typename F>
int Polynomial<F>::degree() const {
    if (terms_.empty()) return kZeroDegree;
    return terms_.rbegin()->first.order();
}

template <typename F>
bool Polynomial<F>::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.order() == terms_.rbegin()->first.order();
}

template <typename F>
F Polynomial<F>::coefficient(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? F(0) : it->second;
}

template <typename F>
void Polynomial<F>::add_term(const MultiIndex& a, const F& c) {
    if (a.dim() != dim_) throw DimensionMismatch("term dimension does not match polynomial");
    if (FieldTraits<F>::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (FieldTraits<F>::is_zero(it->second)) terms_.erase(it);
    }
}

template <typename F>
void Polynomial<F>::check_dim(const Polynomial& o) const {
    if (o.dim_ != dim_) throw DimensionMismatch("polynomials of dimension " + std::to_string(dim_) + " and " +
                                                std::to_string(o.dim_));
}

template <typename F>
Polynomial<F>& Polynomial<F>::operator+=(const Polynomial& o) {
    check_dim(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

template <typename F>
Polynomial<F>& Polynomial<F>::operator-=(const Polynomial& o) {
    check_dim(o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

template <typename F>
Polynomial<F>& Polynomial<F>::operator*=(const F& c) {
    if (FieldTraits<F>::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        if (FieldTraits<F>::is_zero(it->second))
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

template <typename F>
Polynomial<F> Polynomial<F>::operator-() const {
    Polynomial r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

template <typename F>
Polynomial<F> Polynomial<F>::multiply(const Polynomial& o) const {
    check_dim(o);
    Polynomial r(dim_);
    for (const auto& [a, c] : terms_)
        for (const auto& [b, e] : o.terms_) {
            MultiIndex s(dim_);
            for (int i = 0; i < dim_; ++i) s.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
            r.add_term(s, c * e);
        }
    return r;
}

template <typename F>
Polynomial<F> Polynomial<F>::multiply_variable(int j) const {
    Polynomial r(dim_);
    for (const auto& [a, c] : terms_) {
        MultiIndex s = a;
        ++s.e[j];
        r.terms_.emplace(s, c);
    }
    return r;
}

template <typename F>
Polynomial<F> Polynomial<F>::derivative(int j) const {
    if (j < 0 || j >= dim_) throw DimensionMismatch("derivative axis out of range");
    Polynomial r(dim_);
    for (const auto& [a, c] : terms_) {
        if (a.e[j] == 0) continue;
        MultiIndex s = a;
        --s.e[j];
        r.add_term(s, c * F(static_cast<long>(a.e[j])));
    }
    return r;
}

template <typename F>
Polynomial<F> Polynomial<F>::compose_linear(const std::vector<std::vector<F>>& M) const {
    if (static_cast<int>(M.size()) != dim_) throw DimensionMismatch("matrix does not match polynomial dimension");
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != dim_) throw DimensionMismatch("matrix is not square");

    bool diagonal = true;
    for (int i = 0; i < dim_ && diagonal; ++i)
        for (int k = 0; k < dim_; ++k)
            if (i != k && !FieldTraits<F>::is_zero(M[i][k])) {
                diagonal = false;
                break;
            }

    Polynomial r(dim_);
    if (diagonal) {
        for (const auto& [a, c] : terms_) {
            F v = c;
            for (int i = 0; i < dim_; ++i)
                for (int k = 0; k < a.e[i]; ++k) v *= M[i][i];
            r.add_term(a, v);
        }
        return r;
    }

    // powers[i][k] = (sum_l M[i][l] x_l)^k
    std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(dim_));
    int deg = std::max(degree(), 0);
    for (int i = 0; i < dim_; ++i) {
        Polynomial lin(dim_);
        for (int l = 0; l < dim_; ++l) lin.add_term(MultiIndex::unit(dim_, l), M[i][l]);
        powers[i].push_back(constant(dim_, F(1)));
        for (int k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back().multiply(lin));
    }
    for (const auto& [a, c] : terms_) {
        Polynomial t = constant(dim_, c);
        for (int i = 0; i < dim_; ++i)
            if (a.e[i]) t = t.multiply(powers[i][a.e[i]]);
        r += t;
    }
    return r;
}

template <typename F>
Polynomial<F> Polynomial<F>::dilate(const F& s) const {
    Polynomial r(dim_);
    for (const auto& [a, c] : terms_) {
        F v = c;
        for (int k = 0; k < a.order(); ++k) v *= s;
        r.add_term(a, v);
    }
    return r;
}

template <typename F>
F Polynomial<F>::eval_exact(const std::vector<F>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("evaluation point dimension");
    F sum(0);
    for (const auto& [a, c] : terms_) {
        F v = c;
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < a.e[i]; ++k) v *= x[i];
        sum += v;
    }
    return sum;
}

template <typename F>
double Polynomial<F>::eval(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("evaluation point dimension");
    long double sum = 0;
    for (const auto& [a, c] : terms_) {
        long double v = FieldTraits<F>::to_double(c);
        for (int i = 0; i < dim_; ++i) v *= std::pow(static_cast<long double>(x[i]), a.e[i]);
        sum += v;
    }
    return static_cast<double>(sum);
}

template <typename F>
double Polynomial<F>::eval(const Point& x) const {
    return eval(std::vector<double>(x.data(), x.data() + x.size()));
}

template <typename F>
double Polynomial<F>::max_abs_coefficient() const {
    double m = 0;
    for (const auto& kv : terms_) m = std::max(m, FieldTraits<F>::abs_double(kv.second));
    return m;
}

// ---------------------------------------------------------------------------
// Divided differences

namespace {

template <typename F>
std::vector<std::vector<F>> reflection_of(const std::vector<F>& beta) {
    const int d = static_cast<int>(beta.size());
    F n2(0);
    for (const auto& b : beta) n2 += b * b;
    if (FieldTraits<F>::is_zero(n2)) throw InvalidRootSystem("zero root direction");
    F two_over = F(2) / n2;
    std::vector<std::vector<F>> M(d, std::vector<F>(d, F(0)));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) M[i][k] = (i == k ? F(1) : F(0)) - two_over * beta[i] * beta[k];
    return M;
}

template <typename F>
Polynomial<F> divide_by_linear(Polynomial<F> num, const std::vector<F>& beta) {
    const int d = num.dim();
    int k = -1;
    for (int i = 0; i < d; ++i)
        if (!FieldTraits<F>::is_zero(beta[i])) {
            k = i;
            break;
        }
    if (k < 0) throw InvalidRootSystem("zero root direction");
    const double scale = num.max_abs_coefficient();
    const F inv = F(1) / beta[k];

    int top = 0;
    for (const auto& kv : num.terms()) top = std::max(top, static_cast<int>(kv.first.e[k]));

    Polynomial<F> quot(d);
    for (int level = top; level >= 1; --level) {
        std::vector<std::pair<MultiIndex, F>> lead;
        for (const auto& [a, c] : num.terms())
            if (a.e[k] == level) lead.emplace_back(a, c);
        for (const auto& [a, c] : lead) {
            MultiIndex b = a;
            --b.e[k];
            F q = c * inv;
            quot.add_term(b, q);
            for (int i = 0; i < d; ++i) {
                if (FieldTraits<F>::is_zero(beta[i])) continue;
                MultiIndex s = b;
                ++s.e[i];
                num.add_term(s, -(q * beta[i]));
            }
        }
    }
    if constexpr (FieldTraits<F>::exact) {
        if (!num.is_zero()) throw NonzeroRemainder("divided difference left a nonzero remainder");
    } else {
        if (num.max_abs_coefficient() > 1e-24 * std::max(1.0, scale))
            throw NonzeroRemainder("divided difference left a nonzero remainder");
    }
    return quot;
}

}  // namespace

template <typename F>
Polynomial<F> divided_difference(const Polynomial<F>& p, const std::vector<F>& beta) {
    if (static_cast<int>(beta.size()) != p.dim()) throw DimensionMismatch("root dimension does not match polynomial");
    Polynomial<F> num = p - p.compose_linear(reflection_of(beta));
    return divide_by_linear(std::move(num), beta);
}

// ---------------------------------------------------------------------------
// DunklAlgebra

template <typename F>
DunklAlgebra<F>::DunklAlgebra(int dim, std::vector<std::vector<F>> directions, std::vector<F> kappa)
    : dim_(dim), directions_(std::move(directions)), kappa_(std::move(kappa)) {
    if (directions_.size() != kappa_.size()) throw DimensionMismatch("one multiplicity per root required");
    for (const auto& b : directions_) {
        if (static_cast<int>(b.size()) != dim_) throw DimensionMismatch("root direction dimension");
        reflections_.push_back(reflection_of(b));
        int nonzero = 0;
        for (const auto& c : b)
            if (!FieldTraits<F>::is_zero(c)) ++nonzero;
        diagonal_.push_back(nonzero == 1);
    }
}

template <typename F>
F DunklAlgebra<F>::gamma() const {
    F g(0);
    for (const auto& k : kappa_) g += k;
    return g;
}

template <typename F>
void DunklAlgebra<F>::check(const Polynomial<F>& p) const {
    if (p.dim() != dim_) throw DimensionMismatch("polynomial dimension does not match root system");
}

template <typename F>
Polynomial<F> DunklAlgebra<F>::divided_difference(const Polynomial<F>& p, std::size_t root) const {
    check(p);
    const auto& beta = directions_[root];
    if (diagonal_[root]) {
        // sigma flips x_k: p - p o sigma keeps twice the odd-in-x_k part
        int k = 0;
        while (FieldTraits<F>::is_zero(beta[k])) ++k;
        F f = F(2) / beta[k];
        Polynomial<F> r(dim_);
        for (const auto& [a, c] : p.terms()) {
            if (a.e[k] % 2 == 0) continue;
            MultiIndex b = a;
            --b.e[k];
            r.add_term(b, f * c);
        }
        return r;
    }
    Polynomial<F> num = p - p.compose_linear(reflections_[root]);
    return divide_by_linear(std::move(num), beta);
}

template <typename F>
Polynomial<F> DunklAlgebra<F>::dunkl(int j, const Polynomial<F>& p) const {
    check(p);
    if (j < 0 || j >= dim_) throw DimensionMismatch("Dunkl operator axis out of range");
    Polynomial<F> r = p.derivative(j);
    for (std::size_t i = 0; i < directions_.size(); ++i) {
        if (FieldTraits<F>::is_zero(kappa_[i]) || FieldTraits<F>::is_zero(directions_[i][j])) continue;
        r += divided_difference(p, i) * (kappa_[i] * directions_[i][j]);
    }
    return r;
}

template <typename F>
Polynomial<F> DunklAlgebra<F>::laplacian(const Polynomial<F>& p) const {
    check(p);
    std::vector<Polynomial<F>> dd;
    dd.reserve(directions_.size());
    for (std::size_t i = 0; i < directions_.size(); ++i)
        dd.push_back(FieldTraits<F>::is_zero(kappa_[i]) ? Polynomial<F>(dim_) : divided_difference(p, i));
    Polynomial<F> r(dim_);
    for (int j = 0; j < dim_; ++j) {
        Polynomial<F> tj = p.derivative(j);
        for (std::size_t i = 0; i < directions_.size(); ++i)
            if (!dd[i].is_zero() && !FieldTraits<F>::is_zero(directions_[i][j]))
                tj += dd[i] * (kappa_[i] * directions_[i][j]);
        r += dunkl(j, tj);
    }
    return r;
}

template <typename F>
Polynomial<F> DunklAlgebra<F>::exp_laplacian(const Polynomial<F>& p, const F& s) const {
    check(p);
    Polynomial<F> r = p;
    Polynomial<F> term = p;
    F coef(1);
    for (long k = 1; !term.is_zero(); ++k) {
        term = laplacian(term);
        coef = coef * s / F(k);
        r += term * coef;
    }
    return r;
}

template <typename F>
Polynomial<F> DunklAlgebra<F>::conjugated_oscillator(const Polynomial<F>& p) const {
    check(p);
    Polynomial<F> r = -laplacian(p);
    for (int j = 0; j < dim_; ++j) {
        r += dunkl(j, p).multiply_variable(j);
        r += dunkl(j, p.multiply_variable(j));
    }
    return r;
}

template <typename F>
std::vector<F> DunklAlgebra<F>::pair_with_monomials(const std::vector<MultiIndex>& as, const Polynomial<F>& q) const {
    check(q);
    std::map<MultiIndex, Polynomial<F>> cache;
    cache.emplace(MultiIndex(dim_), q);
    // T^a q, built from T^{a - e_j} q with j the first nonzero entry of a
    auto get = [&](auto&& self, const MultiIndex& a) -> const Polynomial<F>& {
        auto it = cache.find(a);
        if (it != cache.end()) return it->second;
        int j = 0;
        while (a.e[j] == 0) ++j;
        MultiIndex prev = a;
        --prev.e[j];
        const Polynomial<F>& base = self(self, prev);
        Polynomial<F> next = base.is_zero() ? Polynomial<F>(dim_) : dunkl(j, base);
        return cache.emplace(a, std::move(next)).first->second;
    };
    std::vector<F> out;
    out.reserve(as.size());
    const int qdeg = q.degree();
    for (const auto& a : as) {
        if (a.dim() != dim_) throw DimensionMismatch("multi-index dimension");
        if (a.order() > qdeg) {
            out.push_back(F(0));
            continue;
        }
        out.push_back(get(get, a).constant_term());
    }
    return out;
}

template <typename F>
F DunklAlgebra<F>::pairing(const Polynomial<F>& p, const Polynomial<F>& q) const {
    check(p);
    check(q);
    std::vector<MultiIndex> as;
    std::vector<F> cs;
    for (const auto& [a, c] : p.terms()) {
        as.push_back(a);
        cs.push_back(c);
    }
    auto vals = pair_with_monomials(as, q);
    F sum(0);
    for (std::size_t i = 0; i < vals.size(); ++i) sum += cs[i] * vals[i];
    return sum;
}

DunklAlgebra<QuadraticNumber> exact_algebra(const RootSystem& rs) {
    if (!rs.exact_directions() || !rs.exact_multiplicities())
        throw InvalidRootSystem("root system '" + rs.name() + "' has no exact representation");
    std::vector<QuadraticNumber> k;
    for (const auto& q : *rs.exact_multiplicities()) k.emplace_back(q);
    return DunklAlgebra<QuadraticNumber>(rs.dim(), *rs.exact_directions(), std::move(k));
}

DunklAlgebra<Real128> float_algebra(const RootSystem& rs) {
    std::vector<Real128> k;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs.exact_multiplicities())
            k.push_back(FieldTraits<Real128>::from_rational((*rs.exact_multiplicities())[i]));
        else
            k.emplace_back(rs.multiplicity(i));
    }
    return DunklAlgebra<Real128>(rs.dim(), rs.float_directions(), std::move(k));
}

template class Polynomial<QuadraticNumber>;
template class Polynomial<Real128>;
template class DunklAlgebra<QuadraticNumber>;
template class DunklAlgebra<Real128>;
template Polynomial<QuadraticNumber> divided_difference(const Polynomial<QuadraticNumber>&,
                                                        const std::vector<QuadraticNumber>&);
template Polynomial<Real128> divided_difference(const Polynomial<Real128>&, const std::vector<Real128>&);

}  // namespace dunkl
