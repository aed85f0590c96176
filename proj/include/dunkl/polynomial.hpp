#pragma once

// Sparse multivariate polynomials over an exact or extended-precision field,
// and the action of Dunkl operators on them.

#include "dunkl/field.hpp"
#include "dunkl/reflection.hpp"

#include <array>
#include <climits>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dunkl {

constexpr int kMaxDim = 8;

struct MultiIndex {
    std::array<std::uint16_t, kMaxDim> e{};
    std::uint8_t d = 0;

    MultiIndex() = default;
    explicit MultiIndex(int dim) : d(static_cast<std::uint8_t>(dim)) {}
    MultiIndex(std::initializer_list<int> entries);

    static MultiIndex unit(int dim, int j) {
        MultiIndex m(dim);
        m.e[j] = 1;
        return m;
    }

    int dim() const { return d; }
    int order() const {
        int s = 0;
        for (int i = 0; i < d; ++i) s += e[i];
        return s;
    }
    int operator[](int i) const { return e[i]; }
    std::string to_string() const;
    static MultiIndex parse(const std::string& s);

    // Graded order: total degree first, then x1^k before x1^{k-1} x2 ...
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        int oa = a.order(), ob = b.order();
        if (oa != ob) return oa < ob;
        for (int i = 0; i < kMaxDim; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
        return false;
    }
    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.d == b.d && a.e == b.e; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }
};

/// All n in N^d with |n| = k, in graded order.
std::vector<MultiIndex> indices_of_degree(int dim, int k);
/// All n with |n| <= N, in graded order.
std::vector<MultiIndex> indices_up_to(int dim, int N);

template <typename F>
class Polynomial {
public:
    using Terms = std::map<MultiIndex, F>;
    static constexpr int kZeroDegree = INT_MIN;

    explicit Polynomial(int dim = 1) : dim_(dim) {}

    static Polynomial constant(int dim, const F& c);
    static Polynomial monomial(const MultiIndex& a, const F& c = F(1));
    static Polynomial variable(int dim, int j) { return monomial(MultiIndex::unit(dim, j)); }

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// kZeroDegree for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    F coefficient(const MultiIndex& a) const;
    F constant_term() const { return coefficient(MultiIndex(dim_)); }

    void add_term(const MultiIndex& a, const F& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const F& c);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const F& c) { return a *= c; }
    friend Polynomial operator*(const F& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiply(b); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

    Polynomial multiply(const Polynomial& o) const;
    Polynomial multiply_variable(int j) const;
    Polynomial derivative(int j) const;
    /// x -> p(M x).
    Polynomial compose_linear(const std::vector<std::vector<F>>& M) const;
    /// x -> p(s x).
    Polynomial dilate(const F& s) const;

    F eval_exact(const std::vector<F>& x) const;
    double eval(const std::vector<double>& x) const;
    double eval(const Point& x) const;

    /// Largest |coefficient|, as a double.
    double max_abs_coefficient() const;

private:
    void check_dim(const Polynomial& o) const;

    int dim_;
    Terms terms_;
};

/// Exact quotient (p - p o sigma_beta) / <x, beta> for any nonzero direction beta.
template <typename F>
Polynomial<F> divided_difference(const Polynomial<F>& p, const std::vector<F>& beta);

/// Dunkl operators for a fixed root system over the field F.
///
/// Roots enter as un-normalised directions beta with multiplicities kappa;
/// T_j p = d_j p + sum kappa beta_j (p - p o sigma_beta) / <x, beta>.
template <typename F>
class DunklAlgebra {
public:
    DunklAlgebra(int dim, std::vector<std::vector<F>> directions, std::vector<F> kappa);

    int dim() const { return dim_; }
    std::size_t root_count() const { return directions_.size(); }
    const std::vector<F>& direction(std::size_t i) const { return directions_[i]; }
    const std::vector<F>& kappa() const { return kappa_; }
    F gamma() const;

    Polynomial<F> divided_difference(const Polynomial<F>& p, std::size_t root) const;
    Polynomial<F> dunkl(int j, const Polynomial<F>& p) const;
    Polynomial<F> laplacian(const Polynomial<F>& p) const;
    Polynomial<F> exp_laplacian(const Polynomial<F>& p, const F& s) const;
    /// -Delta p + sum_j (x_j T_j p + T_j(x_j p)): L conjugated by exp(-|x|^2/2).
    Polynomial<F> conjugated_oscillator(const Polynomial<F>& p) const;
    /// [p, q] = (p(T) q)(0).
    F pairing(const Polynomial<F>& p, const Polynomial<F>& q) const;
    /// (T^a q)(0) for every a in `as`, sharing intermediate results.
    std::vector<F> pair_with_monomials(const std::vector<MultiIndex>& as, const Polynomial<F>& q) const;

private:
    void check(const Polynomial<F>& p) const;

    int dim_;
    std::vector<std::vector<F>> directions_;
    std::vector<F> kappa_;
    std::vector<std::vector<std::vector<F>>> reflections_;
    std::vector<bool> diagonal_;
};

/// Builds the algebra for the root system's exact field (QuadraticNumber) or
/// for its float fallback (Real128). Throws InvalidRootSystem if the exact
/// data is not available.
DunklAlgebra<QuadraticNumber> exact_algebra(const RootSystem& rs);
DunklAlgebra<Real128> float_algebra(const RootSystem& rs);

extern template class Polynomial<QuadraticNumber>;
extern template class Polynomial<Real128>;
extern template class DunklAlgebra<QuadraticNumber>;
extern template class DunklAlgebra<Real128>;

}  // namespace dunkl
