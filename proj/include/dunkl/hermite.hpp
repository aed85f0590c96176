#pragma once

// Generalized Hermite polynomials and functions for a root system.
//
// Within each degree block the monomials x^a (graded order) are orthogonalised
// under the pairing [p, q] = (p(T) q)(0) without normalisation:
//   psi_n = x^n + (earlier monomials of degree |n|),  [psi_m, psi_n] = delta_mn N_n.
// Then phi_n = psi_n / sqrt(N_n), H_n = 2^{|n|} e^{-Delta/4} phi_n and
//   h_n(x) = 2^{-|n|/2} sqrt(m) e^{-|x|^2/2} H_n(x).
// Keeping psi_n and N_n exact lets every identity be checked without roots.

#include "dunkl/polynomial.hpp"
#include "dunkl/reflection.hpp"

#include <Eigen/Dense>
#include "json.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace dunkl {

template <typename F>
struct BasisPolynomials {
    DunklAlgebra<F> algebra;
    std::vector<Polynomial<F>> psi;
    std::vector<F> norms;
    /// 2^{|n|} e^{-Delta/4} psi_n, so H_n = htilde_n / sqrt(N_n).
    std::vector<Polynomial<F>> htilde;
};

struct BasisOptions {
    /// Largest degree with polynomial data; 0 picks 12 for d >= 2 and 40 for d = 1.
    int degree_cap = 0;
    /// Build polynomial data. Without it only Z2^d bases are available (the
    /// functions are then evaluated by their three-term recurrence).
    bool polynomials = true;
    /// Force the 128-bit float field even when an exact field exists.
    bool force_float = false;
};

class HermiteBasis {
public:
    const RootSystem& root_system() const { return rs_; }
    int dim() const { return rs_.dim(); }
    int degree() const { return N_; }
    std::size_t size() const { return index_.size(); }
    const std::vector<MultiIndex>& indices() const { return index_; }
    const MultiIndex& index(std::size_t i) const { return index_[i]; }
    /// Position of n in indices(); IndexOutOfTruncation if |n| > degree().
    std::size_t position(const MultiIndex& n) const;
    /// First position of the degree-k block.
    std::size_t shell_begin(int k) const;

    double gamma() const { return gamma_; }
    double c_kappa() const { return c_; }
    double m_kappa() const { return m_; }
    /// 2|n| + 2 gamma + d.
    double eigenvalue(std::size_t i) const { return 2.0 * index_[i].order() + 2.0 * gamma_ + rs_.dim(); }

    bool has_polynomials() const { return exact_ || float_; }
    ArithmeticMode mode() const { return exact_ ? ArithmeticMode::Exact : ArithmeticMode::Float128; }
    const BasisPolynomials<QuadraticNumber>* exact() const { return exact_.get(); }
    const BasisPolynomials<Real128>* floating() const { return float_.get(); }

    /// H_n(x) for all n.
    Eigen::VectorXd eval_H(const Point& x) const;
    /// h_n(x) for all n.
    Eigen::VectorXd eval_h(const Point& x) const;

    /// Double-precision coefficients of H_n on the monomials indices() (rows: n).
    const Eigen::MatrixXd& H_coefficients() const;

    nlohmann::json to_json() const;
    static HermiteBasis from_json(const nlohmann::json& j);

private:
    friend HermiteBasis build_basis(const RootSystem&, int, const BasisOptions&);
    explicit HermiteBasis(RootSystem rs) : rs_(std::move(rs)) {}
    void finish_numeric();

    RootSystem rs_;
    int N_ = 0;
    std::vector<MultiIndex> index_;
    std::vector<std::size_t> shell_start_;
    double gamma_ = 0, c_ = 0, m_ = 0;
    std::shared_ptr<const BasisPolynomials<QuadraticNumber>> exact_;
    std::shared_ptr<const BasisPolynomials<Real128>> float_;
    Eigen::MatrixXd Hcoef_;
};

/// Blockwise Gram-Schmidt up to total degree N.
HermiteBasis build_basis(const RootSystem& rs, int N, const BasisOptions& opts = {});

/// c = integral of e^{-|x|^2/2} w(x) dx.
double c_kappa(const RootSystem& rs);

/// h_n(x); IndexOutOfTruncation if |n| exceeds the basis degree.
double hermite_function_eval(const HermiteBasis& basis, const MultiIndex& n, const Point& x);

/// Orthonormal rank-1 functions for weight |sqrt2 x|^{2 kappa} dx:
/// h_0 .. h_N at x, by the three-term recurrence (no overflow or underflow
/// for large N or |x|).
std::vector<double> rank1_hermite_functions(double kappa, int N, double x);
/// H_0 .. H_N at x (h_n = 2^{-n/2} sqrt(m) e^{-x^2/2} H_n).
std::vector<double> rank1_hermite_polynomials(double kappa, int N, double x);
/// mu_n = n + 2 kappa [n odd]: T x^n = mu_n x^{n-1}.
inline double rank1_mu(double kappa, int n) { return n + ((n % 2) ? 2.0 * kappa : 0.0); }

/// FNV-1a 64-bit hash, hex encoded.
std::string fnv1a_hex(const std::string& data);

}  // namespace dunkl
