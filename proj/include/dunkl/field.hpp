#pragma once

// Coefficient fields for exact and extended-precision polynomial arithmetic.
//
// QuadraticNumber is an element a + b*sqrt(D) of Q(sqrt(D)) with D square-free.
// Pure rationals carry radicand 0. Mixing two different radicands is a logic
// error: a root system selects exactly one field.

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

namespace dunkl {

using Rational = mpq_class;
using Real128 = boost::multiprecision::cpp_bin_float_quad;

class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
    QuadraticNumber(Rational a, Rational b, int radicand);

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    int radicand() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    int sign() const;
    double to_double() const;
    Real128 to_real128() const;
    std::string to_string() const;
    static QuadraticNumber parse(const std::string& s);

    QuadraticNumber operator-() const;
    QuadraticNumber& operator+=(const QuadraticNumber& o);
    QuadraticNumber& operator-=(const QuadraticNumber& o);
    QuadraticNumber& operator*=(const QuadraticNumber& o);
    QuadraticNumber& operator/=(const QuadraticNumber& o);

    friend QuadraticNumber operator+(QuadraticNumber l, const QuadraticNumber& r) { return l += r; }
    friend QuadraticNumber operator-(QuadraticNumber l, const QuadraticNumber& r) { return l -= r; }
    friend QuadraticNumber operator*(QuadraticNumber l, const QuadraticNumber& r) { return l *= r; }
    friend QuadraticNumber operator/(QuadraticNumber l, const QuadraticNumber& r) { return l /= r; }
    friend bool operator==(const QuadraticNumber& l, const QuadraticNumber& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && (sgn(l.b_) == 0 || l.d_ == r.d_);
    }
    friend bool operator!=(const QuadraticNumber& l, const QuadraticNumber& r) { return !(l == r); }

private:
    int merge_radicand(const QuadraticNumber& o) const;

    Rational a_{0};
    Rational b_{0};
    int d_ = 0;
};

/// Per-field operations used by the generic polynomial code.
template <typename F>
struct FieldTraits;

template <>
struct FieldTraits<QuadraticNumber> {
    static constexpr bool exact = true;
    static bool is_zero(const QuadraticNumber& v) { return v.is_zero(); }
    static double to_double(const QuadraticNumber& v) { return v.to_double(); }
    static QuadraticNumber from_rational(const Rational& q) { return QuadraticNumber(q); }
    static std::string to_string(const QuadraticNumber& v) { return v.to_string(); }
    static QuadraticNumber parse(const std::string& s) { return QuadraticNumber::parse(s); }
    static double abs_double(const QuadraticNumber& v) { return std::abs(v.to_double()); }
};

template <>
struct FieldTraits<Real128> {
    static constexpr bool exact = false;
    // Coefficients below this are treated as cancellation residue.
    static constexpr double kZeroThreshold = 1e-26;
    static bool is_zero(const Real128& v) { return abs(v) < kZeroThreshold; }
    static double to_double(const Real128& v) { return v.convert_to<double>(); }
    static Real128 from_rational(const Rational& q) {
        return Real128(q.get_num().get_str()) / Real128(q.get_den().get_str());
    }
    static std::string to_string(const Real128& v) { return v.str(36, std::ios_base::scientific); }
    static Real128 parse(const std::string& s) { return Real128(s); }
    static double abs_double(const Real128& v) { return std::abs(to_double(v)); }
};

/// Best rational approximation with denominator <= max_den; nullopt-like
/// behaviour is signalled by returning false when |q - x| > tol.
bool rationalize(double x, Rational& out, long max_den = 1000000, double tol = 1e-12);

}  // namespace dunkl
