#include "dunkl/field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

Real128 rational_to_real128(const Rational& q) {
    return Real128(q.get_num().get_str()) / Real128(q.get_den().get_str());
}

}  // namespace

QuadraticNumber::QuadraticNumber(Rational a, Rational b, int radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
    a_.canonicalize();
    b_.canonicalize();
    if (sgn(b_) != 0 && d_ <= 1) {
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
            d_ = 0;
        } else {
            throw std::logic_error("QuadraticNumber: surd part requires radicand >= 2");
        }
    }
    if (sgn(b_) == 0) d_ = 0;
}

int QuadraticNumber::merge_radicand(const QuadraticNumber& o) const {
    if (sgn(b_) == 0) return o.d_;
    if (sgn(o.b_) == 0) return d_;
    if (d_ != o.d_) throw std::logic_error("QuadraticNumber: mixed radicands");
    return d_;
}

int QuadraticNumber::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a + b sqrt(D) with opposite signs: compare a^2 with b^2 D
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * d_;
    int c = cmp(lhs, rhs);
    return c > 0 ? sa : (c < 0 ? sb : 0);
}

double QuadraticNumber::to_double() const { return to_real128().convert_to<double>(); }

Real128 QuadraticNumber::to_real128() const {
    if (sgn(b_) == 0) return rational_to_real128(a_);
    Real128 root = sqrt(Real128(d_));
    if (sgn(a_) * sgn(b_) >= 0) return rational_to_real128(a_) + rational_to_real128(b_) * root;
    // (a^2 - b^2 D) / (a - b sqrt D): the denominator has no cancellation
    Rational num = a_ * a_ - b_ * b_ * d_;
    return rational_to_real128(num) / (rational_to_real128(a_) - rational_to_real128(b_) * root);
}

std::string QuadraticNumber::to_string() const {
    if (sgn(b_) == 0) return a_.get_str();
    std::ostringstream os;
    os << a_.get_str() << "+" << b_.get_str() << "*sqrt(" << d_ << ")";
    return os.str();
}

QuadraticNumber QuadraticNumber::parse(const std::string& s) {
    auto plus = s.find("*sqrt(");
    if (plus == std::string::npos) return QuadraticNumber(Rational(s));
    // format: A+B*sqrt(D); A may itself start with '-'
    auto sep = s.rfind('+', plus);
    if (sep == std::string::npos || sep == 0) throw std::invalid_argument("bad quadratic number: " + s);
    Rational a(s.substr(0, sep));
    Rational b(s.substr(sep + 1, plus - sep - 1));
    auto close = s.find(')', plus);
    int d = std::stoi(s.substr(plus + 6, close - plus - 6));
    return QuadraticNumber(a, b, d);
}

QuadraticNumber QuadraticNumber::operator-() const {
    QuadraticNumber r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
    d_ = merge_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    if (sgn(b_) == 0) d_ = 0;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
    d_ = merge_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    if (sgn(b_) == 0) d_ = 0;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
    int d = merge_radicand(o);
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
        return *this;
    }
    Rational na = a_ * o.a_ + b_ * o.b_ * d;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    d_ = sgn(b_) == 0 ? 0 : d;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
    if (o.is_zero()) throw std::domain_error("QuadraticNumber: division by zero");
    if (sgn(o.b_) == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    // multiply by the conjugate
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
    QuadraticNumber conj(o.a_ / norm, -o.b_ / norm, o.d_);
    return *this *= conj;
}

bool rationalize(double x, Rational& out, long max_den, double tol) {
    if (!std::isfinite(x)) return false;
    // continued-fraction convergents
    long double v = x;
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int it = 0; it < 64; ++it) {
        long double fl = std::floor(v);
        mpz_class a(static_cast<double>(fl));
        mpz_class h2 = a * h1 + h0;
        mpz_class k2 = a * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        Rational q(h1, k1);
        q.canonicalize();
        if (std::abs(q.get_d() - x) <= tol * std::max(1.0, std::abs(x))) {
            out = q;
            return true;
        }
        long double frac = v - fl;
        if (frac < 1e-18L) break;
        v = 1.0L / frac;
    }
    return false;
}

}  // namespace dunkl
