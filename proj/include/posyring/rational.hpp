#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "posyring/errors.hpp"

namespace posyring {

/// Exact rational number. Always stored reduced with a positive denominator;
/// zero is 0/1. Backed by GMP, so numerator and denominator are unbounded.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors int -> Q
    Rational(long num, long den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational inverse() const {
        if (is_zero()) throw domain_error("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    /// Exact power with an integer exponent; negative exponents invert
    /// (the base must be nonzero for those).
    Rational pow(std::int64_t e) const {
        if (e == 0) return Rational(1);
        const Rational base = e < 0 ? inverse() : *this;
        const unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                                      : static_cast<unsigned long>(e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), k);
        Rational r;
        r.v_ = mpq_class(num, den);  // already reduced: gcd(num,den)=1 is preserved by powers
        return r;
    }

    /// Truncating conversion to int64; throws if the value is not an integer
    /// or does not fit.
    std::int64_t to_int64() const {
        if (!is_integer()) throw domain_error("expected an integer value");
        if (!numerator().fits_slong_p()) throw domain_error("integer too large for a machine exponent");
        return numerator().get_si();
    }

    /// "p" or "p/q", reduced.
    std::string str() const {
        if (is_integer()) return numerator().get_str();
        return numerator().get_str() + "/" + denominator().get_str();
    }

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace posyring
