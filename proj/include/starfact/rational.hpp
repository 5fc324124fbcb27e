#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "starfact/errors.hpp"

namespace starfact {

using Integer = mpz_class;

Integer factorial(long n);
Integer binomial(long n, long k);  // 0 outside 0 <= k <= n
Integer int_pow(const Integer& base, long exponent);  // exponent >= 0; 0^0 = 1

// Exact rational number, always normalized: denominator > 0 and
// gcd(|numerator|, denominator) = 1.  GMP does the arithmetic.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long v) : value_(v) {}
    Rational(const Integer& v) : value_(v) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    static Rational parse(const std::string& text);  // "p/q" or "k"

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // Exact integer value; throws domain_error when not an integer.
    Integer to_integer() const;

    // a^e with e possibly negative (then a must be nonzero).
    Rational pow(long exponent) const;

    std::string str() const;  // "p/q", or "p" when the denominator is 1

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws domain_error on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_;  // kept canonical
};

}  // namespace starfact
