#include "starfact/rational.hpp"

#include <ostream>

namespace starfact {

Integer factorial(long n) {
    if (n < 0) throw domain_error("factorial of negative integer");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

Integer int_pow(const Integer& base, long exponent) {
    if (exponent < 0) throw domain_error("int_pow with negative exponent");
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(exponent));
    return r;
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational", 0);
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (sgn(den) == 0) throw domain_error("zero denominator");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational '" + text + "'", 0);
    }
}

Integer Rational::to_integer() const {
    if (!is_integer())
        throw domain_error("rational " + str() + " is not an integer");
    return value_.get_num();
}

Rational Rational::pow(long exponent) const {
    if (exponent == 0) return Rational(1);
    bool invert = exponent < 0;
    if (invert && is_zero())
        throw domain_error("negative power of zero");
    unsigned long e = static_cast<unsigned long>(invert ? -exponent : exponent);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), e);
    return invert ? Rational(den, num) : Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace starfact
