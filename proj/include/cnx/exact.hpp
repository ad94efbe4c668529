#pragma once

// Arbitrary-precision integers and canonical rationals, backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cnx {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms, denominator positive.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// (2s-1)!! = (2s-1)(2s-3)...3*1, the empty product 1 at s = 0.
inline Integer semifactorial(unsigned long s) {
    if (s == 0) return 1;
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), 2 * s - 1);
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative operand");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// "p/q", or just "p" when the denominator is 1.
inline std::string fraction_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace cnx
