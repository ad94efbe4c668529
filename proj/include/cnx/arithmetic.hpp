#pragma once

// Prime structure of c and of the gcd sequence d_n = gcd(a_n, a_{n-1}):
// trial-division factorization, the congruence a_n = c^n (mod p) at prime
// multiples, the allowed-support test for d_n, exact p-adic valuations of
// semifactorials, and the closed-form upper bound for d_n.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnx/exact.hpp"
#include "cnx/power_product.hpp"

namespace cnx {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

inline constexpr std::uint64_t kDefaultFactorLimit = 1'000'000'000;

// Exact factorization by trial division; c is user input and small here.
inline std::vector<PrimePower> factorize(std::uint64_t v, std::uint64_t limit = kDefaultFactorLimit) {
    if (v == 0) throw std::invalid_argument("factorize: value must be >= 1");
    if (v > limit)
        throw std::runtime_error("factorize: " + std::to_string(v) +
                                 " exceeds the trial-division limit " + std::to_string(limit) +
                                 "; raise the limit to proceed");
    std::vector<PrimePower> out;
    std::uint64_t m = v;
    for (std::uint64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
        if (m % d) continue;
        unsigned e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        out.push_back({d, e});
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; d += (d == 2 ? 1 : 2))
        if (p % d == 0) return false;
    return true;
}

// Distinct odd prime factors p_1 < ... < p_j of c, plus the 2- and 3-adic
// exponents that drive the bound-variant selection.
class OddPrimeSupport {
  public:
    static OddPrimeSupport of(std::uint64_t c, std::uint64_t limit = kDefaultFactorLimit) {
        OddPrimeSupport s;
        s.c_ = c;
        s.factorization_ = factorize(c, limit);
        for (const auto& [p, e] : s.factorization_) {
            if (p == 2) s.two_adic_ = e;
            if (p == 3) s.three_adic_ = e;
            if (p % 2 == 1) s.odd_primes_.push_back(p);
        }
        return s;
    }

    std::uint64_t c() const { return c_; }
    const std::vector<PrimePower>& factorization() const { return factorization_; }
    const std::vector<std::uint64_t>& odd_primes() const { return odd_primes_; }
    std::size_t j() const { return odd_primes_.size(); }
    unsigned two_adic_exponent() const { return two_adic_; }
    unsigned three_adic_exponent() const { return three_adic_; }

  private:
    std::uint64_t c_ = 1;
    std::vector<PrimePower> factorization_;
    std::vector<std::uint64_t> odd_primes_;  // sorted: trial division emits in order
    unsigned two_adic_ = 0;
    unsigned three_adic_ = 0;
};

// a_n = c^n (mod p) whenever the odd prime p divides n.
inline bool companion_congruence_check(std::uint64_t c, std::uint64_t p, unsigned long n,
                                       const Integer& a_n) {
    if (p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("companion_congruence_check: p must be an odd prime");
    if (n == 0 || n % p != 0)
        throw std::invalid_argument("companion_congruence_check: p must divide n");
    Integer mod(static_cast<unsigned long>(p));
    Integer lhs = a_n % mod;
    if (lhs < 0) lhs += mod;
    Integer rhs;
    Integer base(c);
    mpz_powm_ui(rhs.get_mpz_t(), base.get_mpz_t(), n, mod.get_mpz_t());
    return lhs == rhs;
}

// True iff every prime factor of d is 2 or one of the support primes.
inline bool support_check(const Integer& d, const OddPrimeSupport& support) {
    if (d < 1) throw std::invalid_argument("support_check: d must be >= 1");
    Integer m = d;
    while (mpz_even_p(m.get_mpz_t())) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), 2);
    for (std::uint64_t p : support.odd_primes())
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    return m == 1;
}

struct SemifactorialValuation {
    std::uint64_t prime = 0;
    unsigned long n = 0;
    unsigned t = 0;       // largest k with p^k <= 2n-1
    unsigned long m = 0;  // the p-adic valuation of (2n-1)!!
};

// v_p((2n-1)!!) counted level by level: floor(((2n-1) + p^k) / (2 p^k)) is
// the number of odd multiples of p^k in [1, 2n-1].
inline SemifactorialValuation semifactorial_valuation(std::uint64_t p, unsigned long n) {
    if (p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("semifactorial_valuation: p must be an odd prime");
    if (n == 0) throw std::invalid_argument("semifactorial_valuation: n must be >= 1");
    SemifactorialValuation out{p, n, 0, 0};
    const Integer N(static_cast<unsigned long>(2 * n - 1));
    Integer pk(static_cast<unsigned long>(p));
    while (pk <= N) {
        Integer count = (N + pk) / (2 * pk);  // floor; operands positive
        out.m += count.get_ui();
        ++out.t;
        pk *= Integer(static_cast<unsigned long>(p));
    }
    return out;
}

// Upper bound for d_n:  2^(n-1) * (prod_i p_i^(1/(p_i-1)))^(n-2) * (2n-3)^(j/2).
inline PowerProduct gcd_upper_bound(std::uint64_t c, unsigned long n, const OddPrimeSupport& support) {
    if (n < 2) throw std::invalid_argument("gcd_upper_bound: n must be >= 2");
    PowerProduct b = PowerProduct::integer_power(2, Rational(Integer(static_cast<unsigned long>(n - 1))));
    for (std::uint64_t p : support.odd_primes())
        b = b * PowerProduct::integer_power(
                    Integer(static_cast<unsigned long>(p)),
                    make_rational(Integer(static_cast<unsigned long>(n - 2)),
                                  Integer(static_cast<unsigned long>(p - 1))));
    b = b * PowerProduct::integer_power(
                Integer(static_cast<unsigned long>(2 * n - 3)),
                make_rational(Integer(static_cast<unsigned long>(support.j())), 2));
    return b;
}

}  // namespace cnx
