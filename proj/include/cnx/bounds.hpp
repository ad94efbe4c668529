#pragma once

// Inequality machinery for the orbit of x_{n+1} = c + n/x_n:
//  - bracketing of x_n between consecutive fixed points, in squared form,
//  - the length-4 window (4(n-1)+c^2, 4n+c^2) that contains no admissible
//    square, checked constructively by integer square-root bracketing,
//  - the companion lower bound a_n^2 >= n!,
//  - the reduced-denominator lower-bound family E/E2/E3/E4 with exact
//    verdicts, step ratios, and a certified crossover search.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cnx/arithmetic.hpp"
#include "cnx/exact.hpp"
#include "cnx/power_product.hpp"

namespace cnx {

enum class BoundVariant { E, E2, E3, E4 };

inline std::string to_string(BoundVariant v) {
    switch (v) {
        case BoundVariant::E: return "E";
        case BoundVariant::E2: return "E2";
        case BoundVariant::E3: return "E3";
        case BoundVariant::E4: return "E4";
    }
    throw std::logic_error("to_string(BoundVariant): bad enum");
}

inline std::optional<BoundVariant> parse_bound_variant(std::string_view s) {
    if (s == "E") return BoundVariant::E;
    if (s == "E2") return BoundVariant::E2;
    if (s == "E3") return BoundVariant::E3;
    if (s == "E4") return BoundVariant::E4;
    return std::nullopt;
}

// Variant selection by the smallest prime factor of c:
//   even c -> E2;  smallest odd factor >= 5 -> E3;  factor 3 squared -> E3;
//   factor 3 once with further odd primes -> E4;  c = 3 -> E;  c = 1 -> E.
inline BoundVariant auto_variant(const OddPrimeSupport& support) {
    const std::uint64_t c = support.c();
    if (c == 1) return BoundVariant::E;
    if (support.two_adic_exponent() > 0) return BoundVariant::E2;
    if (support.odd_primes().front() >= 5) return BoundVariant::E3;
    if (support.three_adic_exponent() >= 2) return BoundVariant::E3;
    if (support.j() > 1) return BoundVariant::E4;
    return BoundVariant::E;  // c == 3
}

// Threshold 2 certifies D_n >= 2 directly (the c = 1 route); threshold 1
// suffices for c >= 2, where the denominator chain is strict.
inline Rational default_threshold(std::uint64_t c) { return c == 1 ? Rational(2) : Rational(1); }

namespace detail {

inline Rational rat_ul(unsigned long v) { return Rational(Integer(v)); }

inline PowerProduct odd_support_product(const OddPrimeSupport& support, long num_scale) {
    // prod_i p_i^(num_scale/(p_i-1))
    PowerProduct p;
    for (std::uint64_t q : support.odd_primes())
        p = p * PowerProduct::integer_power(
                    Integer(static_cast<unsigned long>(q)),
                    make_rational(Integer(num_scale), Integer(static_cast<unsigned long>(q - 1))));
    return p;
}

// E(n) with the factorial supplied by the caller, so scans can maintain
// (n-1)! incrementally.
inline PowerProduct bound_E(const OddPrimeSupport& support, unsigned long n,
                            const Integer& factorial_n_minus_1) {
    PowerProduct v = PowerProduct::integer_power(factorial_n_minus_1, make_rational(1, 2));
    v = v * PowerProduct::integer_power(2, -rat_ul(n - 1));
    v = v * odd_support_product(support, -(static_cast<long>(n) - 2));
    v = v * PowerProduct::integer_power(Integer(static_cast<unsigned long>(2 * n - 3)),
                                        make_rational(-Integer(static_cast<unsigned long>(support.j())), 2));
    return v;
}

}  // namespace detail

// The variant's value at n:
//   E(n)  = sqrt((n-1)!) / (2^(n-1) (prod p^(1/(p-1)))^(n-2) (2n-3)^(j/2))
//   E2(n) = (c/2)^(n/2) / (2n-3)^(j/2)                        (even c)
//   E3(n) = c^(3n/4 - 1/2) / (2^(n-1) (2n-3)^(j/2))
//   E4(n) = c^(3n/5 - 1/5) / (2^(n-1) (2n-3)^(j/2))
inline PowerProduct bound_value(std::uint64_t c, unsigned long n, const OddPrimeSupport& support,
                                BoundVariant variant) {
    if (n < 2) throw std::invalid_argument("bound_value: n must be >= 2");
    const Integer cz(c);
    const Rational j_half = make_rational(Integer(static_cast<unsigned long>(support.j())), 2);
    const Integer w(static_cast<unsigned long>(2 * n - 3));
    switch (variant) {
        case BoundVariant::E:
            return detail::bound_E(support, n, factorial(n - 1));
        case BoundVariant::E2: {
            if (c % 2 != 0) throw std::invalid_argument("bound_value: E2 requires even c");
            PowerProduct v = PowerProduct::rational_power(make_rational(cz, 2),
                                                          make_rational(Integer(static_cast<unsigned long>(n)), 2));
            return v * PowerProduct::integer_power(w, Rational(-j_half));
        }
        case BoundVariant::E3: {
            PowerProduct v = PowerProduct::integer_power(
                cz, make_rational(3 * Integer(static_cast<unsigned long>(n)) - 2, Integer(4)));
            v = v * PowerProduct::integer_power(2, -detail::rat_ul(n - 1));
            return v * PowerProduct::integer_power(w, Rational(-j_half));
        }
        case BoundVariant::E4: {
            PowerProduct v = PowerProduct::integer_power(
                cz, make_rational(3 * Integer(static_cast<unsigned long>(n)) - 1, Integer(5)));
            v = v * PowerProduct::integer_power(2, -detail::rat_ul(n - 1));
            return v * PowerProduct::integer_power(w, Rational(-j_half));
        }
    }
    throw std::logic_error("bound_value: bad variant");
}

// Step ratio bound(n+1)/bound(n).  Every variant factors as
// K * n^s * ((2n-3)/(2n-1))^(j/2) with s = 1/2 for E and s = 0 otherwise;
// both n-dependent factors increase with n, so the ratio is nondecreasing.
inline PowerProduct bound_ratio(std::uint64_t c, unsigned long n, const OddPrimeSupport& support,
                                BoundVariant variant) {
    if (n < 2) throw std::invalid_argument("bound_ratio: n must be >= 2");
    const Integer cz(c);
    const Rational j_half = make_rational(Integer(static_cast<unsigned long>(support.j())), 2);
    PowerProduct window =
        PowerProduct::integer_power(Integer(static_cast<unsigned long>(2 * n - 3)), j_half) *
        PowerProduct::integer_power(Integer(static_cast<unsigned long>(2 * n - 1)), Rational(-j_half));
    switch (variant) {
        case BoundVariant::E: {
            PowerProduct v = PowerProduct::integer_power(Integer(static_cast<unsigned long>(n)),
                                                         make_rational(1, 2));
            v = v * PowerProduct::integer_power(2, Rational(-1));
            v = v * detail::odd_support_product(support, -1);
            return v * window;
        }
        case BoundVariant::E2:
            if (c % 2 != 0) throw std::invalid_argument("bound_ratio: E2 requires even c");
            return PowerProduct::rational_power(make_rational(cz, 2), make_rational(1, 2)) * window;
        case BoundVariant::E3:
            return PowerProduct::integer_power(cz, make_rational(3, 4)) *
                   PowerProduct::integer_power(2, Rational(-1)) * window;
        case BoundVariant::E4:
            return PowerProduct::integer_power(cz, make_rational(3, 5)) *
                   PowerProduct::integer_power(2, Rational(-1)) * window;
    }
    throw std::logic_error("bound_ratio: bad variant");
}

// Published numeric claims about specific bound rows, attached as metadata
// and never used as ground truth.
inline std::optional<std::string> published_bound_claim(std::uint64_t c, BoundVariant variant,
                                                        unsigned long n) {
    if (c == 1 && variant == BoundVariant::E && n == 10)
        return "Eq. (13) claims E(n) >= 2 for all n >= 10";
    if (c == 3 && variant == BoundVariant::E && n == 30)
        return "Eq. (21) claims (E(30))^2 >= 0.423";
    if (c == 3 && variant == BoundVariant::E && n == 31)
        return "Eqs. (19)-(22) conclude E(31) > 1 and D_n > 1 for all n >= 31";
    return std::nullopt;
}

struct BoundRow {
    unsigned long n = 0;
    BoundVariant variant = BoundVariant::E;
    PowerProduct value;
    Rational threshold;
    bool verdict_ge_threshold = false;  // decided exactly, never from decimal_hint
    std::string decimal_hint;
    std::optional<std::string> paper_claim;
};

inline BoundRow denominator_lower_bound(std::uint64_t c, unsigned long n,
                                        const OddPrimeSupport& support,
                                        std::optional<BoundVariant> variant = std::nullopt,
                                        std::optional<Rational> threshold = std::nullopt) {
    const BoundVariant v = variant.value_or(auto_variant(support));
    const Rational thr = threshold.value_or(default_threshold(c));
    if (thr < 1) throw std::invalid_argument("denominator_lower_bound: threshold must be >= 1");
    BoundRow row;
    row.n = n;
    row.variant = v;
    row.value = bound_value(c, n, support, v);
    row.threshold = thr;
    row.verdict_ge_threshold =
        compare_power_products(row.value, PowerProduct::rational_power(thr, Rational(1))) !=
        std::strong_ordering::less;
    row.decimal_hint = decimal_hint(row.value);
    row.paper_claim = published_bound_claim(c, v, n);
    return row;
}

// True iff 4(n-1)+c^2 < (2 x_n - c)^2 < 4n+c^2, as exact rational
// comparisons.  Squaring is order-preserving here because 2 x_n - c > 0 for
// every n >= 1.
inline bool fixed_point_interval_check(std::uint64_t c, unsigned long n, const Rational& x_n) {
    if (n == 0) throw std::invalid_argument("fixed_point_interval_check: n must be >= 1");
    const Integer cz(c);
    Rational t = Rational(2) * x_n - Rational(cz);
    Rational t2 = t * t;
    Integer c2 = cz * cz;
    Rational lower(Integer(4) * Integer(static_cast<unsigned long>(n - 1)) + c2);
    Rational upper(Integer(4) * Integer(static_cast<unsigned long>(n)) + c2);
    return lower < t2 && t2 < upper;
}

struct WindowEvidence {
    unsigned long n = 0;
    std::uint64_t c = 1;
    Integer lower;  // 4(n-1) + c^2
    Integer upper;  // 4n + c^2
    bool excluded = false;
};

// No integer t with the parity of c has t^2 strictly inside
// (4(n-1)+c^2, 4n+c^2).  Checked by square-root bracketing rather than the
// mod-4 congruence argument, so the evidence is constructive.
inline WindowEvidence window_excludes_integer(std::uint64_t c, unsigned long n) {
    if (c == 0 || n == 0) throw std::invalid_argument("window_excludes_integer: c, n must be >= 1");
    WindowEvidence ev;
    ev.n = n;
    ev.c = c;
    const Integer c2 = Integer(c) * Integer(c);
    ev.lower = Integer(4) * Integer(static_cast<unsigned long>(n - 1)) + c2;
    ev.upper = Integer(4) * Integer(static_cast<unsigned long>(n)) + c2;
    ev.excluded = true;
    Integer t = isqrt(ev.upper - 1);  // largest t with t^2 < upper
    while (t > 0 && t * t > ev.lower) {
        const bool t_odd = mpz_odd_p(t.get_mpz_t()) != 0;
        if (t_odd == (c % 2 == 1)) {
            ev.excluded = false;
            break;
        }
        t -= 1;
    }
    return ev;
}

// a_n^2 >= n!, as a pure integer comparison.
inline bool factorial_bound_check(const Integer& a_n, unsigned long n) {
    return a_n * a_n >= factorial(n);
}

// Least n0 >= 2 with bound(n0) >= threshold and a nondecreasing ratio tail,
// so bound(n) >= threshold for every n >= n0.  The tail is certified by the
// exact checks ratio(n0) >= 1 and ratio(n0+1) >= ratio(n0) together with the
// structural monotonicity of the ratio (see bound_ratio): its n-dependent
// factors n^s and (2n-3)/(2n-1) = 1 - 2/(2n-1) both increase, the latter
// because (2n-1)^2 - (2n-3)(2n+1) = 4 independently of n.
inline unsigned long crossover_index(std::uint64_t c, const OddPrimeSupport& support,
                                     const Rational& threshold,
                                     std::optional<BoundVariant> variant = std::nullopt,
                                     unsigned long scan_limit = 1'000'000) {
    if (threshold < 1) throw std::invalid_argument("crossover_index: threshold must be >= 1");
    const BoundVariant v = variant.value_or(auto_variant(support));
    const PowerProduct thr = PowerProduct::rational_power(threshold, Rational(1));
    const PowerProduct unit = PowerProduct::one();
    Integer fact = 1;  // (n-1)! maintained incrementally for variant E
    for (unsigned long n = 2; n <= scan_limit; ++n) {
        if (v == BoundVariant::E) fact *= Integer(static_cast<unsigned long>(n - 1));
        const PowerProduct value = v == BoundVariant::E ? detail::bound_E(support, n, fact)
                                                        : bound_value(c, n, support, v);
        if (compare_power_products(value, thr) == std::strong_ordering::less) continue;
        if (compare_power_products(bound_ratio(c, n, support, v), unit) ==
            std::strong_ordering::less)
            continue;
        if (compare_power_products(bound_ratio(c, n + 1, support, v),
                                   bound_ratio(c, n, support, v)) == std::strong_ordering::less)
            throw std::logic_error("crossover_index: ratio failed to be nondecreasing");
        return n;
    }
    throw std::runtime_error("crossover_index: no crossover found up to scan limit " +
                             std::to_string(scan_limit));
}

}  // namespace cnx
