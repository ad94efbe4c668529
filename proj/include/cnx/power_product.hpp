#pragma once

// Exact positive reals of the form prod_i base_i^exponent_i with integer
// bases >= 2 and nonzero rational exponents.  This is the value domain for
// every radical bound in the project (sqrt((n-1)!), p^(1/(p-1)), ...).
//
// The three-way comparator is exact.  It first tries to separate the two
// operands with directed-rounding interval arithmetic in log space; whenever
// the enclosures overlap it clears all exponent denominators, raising both
// sides to the lcm L of the denominators, which turns the question into an
// integer comparison (x -> x^L is strictly increasing on positive reals).
// Decimal renderings exist for display only and never decide anything.

#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cnx/exact.hpp"

namespace cnx {

struct PowerFactor {
    Integer base;       // >= 2
    Rational exponent;  // != 0
    bool operator==(const PowerFactor&) const = default;
};

class PowerProduct {
  public:
    PowerProduct() = default;  // empty product, value 1

    static PowerProduct one() { return {}; }

    // base^exponent; base 1 and exponent 0 contribute nothing.
    static PowerProduct integer_power(const Integer& base, const Rational& exponent) {
        if (base <= 0) throw std::invalid_argument("PowerProduct: base must be positive");
        PowerProduct p;
        if (base != 1 && exponent != 0) p.factors_.push_back({base, exponent});
        return p;
    }

    // value^exponent for a positive rational value (numerator and denominator
    // become separate factors).
    static PowerProduct rational_power(const Rational& value, const Rational& exponent) {
        if (value <= 0) throw std::invalid_argument("PowerProduct: value must be positive");
        return integer_power(value.get_num(), exponent) *
               integer_power(value.get_den(), Rational(-exponent));
    }

    const std::vector<PowerFactor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    PowerProduct operator*(const PowerProduct& rhs) const {
        std::map<Integer, Rational> merged;
        for (const auto& f : factors_) merged[f.base] += f.exponent;
        for (const auto& f : rhs.factors_) merged[f.base] += f.exponent;
        PowerProduct out;
        for (const auto& [b, e] : merged)
            if (e != 0) out.factors_.push_back({b, e});
        return out;
    }

    PowerProduct pow(const Rational& e) const {
        PowerProduct out;
        if (e == 0) return out;
        out.factors_ = factors_;
        for (auto& f : out.factors_) f.exponent *= e;
        return out;
    }

    PowerProduct inverse() const { return pow(Rational(-1)); }

    // Exact rational value when every exponent is an integer.
    std::optional<Rational> as_rational() const {
        Integer num = 1, den = 1;
        for (const auto& f : factors_) {
            if (f.exponent.get_den() != 1) return std::nullopt;
            Integer e = f.exponent.get_num();
            if (!e.fits_ulong_p() && !Integer(-e).fits_ulong_p())
                throw std::overflow_error("PowerProduct: exponent too large to expand");
            if (e > 0)
                num *= pow_ui(f.base, e.get_ui());
            else
                den *= pow_ui(f.base, Integer(-e).get_ui());
        }
        return make_rational(num, den);
    }

    bool operator==(const PowerProduct&) const = default;

  private:
    std::vector<PowerFactor> factors_;  // strictly increasing bases, nonzero exponents
};

namespace detail {

class MpfrValue {
  public:
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~MpfrValue() { mpfr_clear(v_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

  private:
    mpfr_t v_;
};

// Adds a directed-rounding enclosure of sign * sum_i e_i * log(b_i) into
// [lo, hi].  Bases are >= 2, so each log is positive and the rounding
// direction of a term depends only on the sign of its exponent.
inline void accumulate_log_enclosure(mpfr_ptr lo, mpfr_ptr hi, const PowerProduct& p, int sign,
                                     mpfr_prec_t prec) {
    MpfrValue log_lo(prec), log_hi(prec), term(prec);
    for (const auto& f : p.factors()) {
        mpfr_set_z(log_lo.get(), f.base.get_mpz_t(), MPFR_RNDD);
        mpfr_log(log_lo.get(), log_lo.get(), MPFR_RNDD);
        mpfr_set_z(log_hi.get(), f.base.get_mpz_t(), MPFR_RNDU);
        mpfr_log(log_hi.get(), log_hi.get(), MPFR_RNDU);

        Rational e = sign > 0 ? f.exponent : Rational(-f.exponent);
        mpfr_srcptr down_src = e > 0 ? log_lo.get() : log_hi.get();
        mpfr_srcptr up_src = e > 0 ? log_hi.get() : log_lo.get();

        mpfr_mul_q(term.get(), down_src, e.get_mpq_t(), MPFR_RNDD);
        mpfr_add(lo, lo, term.get(), MPFR_RNDD);
        mpfr_mul_q(term.get(), up_src, e.get_mpq_t(), MPFR_RNDU);
        mpfr_add(hi, hi, term.get(), MPFR_RNDU);
    }
}

// side^L as an exact positive fraction P/Q, where every exponent times L is
// an integer.
inline std::pair<Integer, Integer> cleared_fraction(const PowerProduct& p, const Integer& L) {
    Integer P = 1, Q = 1;
    for (const auto& f : p.factors()) {
        Integer scale;
        mpz_divexact(scale.get_mpz_t(), L.get_mpz_t(), f.exponent.get_den().get_mpz_t());
        Integer e = f.exponent.get_num() * scale;
        Integer mag = abs(e);
        if (!mag.fits_ulong_p()) throw std::overflow_error("PowerProduct: cleared exponent too large");
        if (e > 0)
            P *= pow_ui(f.base, mag.get_ui());
        else
            Q *= pow_ui(f.base, mag.get_ui());
    }
    return {P, Q};
}

}  // namespace detail

// Exact ordering of the two positive real values.
inline std::strong_ordering compare_power_products(const PowerProduct& lhs, const PowerProduct& rhs) {
    if (lhs == rhs) return std::strong_ordering::equal;

    // Interval prefilter on log(lhs) - log(rhs).
    for (mpfr_prec_t prec : {mpfr_prec_t(128), mpfr_prec_t(384)}) {
        detail::MpfrValue lo(prec), hi(prec);
        mpfr_set_zero(lo.get(), 1);
        mpfr_set_zero(hi.get(), 1);
        detail::accumulate_log_enclosure(lo.get(), hi.get(), lhs, +1, prec);
        detail::accumulate_log_enclosure(lo.get(), hi.get(), rhs, -1, prec);
        if (mpfr_sgn(lo.get()) > 0) return std::strong_ordering::greater;
        if (mpfr_sgn(hi.get()) < 0) return std::strong_ordering::less;
    }

    // Exact fallback: raise both sides to L = lcm of the exponent
    // denominators and cross-multiply the resulting integer fractions.
    Integer L = 1;
    for (const auto& f : lhs.factors()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), f.exponent.get_den().get_mpz_t());
    for (const auto& f : rhs.factors()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), f.exponent.get_den().get_mpz_t());
    auto [pl, ql] = detail::cleared_fraction(lhs, L);
    auto [pr, qr] = detail::cleared_fraction(rhs, L);
    int c = cmp(pl * qr, pr * ql);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Round-to-nearest decimal rendering, default 30 significant digits.
// Display only.
inline std::string decimal_hint(const PowerProduct& p, int significant_digits = 30) {
    if (significant_digits < 2 || significant_digits > 60)
        throw std::invalid_argument("decimal_hint: digits out of range");
    constexpr mpfr_prec_t prec = 256;
    detail::MpfrValue acc(prec), t(prec);
    mpfr_set_zero(acc.get(), 1);
    for (const auto& f : p.factors()) {
        mpfr_set_z(t.get(), f.base.get_mpz_t(), MPFR_RNDN);
        mpfr_log(t.get(), t.get(), MPFR_RNDN);
        mpfr_mul_q(t.get(), t.get(), f.exponent.get_mpq_t(), MPFR_RNDN);
        mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDN);
    }
    mpfr_exp(acc.get(), acc.get(), MPFR_RNDN);
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Re", significant_digits - 1, acc.get());
    return buf;
}

inline std::string to_string(const PowerProduct& p) {
    if (p.is_one()) return "1";
    std::string out;
    for (const auto& f : p.factors()) {
        if (!out.empty()) out += " * ";
        out += f.base.get_str();
        out += "^";
        if (f.exponent.get_den() == 1 && f.exponent > 0)
            out += f.exponent.get_num().get_str();
        else
            out += "(" + fraction_string(f.exponent) + ")";
    }
    return out;
}

}  // namespace cnx
