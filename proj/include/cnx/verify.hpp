#pragma once

// Umbrella invariant runner behind the `verify` command: every structural
// property of the orbit, the companion sequence, the generating function,
// the prime structure, and the bound family, swept over a c range and a row
// budget.  Failures are results, not errors; the caller turns them into an
// exit status.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cnx/bounds.hpp"
#include "cnx/certify.hpp"
#include "cnx/exact.hpp"
#include "cnx/sequence.hpp"
#include "cnx/series.hpp"

namespace cnx {

struct InvariantResult {
    std::string name;
    unsigned long checked = 0;
    unsigned long failed = 0;
    std::vector<std::string> samples;  // first few failure descriptions

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            ++failed;
            if (samples.size() < 5) samples.push_back(what);
        }
    }
};

struct VerifySummary {
    std::vector<InvariantResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (r.failed) return false;
        return true;
    }
    unsigned long total_checked() const {
        unsigned long t = 0;
        for (const auto& r : results) t += r.checked;
        return t;
    }
    unsigned long total_failed() const {
        unsigned long t = 0;
        for (const auto& r : results) t += r.failed;
        return t;
    }
};

namespace detail {

inline std::string at(std::uint64_t c, unsigned long n) {
    return "c=" + std::to_string(c) + " n=" + std::to_string(n);
}

}  // namespace detail

inline VerifySummary verify_suite(std::uint64_t c_from, std::uint64_t c_to, std::size_t n_max) {
    if (c_from == 0 || c_from > c_to) throw std::invalid_argument("verify_suite: bad c range");

    InvariantResult rational_normalization{"rational-normalization"};
    InvariantResult factorial_recurrences{"factorial-recurrences"};
    InvariantResult triangle{"companion-triangle"};        // recurrence = closed form = n!*coeff
    InvariantResult fraction_identity{"orbit-fraction-identity"};
    InvariantResult divisibility_chain{"gcd-divisibility-chain"};
    InvariantResult quadratic_window{"quadratic-window"};
    InvariantResult monotone_growth{"companion-growth"};
    InvariantResult factorial_bound{"factorial-lower-bound"};
    InvariantResult ode_zero{"egf-ode-residual"};
    InvariantResult product_identity{"egf-product-identity"};
    InvariantResult alt_convolution{"alternating-convolution"};
    InvariantResult congruence{"companion-congruence"};
    InvariantResult gcd_support{"gcd-support"};
    InvariantResult valuation_exact{"semifactorial-valuation"};
    InvariantResult gcd_bound{"gcd-upper-bound"};
    InvariantResult denominator_chain{"denominator-chain"};
    InvariantResult window_exclusion{"window-exclusion"};
    InvariantResult interval_containment{"interval-containment"};
    InvariantResult crossover_soundness{"crossover-soundness"};
    InvariantResult anchors{"reference-orbit-anchors"};
    InvariantResult certificate{"certificate-consistency"};

    // c-independent checks.
    for (long a = -6; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b)
            for (long k = -5; k <= 5; ++k) {
                if (k == 0 || a == 0) continue;
                rational_normalization.expect(
                    make_rational(Integer(a * k), Integer(b * k)) == make_rational(Integer(a), Integer(b)),
                    "scaling a=" + std::to_string(a) + " b=" + std::to_string(b) +
                        " k=" + std::to_string(k));
            }
    for (unsigned long n = 0; n < std::min<std::size_t>(n_max, 300); ++n) {
        factorial_recurrences.expect(
            factorial(n + 1) == Integer(n + 1) * factorial(n), "factorial step n=" + std::to_string(n));
        factorial_recurrences.expect(
            semifactorial(n + 1) == Integer(2 * n + 1) * semifactorial(n),
            "semifactorial step s=" + std::to_string(n));
    }
    for (std::uint64_t p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul, 43ul, 47ul}) {
        for (unsigned long n = 1; n <= std::min<std::size_t>(n_max, 200); ++n) {
            const auto val = semifactorial_valuation(p, n);
            Integer sf = semifactorial(n);
            unsigned long direct = 0;
            while (mpz_divisible_ui_p(sf.get_mpz_t(), p)) {
                mpz_divexact_ui(sf.get_mpz_t(), sf.get_mpz_t(), p);
                ++direct;
            }
            valuation_exact.expect(val.m == direct,
                                   "p=" + std::to_string(p) + " n=" + std::to_string(n));
        }
    }

    std::mt19937_64 rng(0x5eed);

    for (std::uint64_t c = c_from; c <= c_to; ++c) {
        const SequenceTable table = build_table(c, n_max);
        const OddPrimeSupport support = OddPrimeSupport::of(c);
        const BoundVariant variant = auto_variant(support);
        const TruncatedSeries F = egf_series(c, n_max);
        const std::vector<Integer> a_from_series = coefficients_to_a(F);

        for (unsigned long n = 0; n <= n_max; ++n) {
            triangle.expect(table.a(n) == a_closed_form(c, n), "closed form " + detail::at(c, n));
            triangle.expect(table.a(n) == a_from_series[n], "egf coefficient " + detail::at(c, n));
            factorial_bound.expect(factorial_bound_check(table.a(n), n),
                                   "a_n^2 >= n! " + detail::at(c, n));
            if (n >= 1) {
                fraction_identity.expect(reduced_denominator(table, n) == table.x(n).get_den(),
                                         "normalized denominator " + detail::at(c, n));
                if (c >= 2 && n < n_max)
                    monotone_growth.expect(table.a(n + 1) > table.a(n), "growth " + detail::at(c, n));
            }
            if (n >= 1 && n < n_max) {
                Integer q;
                mpz_mod(q.get_mpz_t(), table.d(n + 1).get_mpz_t(), table.d(n).get_mpz_t());
                divisibility_chain.expect(q == 0, "d_n | d_{n+1} " + detail::at(c, n));
            }
            const unsigned long quad_start = c == 1 ? 4 : 2;  // x_2 = x_3 = 2 when c = 1
            if (n >= quad_start) {
                const Rational q = quadratic_residual(table, n);
                quadratic_window.expect(Rational(Integer(n - 1)) < q && q < Rational(Integer(n)),
                                        "quadratic window " + detail::at(c, n));
            }
        }

        if (n_max >= 2) {
            ode_zero.expect(ode_residual(F, c).is_zero(), "ode residual c=" + std::to_string(c));
            product_identity.expect(
                [&] {
                    const TruncatedSeries prod = series_mul(F, F.reflect());
                    for (std::size_t k = 0; k <= prod.order(); ++k) {
                        const Rational want = k % 2 == 1 ? Rational(0)
                                                          : Rational(1) / Rational(factorial(k / 2));
                        if (prod[k] != want) return false;
                    }
                    return true;
                }(),
                "F(x)F(-x) = exp(x^2) c=" + std::to_string(c));
        }
        std::vector<Integer> a_list;
        for (unsigned long n = 0; n <= n_max; ++n) a_list.push_back(table.a(n));
        for (unsigned long n = 1; n <= std::min<std::size_t>(n_max / 2, 50); ++n)
            alt_convolution.expect(alternating_convolution(a_list, n) ==
                                       pow_ui(2, n) * semifactorial(n),
                                   "2^n (2n-1)!! " + detail::at(c, n));

        for (std::uint64_t p = 3; p <= 97; p += 2) {
            if (!is_prime(p)) continue;
            for (unsigned long n = p; n <= std::min<std::size_t>(n_max, 500); n += p)
                congruence.expect(companion_congruence_check(c, p, n, table.a(n)),
                                  "a_n = c^n mod " + std::to_string(p) + " " + detail::at(c, n));
        }
        for (unsigned long n = 1; n <= std::min<std::size_t>(n_max, 300); ++n)
            gcd_support.expect(support_check(table.d(n), support), "support of d " + detail::at(c, n));

        for (unsigned long n = 2; n <= std::min<std::size_t>(n_max, 200); ++n) {
            gcd_bound.expect(compare_power_products(
                                 PowerProduct::integer_power(table.d(n), Rational(1)),
                                 gcd_upper_bound(c, n, support)) != std::strong_ordering::greater,
                             "d_n bound " + detail::at(c, n));
            const PowerProduct Dn = PowerProduct::integer_power(table.D(n), Rational(1));
            denominator_chain.expect(table.D(n) * table.d(n) == table.a(n - 1) &&
                                         compare_power_products(Dn, bound_value(c, n, support, variant)) !=
                                             std::strong_ordering::less,
                                     "D_n >= bound " + detail::at(c, n));
        }

        for (unsigned long n = 1; n <= std::max<std::size_t>(n_max, 10'000); ++n)
            window_exclusion.expect(window_excludes_integer(c, n).excluded,
                                    "window " + detail::at(c, n));

        unsigned long first_true = 0;
        for (unsigned long n = 1; n <= n_max; ++n)
            if (fixed_point_interval_check(c, n, table.x(n))) {
                first_true = n;
                break;
            }
        interval_containment.expect(first_true == (c == 1 ? 4ul : 2ul),
                                    "first containment index c=" + std::to_string(c) + " got " +
                                        std::to_string(first_true));
        if (first_true > 0)
            for (unsigned long n = std::max(first_true, 4ul); n <= n_max; ++n)
                interval_containment.expect(fixed_point_interval_check(c, n, table.x(n)),
                                            "containment " + detail::at(c, n));

        {
            const Rational threshold = default_threshold(c);
            const unsigned long cross = crossover_index(c, support, threshold, variant);
            const PowerProduct thr = PowerProduct::rational_power(threshold, Rational(1));
            std::uniform_int_distribution<unsigned long> pick(cross, 10 * cross);
            for (int k = 0; k < 20; ++k) {
                const unsigned long n = pick(rng);
                crossover_soundness.expect(
                    compare_power_products(bound_value(c, n, support, variant), thr) !=
                        std::strong_ordering::less,
                    "bound >= threshold " + detail::at(c, n));
                crossover_soundness.expect(
                    compare_power_products(bound_ratio(c, n, support, variant), PowerProduct::one()) !=
                        std::strong_ordering::less,
                    "ratio >= 1 " + detail::at(c, n));
            }
        }

        if (c == 1 && n_max >= 9) {
            const char* want[] = {"1", "1", "2", "2", "5/2", "13/5", "38/13", "58/19", "191/58", "655/191"};
            for (unsigned long n = 0; n <= 9; ++n)
                anchors.expect(fraction_string(table.x(n)) == want[n], "orbit value " + detail::at(c, n));
        }
        if (c == 3 && n_max >= 15)
            anchors.expect(table.a(15) == Integer("4685949792"), "companion anchor c=3 n=15");

        {
            const IntegralityReport rep = certify(c);
            const IntegralityReport rep2 = certify(c);
            certificate.expect(report_json_string(rep) == report_json_string(rep2),
                               "byte-identical certificate c=" + std::to_string(c));
            const SequenceTable t2 = build_table(c, rep.horizon_checked);
            for (unsigned long n = 1; n <= rep.horizon_checked; ++n) {
                const bool divisible = mpz_divisible_p(t2.a(n).get_mpz_t(), t2.a(n - 1).get_mpz_t()) != 0;
                certificate.expect(rep.evidence[n].is_integer == divisible,
                                   "integer flag vs divisibility " + detail::at(c, n));
            }
            for (unsigned long n = 2; n < rep.crossover && n <= rep.horizon_checked; ++n) {
                const EvidenceItem& e = rep.evidence[n];
                if (!e.is_integer)
                    certificate.expect(e.window_excluded.value_or(false) &&
                                           (e.interval_ok.value_or(false) ||
                                            e.quadratic_in_window.value_or(false)),
                                       "evidence justifies non-integrality " + detail::at(c, n));
            }
        }
    }

    VerifySummary summary;
    summary.results = {rational_normalization,
                       factorial_recurrences,
                       triangle,
                       fraction_identity,
                       divisibility_chain,
                       quadratic_window,
                       monotone_growth,
                       factorial_bound,
                       ode_zero,
                       product_identity,
                       alt_convolution,
                       congruence,
                       gcd_support,
                       valuation_exact,
                       gcd_bound,
                       denominator_chain,
                       window_exclusion,
                       interval_containment,
                       crossover_soundness,
                       anchors,
                       certificate};
    return summary;
}

}  // namespace cnx
