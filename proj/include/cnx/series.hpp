#pragma once

// Dense truncated formal power series over exact rationals.  Everything here
// is purely formal: no convergence questions, arithmetic never reads past the
// truncation order.  The generating function of the companion sequence,
// F(x) = exp(c*x + x^2/2), is realized through series_exp and checked against
// its defining second-order ODE.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cnx/exact.hpp"

namespace cnx {

class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    Rational& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& q : coeffs_)
            if (q != 0) return false;
        return true;
    }

    // Substitutes -x for x (negates odd coefficients).
    TruncatedSeries reflect() const {
        TruncatedSeries out(*this);
        for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
        return out;
    }

    bool operator==(const TruncatedSeries&) const = default;

  private:
    std::vector<Rational> coeffs_;
};

// Cauchy product, truncated to the common order.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_mul: order mismatch");
    TruncatedSeries out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) {
        Rational sum(0);
        for (std::size_t i = 0; i <= k; ++i) sum += a[i] * b[k - i];
        out[k] = sum;
    }
    return out;
}

// exp(g) for g with zero constant term, via the coefficient recurrence of
// h' = g'*h:  (k+1) h_{k+1} = sum_{i=0..k} (i+1) g_{i+1} h_{k-i}.
inline TruncatedSeries series_exp(const TruncatedSeries& g) {
    if (g[0] != 0) throw std::invalid_argument("series_exp: nonzero constant term");
    TruncatedSeries h(g.order());
    h[0] = 1;
    for (std::size_t k = 0; k + 1 <= g.order(); ++k) {
        Rational sum(0);
        for (std::size_t i = 0; i + 1 <= g.order() && i <= k; ++i)
            sum += Rational(Integer(static_cast<unsigned long>(i + 1))) * g[i + 1] * h[k - i];
        h[k + 1] = sum / Rational(Integer(static_cast<unsigned long>(k + 1)));
    }
    return h;
}

// exp(c*x + x^2/2), truncated.
inline TruncatedSeries egf_series(std::uint64_t c, std::size_t order) {
    if (c == 0) throw std::invalid_argument("egf_series: c must be >= 1");
    TruncatedSeries g(order);
    if (order >= 1) g[1] = Rational(Integer(c));
    if (order >= 2) g[2] = make_rational(1, 2);
    return series_exp(g);
}

// F'' - (c+x)F' - F, truncated to order-2.  F must satisfy the initial
// conditions F(0) = 1, F'(0) = c.
inline TruncatedSeries ode_residual(const TruncatedSeries& F, std::uint64_t c) {
    if (F.order() < 2) throw std::invalid_argument("ode_residual: order must be >= 2");
    if (F[0] != 1) throw std::invalid_argument("ode_residual: F(0) != 1");
    if (F[1] != Rational(Integer(c))) throw std::invalid_argument("ode_residual: F'(0) != c");
    TruncatedSeries r(F.order() - 2);
    const Rational cc{Integer(c)};
    for (std::size_t k = 0; k <= F.order() - 2; ++k) {
        // coeff_k(F'') = (k+1)(k+2) F_{k+2};  coeff_k((c+x)F') = c(k+1)F_{k+1} + k F_k
        Rational second = Rational(Integer(static_cast<unsigned long>((k + 1) * (k + 2)))) * F[k + 2];
        Rational first = cc * Rational(Integer(static_cast<unsigned long>(k + 1))) * F[k + 1] +
                         Rational(Integer(static_cast<unsigned long>(k))) * F[k];
        r[k] = second - first - F[k];
    }
    return r;
}

// a_n = n! * coeff_n; every product must be an integer.
inline std::vector<Integer> coefficients_to_a(const TruncatedSeries& F) {
    std::vector<Integer> a;
    a.reserve(F.order() + 1);
    for (std::size_t n = 0; n <= F.order(); ++n) {
        Rational v = F[n] * Rational(factorial(static_cast<unsigned long>(n)));
        if (!is_integral(v))
            throw std::domain_error("coefficients_to_a: n! * coeff_n is not an integer");
        a.push_back(v.get_num());
    }
    return a;
}

// sum over m+r = 2n of (-1)^r C(2n, m) a_m a_r; equals 2^n (2n-1)!! for the
// companion sequence.
inline Integer alternating_convolution(const std::vector<Integer>& a, unsigned long n) {
    if (n == 0) throw std::invalid_argument("alternating_convolution: n must be >= 1");
    if (a.size() < 2 * n + 1)
        throw std::invalid_argument("alternating_convolution: need indices 0..2n");
    Integer sum = 0;
    for (unsigned long m = 0; m <= 2 * n; ++m) {
        unsigned long r = 2 * n - m;
        Integer term = binomial(2 * n, m) * a[m] * a[r];
        if (r % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace cnx
