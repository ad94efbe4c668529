#pragma once

// Exact orbit of x_0 = 1, x_{n+1} = c + n/x_n together with the companion
// integer sequence a_0 = 1, a_1 = c, a_{n+2} = c*a_{n+1} + (n+1)*a_n, whose
// consecutive ratios a_n/a_{n-1} reproduce x_n.  Each row stores both views
// plus d_n = gcd(a_n, a_{n-1}) and the reduced denominator D_n = a_{n-1}/d_n.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cnx/exact.hpp"

namespace cnx {

struct SequenceRow {
    Rational x;
    Integer a;
    std::optional<Integer> d;  // gcd(a_n, a_{n-1}); absent at n = 0
    std::optional<Integer> D;  // reduced denominator of x_n; absent at n = 0
};

class SequenceTable {
  public:
    SequenceTable(std::uint64_t c, std::size_t n_max) : c_(c) {
        if (c == 0) throw std::invalid_argument("SequenceTable: c must be >= 1");
        std::vector<Integer> a(n_max + 1);
        a[0] = 1;
        if (n_max >= 1) a[1] = Integer(c);
        for (std::size_t n = 2; n <= n_max; ++n)
            a[n] = Integer(c) * a[n - 1] + Integer(static_cast<unsigned long>(n - 1)) * a[n - 2];

        rows_.reserve(n_max + 1);
        rows_.push_back({Rational(1), a[0], std::nullopt, std::nullopt});
        Rational x(1);
        for (std::size_t n = 1; n <= n_max; ++n) {
            // x_n = c + (n-1)/x_{n-1}; x stays positive, so never divides by 0.
            x = Rational(Integer(c)) + Rational(Integer(static_cast<unsigned long>(n - 1))) / x;
            Integer dn = cnx::gcd(a[n], a[n - 1]);
            Integer Dn;
            mpz_divexact(Dn.get_mpz_t(), a[n - 1].get_mpz_t(), dn.get_mpz_t());
            // The normalized fraction must coincide with (a_n/d_n)/(a_{n-1}/d_n).
            Integer num;
            mpz_divexact(num.get_mpz_t(), a[n].get_mpz_t(), dn.get_mpz_t());
            if (x.get_num() != num || x.get_den() != Dn)
                throw std::logic_error("SequenceTable: orbit and companion sequence disagree");
            rows_.push_back({x, a[n], dn, Dn});
        }
    }

    std::uint64_t c() const { return c_; }
    std::size_t n_max() const { return rows_.size() - 1; }

    const SequenceRow& row(std::size_t n) const {
        if (n >= rows_.size()) throw std::out_of_range("SequenceTable: row index out of range");
        return rows_[n];
    }
    const Rational& x(std::size_t n) const { return row(n).x; }
    const Integer& a(std::size_t n) const { return row(n).a; }
    const Integer& d(std::size_t n) const {
        const auto& v = row(n).d;
        if (!v) throw std::out_of_range("SequenceTable: d undefined at n = 0");
        return *v;
    }
    const Integer& D(std::size_t n) const {
        const auto& v = row(n).D;
        if (!v) throw std::out_of_range("SequenceTable: D undefined at n = 0");
        return *v;
    }

  private:
    std::uint64_t c_;
    std::vector<SequenceRow> rows_;
};

inline SequenceTable build_table(std::uint64_t c, std::size_t n_max) { return SequenceTable(c, n_max); }

// a_n = sum over 2s <= n of c^(n-2s) * C(n, 2s) * (2s-1)!!.
inline Integer a_closed_form(std::uint64_t c, unsigned long n) {
    if (c == 0) throw std::invalid_argument("a_closed_form: c must be >= 1");
    Integer total = 0;
    const Integer base(c);
    for (unsigned long s = 0; 2 * s <= n; ++s)
        total += pow_ui(base, n - 2 * s) * binomial(n, 2 * s) * semifactorial(s);
    return total;
}

// D_n, re-derived from a_{n-1}/d_n and checked against the normalized x_n.
inline Integer reduced_denominator(const SequenceTable& table, std::size_t n) {
    if (n == 0) throw std::out_of_range("reduced_denominator: undefined at n = 0");
    const Integer& dn = table.d(n);
    Integer Dn;
    mpz_divexact(Dn.get_mpz_t(), table.a(n - 1).get_mpz_t(), dn.get_mpz_t());
    if (Dn != table.D(n) || Dn != table.x(n).get_den())
        throw std::logic_error("reduced_denominator: table rows inconsistent");
    return Dn;
}

// x_n^2 - c*x_n; strictly between n-1 and n once the orbit has settled.
inline Rational quadratic_residual(const SequenceTable& table, std::size_t n) {
    if (n < 2) throw std::out_of_range("quadratic_residual: undefined for n < 2");
    const Rational& x = table.x(n);
    return x * x - Rational(Integer(table.c())) * x;
}

}  // namespace cnx
