#include <catch2/catch_amalgamated.hpp>

#include "cnx/exact.hpp"

using namespace cnx;

namespace {

// product-loop oracles, independent of the GMP-backed implementations
Integer oracle_factorial(unsigned long n) {
    Integer r = 1;
    for (unsigned long k = 2; k <= n; ++k) r *= Integer(k);
    return r;
}

Integer oracle_semifactorial(unsigned long s) {
    Integer r = 1;
    for (unsigned long k = 1; k <= 2 * s; k += 2) r *= Integer(k);
    return r;
}

}  // namespace

TEST_CASE("make_rational normalizes") {
    CHECK(fraction_string(make_rational(10, 4)) == "5/2");
    CHECK(fraction_string(make_rational(655, 191)) == "655/191");
    CHECK(fraction_string(make_rational(-3, -6)) == "1/2");
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("make_rational scaling invariance") {
    for (long a = -7; a <= 7; ++a)
        for (long b = 1; b <= 7; ++b)
            for (long k : {-3L, -1L, 2L, 5L})
                CHECK(make_rational(Integer(a * k), Integer(b * k)) ==
                      make_rational(Integer(a), Integer(b)));
}

TEST_CASE("factorial matches the product oracle") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(29) == Integer("8841761993739701954543616000000"));
    for (unsigned long n = 0; n <= 40; ++n) {
        CHECK(factorial(n) == oracle_factorial(n));
        CHECK(factorial(n + 1) == Integer(n + 1) * factorial(n));
    }
}

TEST_CASE("semifactorial matches the product oracle") {
    CHECK(semifactorial(0) == 1);
    CHECK(semifactorial(3) == 15);
    CHECK(semifactorial(8) == 2027025);
    for (unsigned long s = 0; s <= 40; ++s) {
        CHECK(semifactorial(s) == oracle_semifactorial(s));
        CHECK(semifactorial(s + 1) == Integer(2 * s + 1) * semifactorial(s));
    }
}

TEST_CASE("gcd") {
    // values taken from a fresh run of the companion recurrence for c = 3
    Integer a2 = 10, a3 = 36, a4 = 138;
    REQUIRE(a3 == Integer(3) * a2 + Integer(2) * Integer(3));
    REQUIRE(a4 == Integer(3) * a3 + Integer(3) * a2);
    CHECK(gcd(a3, a2) == 2);
    CHECK(gcd(a4, a3) == 6);
    CHECK(gcd(Integer(7), Integer(1)) == 1);
    CHECK(gcd(Integer(0), Integer(5)) == 5);
    CHECK_THROWS_AS(gcd(Integer(0), Integer(0)), std::invalid_argument);
}

TEST_CASE("fraction strings") {
    CHECK(fraction_string(Rational(7)) == "7");
    CHECK(fraction_string(make_rational(-10, 4)) == "-5/2");
    CHECK(is_integral(Rational(3)));
    CHECK_FALSE(is_integral(make_rational(1, 2)));
}
