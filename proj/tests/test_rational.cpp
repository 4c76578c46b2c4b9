#include <doctest.h>

#include <stdexcept>

#include "dendric/rational.hpp"
#include "helpers.hpp"

using namespace dendric;
using dendric::testing::Rng;

TEST_CASE("big integer arithmetic against native words") {
    Rng rng(0xb16157);
    for (int trial = 0; trial < 500; ++trial) {
        long long a = static_cast<long long>(rng.next() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng.next() % 2000001) - 1000000;
        BigInt x(a), y(b);
        CHECK((x + y).str() == std::to_string(a + b));
        CHECK((x - y).str() == std::to_string(a - b));
        CHECK((x * y).str() == std::to_string(a * b));
        if (b != 0) {
            CHECK((x / y).str() == std::to_string(a / b));
            CHECK((x % y).str() == std::to_string(a % b));
        }
        CHECK((x < y) == (a < b));
    }
}

TEST_CASE("big integer carries across limbs") {
    BigInt big = BigInt::from_string("999999999999999999");
    CHECK((big + BigInt(1)).str() == "1000000000000000000");
    CHECK((big * big).str() == "999999999999999998000000000000000001");
    CHECK((-big).str() == "-999999999999999999");
    CHECK(BigInt::gcd(BigInt::from_string("123456789123456789"), BigInt(987654321)).str() == "9");
    CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
}

TEST_CASE("rationals stay reduced and ordered") {
    Rational a = Rational::parse("6/8");
    CHECK(a.str() == "3/4");
    CHECK(Rational::parse("-4/6").str() == "-2/3");
    CHECK(Rational::parse("5").str() == "5");
    CHECK((a + Rational::parse("1/4")).str() == "1");
    CHECK((a * Rational::parse("4/3")).str() == "1");
    CHECK((a - a).is_zero());
    CHECK(Rational::parse("1/3") < Rational::parse("34/100"));
    CHECK(Rational(BigInt(2), BigInt(-4)).str() == "-1/2");  // sign normalizes into the numerator

    Rng rng(0x5a5a);
    for (int trial = 0; trial < 200; ++trial) {
        long long p = static_cast<long long>(rng.next() % 399) - 199;
        long long q = 1 + static_cast<long long>(rng.next() % 199);
        Rational r{BigInt(p), BigInt(q)};
        CHECK(Rational::parse(r.str()) == r);
        CHECK((r - r).is_zero());
        CHECK((r + r) == r * Rational(2));
        if (p != 0) CHECK((r / r) == Rational(1));
    }
}
