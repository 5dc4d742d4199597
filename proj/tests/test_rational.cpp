#include "nbihom/rational.hpp"
#include "nbihom/errors.hpp"

#include <doctest.h>

#include <cstdint>
#include <random>

using nbihom::ParseError;
using nbihom::Rational;

TEST_CASE("rational parsing and normalization") {
    CHECK(Rational::parse("3/4").str() == "3/4");
    CHECK(Rational::parse("6/8").str() == "3/4");
    CHECK(Rational::parse("-6/8").str() == "-3/4");
    CHECK(Rational::parse("0/5").str() == "0");
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK(Rational::parse("12/-8").str() == "-3/2");
    CHECK(Rational::parse("007").str() == "7");
    CHECK(Rational::parse("123456789012345678901234567890").str() ==
          "123456789012345678901234567890");

    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1 / 2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("2/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("+5"), ParseError);
}

TEST_CASE("rational str round-trips") {
    const char* cases[] = {"0", "1", "-1", "22/7", "-355/113", "1000000007"};
    for (const char* c : cases) CHECK(Rational::parse(c).str() == c);
}

TEST_CASE("rational arithmetic is exact") {
    const Rational third(1, 3), sixth(1, 6);
    CHECK((third + sixth).str() == "1/2");
    CHECK((third - sixth).str() == "1/6");
    CHECK((third * sixth).str() == "1/18");
    CHECK((third / sixth).str() == "2");
    CHECK((-third).str() == "-1/3");

    Rational acc(0);
    for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
    CHECK(acc == Rational(1));
    CHECK(acc.is_one());
}

TEST_CASE("rational arithmetic agrees with 128-bit cross multiplication") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
    for (int iter = 0; iter < 500; ++iter) {
        const std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const Rational x(a, b), y(c, d);

        auto eq = [](const Rational& r, __int128 n, __int128 m) {
            if (m < 0) {
                n = -n;
                m = -m;
            }
            // compare r = p/q with n/m by cross multiplication
            const __int128 p = static_cast<std::int64_t>(r.raw().get_num().get_si());
            const __int128 q = static_cast<std::int64_t>(r.raw().get_den().get_si());
            return p * m == n * q;
        };

        CHECK(eq(x + y, static_cast<__int128>(a) * d + static_cast<__int128>(c) * b,
                 static_cast<__int128>(b) * d));
        CHECK(eq(x * y, static_cast<__int128>(a) * c, static_cast<__int128>(b) * d));
        if (c != 0)
            CHECK(eq(x / y, static_cast<__int128>(a) * d, static_cast<__int128>(b) * c));
        CHECK((x < y) == (static_cast<__int128>(a) * d < static_cast<__int128>(c) * b));
    }
}

TEST_CASE("rational pow") {
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), 0) == Rational(1));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(0), 5) == Rational(0));
    CHECK_THROWS(pow(Rational(0), -1));
}

TEST_CASE("rational predicates") {
    CHECK(Rational(0).is_zero());
    CHECK(Rational(1).is_one());
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(3, 7).sign() == 1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) != Rational(1, 3));
}
