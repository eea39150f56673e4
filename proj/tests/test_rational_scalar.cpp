#include "tscalc/errors.hpp"
#include "tscalc/rational.hpp"
#include "tscalc/scalar.hpp"

#include <doctest.h>

#include <random>

using namespace tscalc;

TEST_CASE("parse_rational accepts p/q, integers, and decimals") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-7/3") == Rational(-7, 3));
    CHECK(parse_rational("20") == Rational(20));
    CHECK(parse_rational("+4") == Rational(4));
    CHECK(parse_rational("-1.25") == Rational(-5, 4));
    CHECK(parse_rational("0.5") == Rational(1, 2));
    CHECK(parse_rational("3e-2") == Rational(3, 100));
    CHECK(parse_rational("1.5e3") == Rational(1500));
    CHECK(parse_rational(" 2/4 ") == Rational(1, 2));
}

TEST_CASE("parse_rational rejects junk") {
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1.2.3"), Error);
}

TEST_CASE("format/parse round-trip is lossless") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 99999);
    for (int i = 0; i < 500; ++i) {
        const Rational q(num(rng), den(rng));
        CHECK(parse_rational(format_rational(q)) == q);
    }
    CHECK(format_rational(Rational(20)) == "20");
    CHECK(format_rational(Rational(1, 2)) == "1/2");
    CHECK(format_rational(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("rat_ipow handles negative exponents") {
    CHECK(rat_ipow(Rational(2), 10) == Rational(1024));
    CHECK(rat_ipow(Rational(2), -3) == Rational(1, 8));
    CHECK(rat_ipow(Rational(3, 2), 2) == Rational(9, 4));
    CHECK(rat_ipow(Rational(5), 0) == Rational(1));
    CHECK_THROWS_AS(rat_ipow(Rational(0), -1), SingularityError);
}

TEST_CASE("rat_floor and rat_ceil") {
    CHECK(rat_floor(Rational(7, 2)) == 3);
    CHECK(rat_ceil(Rational(7, 2)) == 4);
    CHECK(rat_floor(Rational(-7, 2)) == -4);
    CHECK(rat_ceil(Rational(-7, 2)) == -3);
    CHECK(rat_floor(Rational(6)) == 6);
    CHECK(rat_ceil(Rational(6)) == 6);
}

TEST_CASE("scalar arithmetic is exact for rational operands") {
    const Scalar a{Rational(1, 2)};
    const Scalar b{Rational(1, 3)};
    CHECK((a + b).rational() == Rational(5, 6));
    CHECK((a * b).rational() == Rational(1, 6));
    CHECK((a / b).rational() == Rational(3, 2));
    CHECK((a - b).exact());
}

TEST_CASE("scalar complex arithmetic stays exact") {
    const Scalar i = Scalar::imaginary_unit();
    const Scalar one_plus_i{Rational(1), Rational(1)};
    const Scalar square = one_plus_i * one_plus_i;
    CHECK(square == Scalar(Rational(0), Rational(2)));
    CHECK((square / (i * Scalar(2))).rational() == Rational(1));
    // (1+i)/(1-i) = i
    CHECK(one_plus_i / one_plus_i.conj() == i);
}

TEST_CASE("exactness is contagious") {
    const Scalar exact{Rational(1, 4)};
    const Scalar rough = Scalar::approx(0.25);
    CHECK((exact + exact).exact());
    CHECK_FALSE((exact + rough).exact());
    CHECK((exact + rough).to_double() == doctest::Approx(0.5));
}

TEST_CASE("scalar division by zero throws") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), SingularityError);
    CHECK_THROWS_AS(Scalar(1) / Scalar::approx(0.0), SingularityError);
}

TEST_CASE("scalar_ipow") {
    CHECK(scalar_ipow(Scalar(Rational(1), Rational(1)), 2) == Scalar(Rational(0), Rational(2)));
    CHECK(scalar_ipow(Scalar(2), -2).rational() == Rational(1, 4));
}
