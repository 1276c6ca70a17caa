#include <doctest.h>

#include "ghm/complex_rational.hpp"
#include "ghm/errors.hpp"
#include "ghm/rational.hpp"

using namespace ghm;

TEST_CASE("rational parse and canonical format") {
    CHECK(Rational::parse("3/6").str() == "1/2");
    CHECK(Rational::parse("-4/2").str() == "-2");
    CHECK(Rational::parse("0/7").str() == "0");
    CHECK(Rational::parse("1/-2").str() == "-1/2");
    CHECK(Rational::parse("+5").str() == "5");
    CHECK(Rational(21, 64) == Rational::parse("21/64"));

    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((-a).str() == "-1/3");
    CHECK(a.pow(3) == Rational(1, 27));
    CHECK(a.pow(-2) == Rational(9));
    CHECK(Rational(-2, 3).abs() == Rational(2, 3));
    CHECK(Rational(0).pow(0) == Rational(1));

    CHECK_THROWS_AS(a / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
    CHECK_THROWS_AS(Rational(0).pow(-1), DomainError);
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5) > Rational(9, 2));
}

TEST_CASE("complex rational parse and format round trip") {
    CHECK(ComplexRational::parse("1/2+1/3i").str() == "1/2+1/3i");
    CHECK(ComplexRational::parse("-1/2-2i").str() == "-1/2-2i");
    CHECK(ComplexRational::parse("3").str() == "3");
    CHECK(ComplexRational::parse("2i") == ComplexRational(Rational(0), Rational(2)));
    CHECK(ComplexRational::parse("-i") == ComplexRational(Rational(0), Rational(-1)));
    CHECK(ComplexRational::parse("0-2i").str() == "0-2i");
    CHECK_THROWS_AS(ComplexRational::parse("1/0+1i"), ParseError);
    CHECK_THROWS_AS(ComplexRational::parse(""), ParseError);
}

TEST_CASE("complex rational field arithmetic") {
    ComplexRational i(Rational(0), Rational(1));
    CHECK(i * i == ComplexRational(Rational(-1)));
    ComplexRational z(Rational(1, 2), Rational(1, 3));
    CHECK(z.conj().conj() == z);
    CHECK((z * z.conj()).re() == z.abs2());
    CHECK((z / z) == ComplexRational(Rational(1)));
    CHECK(z.pow(-1) == z.inverse());
    CHECK(z.pow(3) == z * z * z);
    CHECK_THROWS_AS(ComplexRational().inverse(), DomainError);
}

TEST_CASE("complex abs2 examples") {
    CHECK(ComplexRational().abs2() == Rational(0));
    CHECK(ComplexRational(Rational(3, 4)).abs2() == Rational(9, 16));
    CHECK(ComplexRational(Rational(1), Rational(1)).abs2() == Rational(2));
}
