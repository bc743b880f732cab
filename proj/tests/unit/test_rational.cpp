#include <doctest.h>

#include <random>

#include "morsify/rational.hpp"

using namespace morsify;

TEST_CASE("rationals are kept canonical") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).denominator() == 1);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), error);
}

TEST_CASE("rational string round trip") {
    CHECK(Rational::from_string("3/2") == Rational(3, 2));
    CHECK(Rational::from_string("-10/4") == Rational(-5, 2));
    CHECK(Rational::from_string("17") == Rational(17));
    CHECK(Rational(5, 3).to_string() == "5/3");
    CHECK(Rational(-7).to_string() == "-7");
    CHECK(Rational(1).to_string() == "1");
    CHECK_THROWS_AS(Rational::from_string("x"), error);
}

TEST_CASE("rational arithmetic and order") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(Rational(-1, 3) < Rational(1, 4));
    CHECK(Rational(-5).abs() == Rational(5));
    CHECK(Rational(-2, 3).sign() == -1);
    CHECK_THROWS_AS(Rational(1) / Rational(0), error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), error);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(20240801);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    for (int iter = 0; iter < 300; ++iter) {
        Rational a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a - a == Rational(0));
        if (!a.is_zero()) CHECK(a * a.reciprocal() == Rational(1));
    }
}

TEST_CASE("integer powers and exact roots") {
    CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(Rational::pow(Rational(2), -2) == Rational(1, 4));
    CHECK(Rational::pow(Rational(7, 5), 0) == Rational(1));

    CHECK(*Rational::exact_root(Rational(8, 27), 3) == Rational(2, 3));
    CHECK(*Rational::exact_root(Rational(1, 4), 2) == Rational(1, 2));
    CHECK(*Rational::exact_root(Rational(-8), 3) == Rational(-2));
    CHECK(!Rational::exact_root(Rational(2), 2).has_value());
    CHECK(!Rational::exact_root(Rational(-4), 2).has_value());
    CHECK(!Rational::exact_root(Rational(1, 3), 2).has_value());

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 12);
    std::uniform_int_distribution<unsigned long> root(1, 4);
    for (int iter = 0; iter < 200; ++iter) {
        Rational b(num(rng), den(rng));
        unsigned long k = root(rng);
        if (b.sign() < 0 && k % 2 == 0) continue;
        Rational p = Rational::pow(b, static_cast<long>(k));
        CHECK(*Rational::exact_root(p, k) == b);
    }
}

TEST_CASE("valuations order with infinity on top") {
    Valuation inf = Valuation::infinity();
    Valuation a(Rational(3, 2)), b(Rational(2));
    CHECK(a < b);
    CHECK(b < inf);
    CHECK(!(inf < inf));
    CHECK(inf == Valuation::infinity());
    CHECK(a + b == Valuation(Rational(7, 2)));
    CHECK((a + inf).is_infinite());
    CHECK(a.to_string() == "3/2");
    CHECK(inf.to_string() == "inf");
    CHECK_THROWS_AS(inf.finite(), error);
}
