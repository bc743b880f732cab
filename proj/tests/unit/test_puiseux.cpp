#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace morsify;
using namespace morsify::testing;

namespace {

const auto rats = NumberField::rationals();

PuiseuxPoly random_poly(std::mt19937& rng, const std::shared_ptr<const NumberField>& f) {
    std::uniform_int_distribution<long> num(-8, 8), den(1, 4), nterms(0, 3);
    PuiseuxPoly p = PuiseuxPoly::zero(f);
    long k = nterms(rng);
    Rational e(0);
    for (long i = 0; i < k; ++i) {
        e += Rational(1 + (num(rng) & 3), den(rng));
        p = p + PuiseuxPoly::monomial(f, e, Rational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("valuation") {
    CHECK(poly(rats, {{q(3, 2), q(-4)}}).val() == Valuation(q(3, 2)));
    CHECK(PuiseuxPoly::zero(rats).val().is_infinite());
    CHECK(poly(rats, {{q(2, 3), q(1)}, {q(1), q(-1)}}).val() == Valuation(q(2, 3)));
}

TEST_CASE("initial coefficient") {
    auto p = poly(rats, {{q(3, 2), q(-4)}, {q(2), q(1)}});
    CHECK(p.lc().rational_value() == q(-4));
    CHECK_THROWS_AS(PuiseuxPoly::zero(rats).lc(), zero_series_error);

    auto eis = eisenstein_field();
    auto pt = PuiseuxPoly::monomial(q(2, 3), eis->generator());
    CHECK(pt.lc() == eis->generator());
}

TEST_CASE("the real total order compares initial coefficients of differences") {
    auto a = poly(rats, {{q(1, 2), q(-1)}});
    auto b = poly(rats, {{q(1, 2), q(1)}});
    CHECK(real_less(a, b));
    CHECK(!real_less(b, a));

    CHECK(real_less(poly(rats, {{q(1), q(1)}}), poly(rats, {{q(1), q(1)}, {q(3), q(1)}})));
    CHECK(!real_less(poly(rats, {{q(2), q(1)}}), poly(rats, {{q(2), q(-1)}})));

    CHECK_THROWS_AS(real_less(a, a), equal_series_error);

    auto gauss = gaussian_field();
    auto im = PuiseuxPoly::monomial(q(1), gauss->generator());
    CHECK_THROWS_AS(real_less(PuiseuxPoly::zero(gauss), im), not_rational_error);
}

TEST_CASE("trichotomy and transitivity on random rational polynomials") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 300; ++iter) {
        auto a = random_poly(rng, rats), b = random_poly(rng, rats), c = random_poly(rng, rats);
        if (a != b) CHECK(real_less(a, b) != real_less(b, a));
        if (a != b && b != c && a != c && real_less(a, b) && real_less(b, c))
            CHECK(real_less(a, c));
    }
}

TEST_CASE("ring laws and valuation rules on random polynomials") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 300; ++iter) {
        auto a = random_poly(rng, rats), b = random_poly(rng, rats), c = random_poly(rng, rats);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a + b == b + a);
        CHECK(a - a == PuiseuxPoly::zero(rats));

        CHECK((a * b).val() == a.val() + b.val());
        Valuation lower = a.val() < b.val() ? a.val() : b.val();
        CHECK(!((a + b).val() < lower));
        if (a.val() != b.val()) CHECK((a + b).val() == lower);
    }
}

TEST_CASE("termwise integration") {
    // 3y^2 - 3x -> y^3 - 3xy
    auto f = BivarPoly::from_y_coeffs(
        rats, {poly(rats, {{q(1), q(-3)}}), PuiseuxPoly::zero(rats), PuiseuxPoly::constant(rats, q(3))});
    auto F = f.integrate_y();
    CHECK(F.y_coeff(0).is_zero());
    CHECK(F.y_coeff(1) == poly(rats, {{q(1), q(-3)}}));
    CHECK(F.y_coeff(3) == PuiseuxPoly::constant(rats, q(1)));
    CHECK(F.degree_y() == 3);

    CHECK(BivarPoly::zero(rats).integrate_y().is_zero());
}

TEST_CASE("derivative undoes integration on random bivariate polynomials") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<PuiseuxPoly> coeffs;
        std::uniform_int_distribution<int> deg(0, 4);
        int d = deg(rng);
        for (int k = 0; k <= d; ++k) coeffs.push_back(random_poly(rng, rats));
        auto f = BivarPoly::from_y_coeffs(rats, std::move(coeffs));
        CHECK(deriv_y(f.integrate_y()) == f);
    }
}

TEST_CASE("composition substitutes the series for y") {
    auto F = BivarPoly::from_y_coeffs(rats, {PuiseuxPoly::zero(rats), poly(rats, {{q(1), q(-3)}}),
                                             PuiseuxPoly::zero(rats),
                                             PuiseuxPoly::constant(rats, q(1))});  // y^3 - 3xy
    CHECK(F.compose(poly(rats, {{q(1, 2), q(-1)}})) == poly(rats, {{q(3, 2), q(2)}}));
    CHECK(F.compose(poly(rats, {{q(1, 2), q(1)}})) == poly(rats, {{q(3, 2), q(-2)}}));
    CHECK(F.compose(PuiseuxPoly::zero(rats)) == F.y_coeff(0));
}

TEST_CASE("reconstructing f from its roots") {
    SUBCASE("two real square roots with unit 3") {
        auto [rs, unit] = whitney_cusp();
        auto f = product_from_roots(rs, unit);
        // 3y^2 - 3x
        CHECK(f.degree_y() == 2);
        CHECK(f.y_coeff(2) == PuiseuxPoly::constant(rats, q(3)));
        CHECK(f.y_coeff(1).is_zero());
        CHECK(f.y_coeff(0) == poly(rats, {{q(1), q(-3)}}));
    }

    SUBCASE("a conjugate pair over t^2+t+1 expands to real coefficients") {
        auto eis = eisenstein_field();
        PuiseuxPoly eta = PuiseuxPoly::monomial(q(2, 3), eis->generator());
        RootSystem rs(eis, {PuiseuxPoly::zero(eis)}, {{eta, 1}, {eta.conj(), 1}});
        // y * [(y - eta)(y - conj eta)] = y * [y^2 + x^(2/3) y + x^(4/3)]
        auto f = product_from_roots(rs, BivarPoly::constant(eis, q(1)));
        CHECK(f.degree_y() == 3);
        CHECK(f.y_coeff(2) == poly(eis, {{q(2, 3), q(1)}}));
        CHECK(f.y_coeff(1) == poly(eis, {{q(4, 3), q(1)}}));
        CHECK(f.y_coeff(0).is_zero());
    }

    SUBCASE("single zero root gives y") {
        RootSystem rs(rats, {PuiseuxPoly::zero(rats)}, {});
        auto f = product_from_roots(rs, BivarPoly::constant(rats, q(1)));
        CHECK(f.degree_y() == 1);
        CHECK(f.y_coeff(1) == PuiseuxPoly::constant(rats, q(1)));
        CHECK(f.y_coeff(0).is_zero());
    }

    SUBCASE("vanishing unit is rejected") {
        RootSystem rs(rats, {PuiseuxPoly::zero(rats)}, {});
        auto unit = BivarPoly::from_y_coeffs(rats, {poly(rats, {{q(1), q(1)}})});  // u = x
        CHECK_THROWS_AS(product_from_roots(rs, unit), unit_vanishes_error);
    }

    SUBCASE("irrational unit makes the product non-real") {
        auto gauss = gaussian_field();
        RootSystem rs(gauss, {PuiseuxPoly::zero(gauss)}, {});
        auto unit = BivarPoly::from_y_coeffs(
            gauss, {PuiseuxPoly::monomial(q(0), gauss->generator() + gauss->one())});
        CHECK_THROWS_AS(product_from_roots(rs, unit), non_real_product_error);
    }

    SUBCASE("roots of the reconstructed product satisfy it") {
        RootSystemGenerator gen(41);
        int done = 0;
        while (done < 40) {
            auto problem = gen.problem();
            if (!problem) continue;
            ++done;
            auto f = product_from_roots(problem->roots, problem->unit);
            for (const auto& xi : problem->roots.real_roots())
                CHECK(f.compose(xi).val().is_infinite());
        }
    }
}

TEST_CASE("exact evaluation at compatible points") {
    CHECK(poly(rats, {{q(1, 2), q(1)}}).eval_exact(q(1, 4)) == q(1, 2));
    CHECK(poly(rats, {{q(3, 2), q(-4)}}).eval_exact(q(1, 4)) == q(-1, 2));
    CHECK(poly(rats, {{q(2, 3), q(1)}, {q(1), q(1)}}).eval_exact(q(1, 64)) == q(5, 64));
    CHECK_THROWS_AS(poly(rats, {{q(1, 2), q(1)}}).eval_exact(q(1, 3)), incompatible_point_error);

    auto gauss = gaussian_field();
    CHECK_THROWS_AS(PuiseuxPoly::monomial(q(1), gauss->generator()).eval_exact(q(1, 4)),
                    not_rational_error);
}

TEST_CASE("the nine-term three-cusps product integrates to the stated primitive") {
    auto [rs, unit] = three_cusps(q(2));
    auto F = product_from_roots(rs, unit).integrate_y();
    // 1/8 y^8 present, -1/5 x^2 y^5 present
    CHECK(F.y_coeff(8) == PuiseuxPoly::constant(rs.field(), q(1, 8)));
    CHECK(F.y_coeff(5) == poly(rs.field(), {{q(2), q(-1, 5)}}));
}
