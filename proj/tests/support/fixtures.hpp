#pragma once

// Shared example data and small builders for the test suites.

#include <initializer_list>
#include <utility>

#include "morsify/input.hpp"
#include "morsify/morse.hpp"

namespace morsify::testing {

inline Rational q(long n, long d = 1) { return Rational(n, d); }

// Puiseux polynomial with rational coefficients from (exponent, coeff)
// pairs.
inline PuiseuxPoly poly(const std::shared_ptr<const NumberField>& field,
                        std::initializer_list<std::pair<Rational, Rational>> terms) {
    PuiseuxPoly p = PuiseuxPoly::zero(field);
    for (const auto& [e, c] : terms) p = p + PuiseuxPoly::monomial(field, e, c);
    return p;
}

inline std::shared_ptr<const NumberField> gaussian_field() {
    // Q[t]/(t^2+1), conj t -> -t
    return NumberField::make({q(1), q(0), q(1)}, {q(0), q(-1)});
}

inline std::shared_ptr<const NumberField> eisenstein_field() {
    // Q[t]/(t^2+t+1), conj t -> -1-t
    return NumberField::make({q(1), q(1), q(1)}, {q(-1), q(-1)});
}

struct Problem {
    RootSystem roots;
    BivarPoly unit;
};

// f = 3(y^2 - x): roots -x^(1/2), x^(1/2); unit 3.
inline Problem whitney_cusp() {
    auto f = NumberField::rationals();
    std::vector<PuiseuxPoly> roots{poly(f, {{q(1, 2), q(-1)}}), poly(f, {{q(1, 2), q(1)}})};
    return {RootSystem(f, std::move(roots), {}), BivarPoly::constant(f, q(3))};
}

// f = (y+x)(y+x^2) y (y-x^2)(y-x-cx^2): five real roots, unit 1.
inline Problem five_roots_symmetric(const Rational& c) {
    auto f = NumberField::rationals();
    std::vector<PuiseuxPoly> roots{
        poly(f, {{q(1), q(-1)}}),
        poly(f, {{q(2), q(-1)}}),
        PuiseuxPoly::zero(f),
        poly(f, {{q(2), q(1)}}),
        poly(f, {{q(1), q(1)}, {q(2), c}}),
    };
    return {RootSystem(f, std::move(roots), {}), BivarPoly::constant(f, q(1))};
}

// f = (y^2-x^3)(y^2-c^2 x^3)(y^3-x^2): five real roots and the conjugate
// pair rho x^(2/3), rho^2 x^(2/3) over Q[t]/(t^2+t+1); unit 1.
inline Problem three_cusps(const Rational& c) {
    auto f = eisenstein_field();
    std::vector<PuiseuxPoly> real{
        poly(f, {{q(3, 2), -c}}),  poly(f, {{q(3, 2), q(-1)}}), poly(f, {{q(3, 2), q(1)}}),
        poly(f, {{q(3, 2), c}}),   poly(f, {{q(2, 3), q(1)}}),
    };
    PuiseuxPoly eta = PuiseuxPoly::monomial(q(2, 3), f->generator());
    PuiseuxPoly eta_bar = eta.conj();
    std::vector<RootSystem::ComplexRoot> cplx{{eta, 1}, {eta_bar, 1}};
    return {RootSystem(f, std::move(real), std::move(cplx)), BivarPoly::constant(f, q(1))};
}

// Test-only derivative in y, the inverse of integrate_y up to the
// constant term.
inline BivarPoly deriv_y(const BivarPoly& p) {
    std::vector<PuiseuxPoly> coeffs;
    for (int qd = 1; qd <= p.degree_y(); ++qd)
        coeffs.push_back(p.y_coeff(qd) * Rational(qd));
    return BivarPoly::from_y_coeffs(p.field(), std::move(coeffs));
}

}  // namespace morsify::testing
