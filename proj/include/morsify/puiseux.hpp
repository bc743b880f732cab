#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "morsify/number_field.hpp"

namespace morsify {

// A finite sum of terms c * x^e with non-negative rational exponents and
// coefficients in a number field. Terms are kept sorted by exponent and
// never store a zero coefficient. Immutable value type.
class PuiseuxPoly {
public:
    explicit PuiseuxPoly(std::shared_ptr<const NumberField> field) : field_(std::move(field)) {}

    static PuiseuxPoly zero(std::shared_ptr<const NumberField> field);
    static PuiseuxPoly monomial(Rational exponent, FieldElement coeff);
    static PuiseuxPoly monomial(std::shared_ptr<const NumberField> field, Rational exponent,
                                Rational coeff);
    static PuiseuxPoly constant(std::shared_ptr<const NumberField> field, Rational value);

    const std::shared_ptr<const NumberField>& field() const { return field_; }
    const std::map<Rational, FieldElement>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const PuiseuxPoly& o) const;
    bool operator!=(const PuiseuxPoly& o) const { return !(*this == o); }

    // Smallest exponent; infinity for the zero polynomial.
    Valuation val() const;
    // Coefficient of the valuation term; throws zero_series_error on 0.
    FieldElement lc() const;

    PuiseuxPoly operator-() const;
    PuiseuxPoly operator+(const PuiseuxPoly& o) const;
    PuiseuxPoly operator-(const PuiseuxPoly& o) const;
    PuiseuxPoly operator*(const PuiseuxPoly& o) const;
    PuiseuxPoly operator*(const FieldElement& c) const;
    PuiseuxPoly operator*(const Rational& c) const;
    PuiseuxPoly pow(unsigned e) const;

    bool has_rational_coeffs() const;
    // Coefficient-wise conjugation.
    PuiseuxPoly conj() const;

    // Exact value at x0 > 0. Every x0^e must be rational; the caller
    // normally arranges this by picking x0 = r^D with D a common multiple
    // of the exponent denominators. Throws incompatible_point_error
    // otherwise, and not_rational_error on non-rational coefficients.
    Rational eval_exact(const Rational& x0) const;

    // lcm of the denominators of all exponents (1 for the zero polynomial).
    mpz_class exponent_denominator_lcm() const;

    std::string to_string() const;

private:
    void insert_term(const Rational& exponent, const FieldElement& coeff);

    std::shared_ptr<const NumberField> field_;
    std::map<Rational, FieldElement> terms_;
};

inline PuiseuxPoly operator*(const Rational& c, const PuiseuxPoly& p) { return p * c; }

// Strict real total order: a < b iff lc(b - a) > 0. Throws
// equal_series_error on a = b and not_rational_error when the deciding
// coefficient is not rational.
bool real_less(const PuiseuxPoly& a, const PuiseuxPoly& b);

// x0^(p/q), exact; throws incompatible_point_error when x0 has no exact
// q-th root.
Rational pow_rational(const Rational& x0, const Rational& exponent);

}  // namespace morsify
