#pragma once

#include "morsify/puiseux.hpp"

namespace morsify {

// A polynomial in y whose coefficients are Puiseux polynomials in x.
// Houses both the product form f(x,y) and its primitive F_x(y). The
// coefficient vector is trimmed: the leading y-coefficient of a non-zero
// polynomial is non-zero. Immutable value type.
class BivarPoly {
public:
    explicit BivarPoly(std::shared_ptr<const NumberField> field) : field_(std::move(field)) {}

    static BivarPoly zero(std::shared_ptr<const NumberField> field);
    static BivarPoly constant(std::shared_ptr<const NumberField> field, Rational value);
    static BivarPoly from_y_coeffs(std::shared_ptr<const NumberField> field,
                                   std::vector<PuiseuxPoly> y_coeffs);
    // y - gamma
    static BivarPoly linear_factor(const PuiseuxPoly& gamma);

    const std::shared_ptr<const NumberField>& field() const { return field_; }
    const std::vector<PuiseuxPoly>& y_coeffs() const { return y_coeffs_; }
    int degree_y() const { return static_cast<int>(y_coeffs_.size()) - 1; }
    // Zero polynomial for q out of range.
    PuiseuxPoly y_coeff(int q) const;

    bool is_zero() const { return y_coeffs_.empty(); }
    bool operator==(const BivarPoly& o) const;
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

    BivarPoly operator-() const;
    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly operator*(const PuiseuxPoly& c) const;
    BivarPoly operator*(const Rational& c) const;
    BivarPoly pow(unsigned e) const;

    // Termwise integration in y with zero constant of integration:
    // c x^p y^q  ->  c x^p y^(q+1) / (q+1).
    BivarPoly integrate_y() const;

    // Exact substitution y := xi, fully expanded.
    PuiseuxPoly compose(const PuiseuxPoly& xi) const;

    // Value at (0, 0), i.e. the exponent-0 part of the y^0 coefficient.
    FieldElement value_at_origin() const;

    bool has_rational_coeffs() const;
    // Exact value at (x0, y0); same compatibility rules as
    // PuiseuxPoly::eval_exact.
    Rational eval_exact(const Rational& x0, const Rational& y0) const;

    // lcm of exponent denominators over all coefficients.
    mpz_class exponent_denominator_lcm() const;

    std::string to_string() const;

private:
    void trim();

    std::shared_ptr<const NumberField> field_;
    std::vector<PuiseuxPoly> y_coeffs_;
};

}  // namespace morsify
