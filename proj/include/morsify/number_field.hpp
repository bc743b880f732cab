#pragma once

#include <memory>
#include <string>
#include <vector>

#include "morsify/rational.hpp"

namespace morsify {

class FieldElement;

// The quotient ring Q[t]/(m(t)) for a monic m of degree d >= 1, together
// with a user-declared conjugation t -> c(t). The declaration is validated
// at construction: c must induce a ring endomorphism (m(c(t)) = 0 mod m)
// and an involution (c(c(t)) = t mod m). Degree 1 gives plain Q.
class NumberField {
public:
    // min_poly lists coefficients of m from degree 0 up, including the
    // leading 1; conj_image lists coefficients of c(t), degree < d.
    static std::shared_ptr<const NumberField> make(std::vector<Rational> min_poly,
                                                   std::vector<Rational> conj_image);

    // Q itself: m(t) = t, conjugation the identity.
    static std::shared_ptr<const NumberField> rationals();

    int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
    const std::vector<Rational>& min_poly() const { return min_poly_; }
    // Padded to length degree().
    const std::vector<Rational>& conj_image() const { return conj_image_; }

    bool same_as(const NumberField& o) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(Rational v) const;
    FieldElement generator() const;  // the class of t
    FieldElement element(std::vector<Rational> coeffs) const;

private:
    NumberField(std::vector<Rational> min_poly, std::vector<Rational> conj_image,
                std::shared_ptr<const NumberField>* self);

    std::vector<Rational> min_poly_;
    std::vector<Rational> conj_image_;
    // Reductions of t^d .. t^(2d-2), precomputed for multiplication.
    std::vector<std::vector<Rational>> power_table_;
    std::weak_ptr<const NumberField> self_;

    friend class FieldElement;
};

// An element of a NumberField in coordinates over the basis 1, t, ..,
// t^(d-1); always fully reduced. Immutable value type.
class FieldElement {
public:
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const std::shared_ptr<const NumberField>& field() const { return field_; }

    bool is_zero() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator*(const Rational& r) const;

    // Applies the declared conjugation; an involution.
    FieldElement conj() const;

    // The coordinate on 1 when all higher coordinates vanish; throws
    // not_rational_error otherwise.
    Rational rational_value() const;
    bool is_rational() const;

    // Coordinates as "a0 + a1*t + ..." with zero terms skipped.
    std::string to_string() const;

private:
    FieldElement(std::shared_ptr<const NumberField> field, std::vector<Rational> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

    static void check_same_field(const FieldElement& a, const FieldElement& b);

    std::shared_ptr<const NumberField> field_;
    std::vector<Rational> coeffs_;

    friend class NumberField;
};

inline FieldElement operator*(const Rational& r, const FieldElement& e) { return e * r; }

}  // namespace morsify
