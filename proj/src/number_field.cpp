#include "morsify/number_field.hpp"

#include <algorithm>

namespace morsify {

namespace {

void strip_trailing_zeros(std::vector<Rational>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder of p modulo the monic polynomial m, in place; result has
// degree < deg m.
std::vector<Rational> reduce_mod(std::vector<Rational> p, const std::vector<Rational>& m) {
    const int d = static_cast<int>(m.size()) - 1;
    for (int k = static_cast<int>(p.size()) - 1; k >= d; --k) {
        Rational c = p[k];
        if (c.is_zero()) continue;
        for (int i = 0; i <= d; ++i) p[k - d + i] -= c * m[i];
    }
    p.resize(d, Rational(0));
    return p;
}

}  // namespace

NumberField::NumberField(std::vector<Rational> min_poly, std::vector<Rational> conj_image,
                         std::shared_ptr<const NumberField>*)
    : min_poly_(std::move(min_poly)), conj_image_(std::move(conj_image)) {
    const int d = degree();
    conj_image_.resize(d, Rational(0));
    for (int k = d; k <= 2 * d - 2; ++k) {
        std::vector<Rational> p(k + 1, Rational(0));
        p[k] = Rational(1);
        power_table_.push_back(reduce_mod(std::move(p), min_poly_));
    }
}

std::shared_ptr<const NumberField> NumberField::make(std::vector<Rational> min_poly,
                                                     std::vector<Rational> conj_image) {
    strip_trailing_zeros(min_poly);
    if (min_poly.size() < 2)
        throw field_validation_error("minimal polynomial must have degree >= 1");
    if (min_poly.back() != Rational(1))
        throw field_validation_error("minimal polynomial must be monic");
    strip_trailing_zeros(conj_image);
    if (conj_image.size() >= min_poly.size())
        throw field_validation_error("conjugation image must have degree < deg(minimal polynomial)");

    auto field = std::shared_ptr<NumberField>(
        new NumberField(std::move(min_poly), std::move(conj_image), nullptr));
    field->self_ = field;

    FieldElement c = field->element(field->conj_image_);
    FieldElement at_c = field->zero();
    for (int i = field->degree(); i >= 0; --i)
        at_c = at_c * c + field->from_rational(field->min_poly_[i]);
    if (!at_c.is_zero())
        throw field_validation_error("conjugation image is not a root of the minimal polynomial");
    if (c.conj() != field->generator())
        throw field_validation_error("conjugation is not an involution");
    return field;
}

std::shared_ptr<const NumberField> NumberField::rationals() {
    // Q[t]/(t) with the identity conjugation.
    return make({Rational(0), Rational(1)}, {Rational(0)});
}

bool NumberField::same_as(const NumberField& o) const {
    return this == &o || (min_poly_ == o.min_poly_ && conj_image_ == o.conj_image_);
}

FieldElement NumberField::zero() const {
    return FieldElement(self_.lock(), std::vector<Rational>(degree(), Rational(0)));
}

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::from_rational(Rational v) const {
    std::vector<Rational> c(degree(), Rational(0));
    c[0] = std::move(v);
    return FieldElement(self_.lock(), std::move(c));
}

FieldElement NumberField::generator() const {
    std::vector<Rational> p(degree() + 1, Rational(0));
    p[1] = Rational(1);
    return FieldElement(self_.lock(), reduce_mod(std::move(p), min_poly_));
}

FieldElement NumberField::element(std::vector<Rational> coeffs) const {
    return FieldElement(self_.lock(), reduce_mod(std::move(coeffs), min_poly_));
}

void FieldElement::check_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field_->same_as(*b.field_))
        throw field_mismatch_error("operands belong to different number fields");
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_field(*this, o);
    return coeffs_ == o.coeffs_;
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    std::vector<Rational> c(coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(*this, o);
    std::vector<Rational> c(coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    const int d = field_->degree();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (int i = 0; i < d; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    std::vector<Rational> c(prod.begin(), prod.begin() + d);
    for (int k = d; k <= 2 * d - 2; ++k) {
        if (prod[k].is_zero()) continue;
        const auto& tk = field_->power_table_[k - d];
        for (int i = 0; i < d; ++i) c[i] += prod[k] * tk[i];
    }
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const Rational& r) const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x * r);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::conj() const {
    FieldElement image = field_->element(field_->conj_image_);
    FieldElement acc = field_->zero();
    for (int i = field_->degree() - 1; i >= 0; --i)
        acc = acc * image + field_->from_rational(coeffs_[i]);
    return acc;
}

Rational FieldElement::rational_value() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            throw not_rational_error("element has a non-zero coordinate on t^" + std::to_string(i));
    return coeffs_[0];
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

std::string FieldElement::to_string() const {
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[i].to_string();
        if (i == 1) out += "*t";
        if (i > 1) out += "*t^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace morsify
