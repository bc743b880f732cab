#include "morsify/bivar.hpp"

namespace morsify {

void BivarPoly::trim() {
    while (!y_coeffs_.empty() && y_coeffs_.back().is_zero()) y_coeffs_.pop_back();
}

BivarPoly BivarPoly::zero(std::shared_ptr<const NumberField> field) {
    return BivarPoly(std::move(field));
}

BivarPoly BivarPoly::constant(std::shared_ptr<const NumberField> field, Rational value) {
    BivarPoly p(field);
    p.y_coeffs_.push_back(PuiseuxPoly::constant(field, std::move(value)));
    p.trim();
    return p;
}

BivarPoly BivarPoly::from_y_coeffs(std::shared_ptr<const NumberField> field,
                                   std::vector<PuiseuxPoly> y_coeffs) {
    BivarPoly p(std::move(field));
    p.y_coeffs_ = std::move(y_coeffs);
    p.trim();
    return p;
}

BivarPoly BivarPoly::linear_factor(const PuiseuxPoly& gamma) {
    BivarPoly p(gamma.field());
    p.y_coeffs_.push_back(-gamma);
    p.y_coeffs_.push_back(PuiseuxPoly::constant(gamma.field(), Rational(1)));
    return p;
}

PuiseuxPoly BivarPoly::y_coeff(int q) const {
    if (q < 0 || q >= static_cast<int>(y_coeffs_.size())) return PuiseuxPoly::zero(field_);
    return y_coeffs_[q];
}

bool BivarPoly::operator==(const BivarPoly& o) const { return y_coeffs_ == o.y_coeffs_; }

BivarPoly BivarPoly::operator-() const {
    BivarPoly r(field_);
    r.y_coeffs_.reserve(y_coeffs_.size());
    for (const auto& c : y_coeffs_) r.y_coeffs_.push_back(-c);
    return r;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    BivarPoly r(field_);
    r.y_coeffs_.resize(std::max(y_coeffs_.size(), o.y_coeffs_.size()), PuiseuxPoly::zero(field_));
    for (size_t i = 0; i < r.y_coeffs_.size(); ++i) {
        if (i < y_coeffs_.size()) r.y_coeffs_[i] = r.y_coeffs_[i] + y_coeffs_[i];
        if (i < o.y_coeffs_.size()) r.y_coeffs_[i] = r.y_coeffs_[i] + o.y_coeffs_[i];
    }
    r.trim();
    return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + (-o); }

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly r(field_);
    if (is_zero() || o.is_zero()) return r;
    r.y_coeffs_.assign(y_coeffs_.size() + o.y_coeffs_.size() - 1, PuiseuxPoly::zero(field_));
    for (size_t i = 0; i < y_coeffs_.size(); ++i) {
        if (y_coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.y_coeffs_.size(); ++j)
            r.y_coeffs_[i + j] = r.y_coeffs_[i + j] + y_coeffs_[i] * o.y_coeffs_[j];
    }
    r.trim();
    return r;
}

BivarPoly BivarPoly::operator*(const PuiseuxPoly& c) const {
    BivarPoly r(field_);
    r.y_coeffs_.reserve(y_coeffs_.size());
    for (const auto& yc : y_coeffs_) r.y_coeffs_.push_back(yc * c);
    r.trim();
    return r;
}

BivarPoly BivarPoly::operator*(const Rational& c) const {
    return *this * PuiseuxPoly::constant(field_, c);
}

BivarPoly BivarPoly::pow(unsigned e) const {
    BivarPoly acc = constant(field_, Rational(1));
    BivarPoly base(*this);
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

BivarPoly BivarPoly::integrate_y() const {
    BivarPoly r(field_);
    if (is_zero()) return r;
    r.y_coeffs_.assign(y_coeffs_.size() + 1, PuiseuxPoly::zero(field_));
    for (size_t q = 0; q < y_coeffs_.size(); ++q)
        r.y_coeffs_[q + 1] = y_coeffs_[q] * Rational(static_cast<long>(q) + 1).reciprocal();
    r.trim();
    return r;
}

PuiseuxPoly BivarPoly::compose(const PuiseuxPoly& xi) const {
    PuiseuxPoly acc = PuiseuxPoly::zero(field_);
    for (int q = degree_y(); q >= 0; --q) acc = acc * xi + y_coeffs_[q];
    return acc;
}

FieldElement BivarPoly::value_at_origin() const {
    if (y_coeffs_.empty()) return field_->zero();
    const auto& c0 = y_coeffs_[0];
    auto it = c0.terms().find(Rational(0));
    if (it == c0.terms().end()) return field_->zero();
    return it->second;
}

bool BivarPoly::has_rational_coeffs() const {
    for (const auto& c : y_coeffs_)
        if (!c.has_rational_coeffs()) return false;
    return true;
}

Rational BivarPoly::eval_exact(const Rational& x0, const Rational& y0) const {
    Rational acc(0);
    for (int q = degree_y(); q >= 0; --q) acc = acc * y0 + y_coeffs_[q].eval_exact(x0);
    return acc;
}

mpz_class BivarPoly::exponent_denominator_lcm() const {
    mpz_class d(1);
    for (const auto& c : y_coeffs_) {
        mpz_class cd = c.exponent_denominator_lcm();
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), cd.get_mpz_t());
    }
    return d;
}

std::string BivarPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t q = 0; q < y_coeffs_.size(); ++q) {
        if (y_coeffs_[q].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + y_coeffs_[q].to_string() + ")";
        if (q == 1) out += "*y";
        if (q > 1) out += "*y^" + std::to_string(q);
    }
    return out;
}

}  // namespace morsify
