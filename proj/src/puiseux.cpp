#include "morsify/puiseux.hpp"

namespace morsify {

PuiseuxPoly PuiseuxPoly::zero(std::shared_ptr<const NumberField> field) {
    return PuiseuxPoly(std::move(field));
}

PuiseuxPoly PuiseuxPoly::monomial(Rational exponent, FieldElement coeff) {
    PuiseuxPoly p(coeff.field());
    p.insert_term(exponent, coeff);
    return p;
}

PuiseuxPoly PuiseuxPoly::monomial(std::shared_ptr<const NumberField> field, Rational exponent,
                                  Rational coeff) {
    FieldElement c = field->from_rational(std::move(coeff));
    PuiseuxPoly p(std::move(field));
    p.insert_term(exponent, c);
    return p;
}

PuiseuxPoly PuiseuxPoly::constant(std::shared_ptr<const NumberField> field, Rational value) {
    return monomial(std::move(field), Rational(0), std::move(value));
}

void PuiseuxPoly::insert_term(const Rational& exponent, const FieldElement& coeff) {
    if (exponent.sign() < 0) throw error("negative Puiseux exponent");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        FieldElement sum = it->second + coeff;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = sum;
    }
}

bool PuiseuxPoly::operator==(const PuiseuxPoly& o) const {
    return terms_ == o.terms_;
}

Valuation PuiseuxPoly::val() const {
    if (terms_.empty()) return Valuation::infinity();
    return Valuation(terms_.begin()->first);
}

FieldElement PuiseuxPoly::lc() const {
    if (terms_.empty()) throw zero_series_error("initial coefficient of the zero series");
    return terms_.begin()->second;
}

PuiseuxPoly PuiseuxPoly::operator-() const {
    PuiseuxPoly r(field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

PuiseuxPoly PuiseuxPoly::operator+(const PuiseuxPoly& o) const {
    PuiseuxPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

PuiseuxPoly PuiseuxPoly::operator-(const PuiseuxPoly& o) const {
    PuiseuxPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
    return r;
}

PuiseuxPoly PuiseuxPoly::operator*(const PuiseuxPoly& o) const {
    PuiseuxPoly r(field_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.insert_term(ea + eb, ca * cb);
    return r;
}

PuiseuxPoly PuiseuxPoly::operator*(const FieldElement& c) const {
    PuiseuxPoly r(field_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.insert_term(e, t * c);
    return r;
}

PuiseuxPoly PuiseuxPoly::operator*(const Rational& c) const {
    return *this * field_->from_rational(c);
}

PuiseuxPoly PuiseuxPoly::pow(unsigned e) const {
    PuiseuxPoly acc = constant(field_, Rational(1));
    PuiseuxPoly base(*this);
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

bool PuiseuxPoly::has_rational_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_rational()) return false;
    return true;
}

PuiseuxPoly PuiseuxPoly::conj() const {
    PuiseuxPoly r(field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
    return r;
}

Rational PuiseuxPoly::eval_exact(const Rational& x0) const {
    Rational sum(0);
    for (const auto& [e, c] : terms_) sum += c.rational_value() * pow_rational(x0, e);
    return sum;
}

mpz_class PuiseuxPoly::exponent_denominator_lcm() const {
    mpz_class d(1);
    for (const auto& [e, c] : terms_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.denominator().get_mpz_t());
    return d;
}

std::string PuiseuxPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string cs = c.to_string();
        if (cs.find(' ') != std::string::npos || cs.find('*') != std::string::npos)
            cs = "(" + cs + ")";
        if (e.is_zero()) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += "x^(" + e.to_string() + ")";
        }
    }
    return out;
}

bool real_less(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    PuiseuxPoly diff = b - a;
    if (diff.is_zero()) throw equal_series_error("real order comparison of equal series");
    return diff.lc().rational_value().sign() > 0;
}

Rational pow_rational(const Rational& x0, const Rational& exponent) {
    if (exponent.is_zero()) return Rational(1);
    unsigned long q = 0;
    if (!exponent.denominator().fits_ulong_p())
        throw incompatible_point_error("exponent denominator too large");
    q = exponent.denominator().get_ui();
    auto root = Rational::exact_root(x0, q);
    if (!root)
        throw incompatible_point_error("x0 = " + x0.to_string() + " has no exact " +
                                       std::to_string(q) + "-th root");
    if (!exponent.numerator().fits_slong_p())
        throw incompatible_point_error("exponent numerator too large");
    return Rational::pow(*root, exponent.numerator().get_si());
}

}  // namespace morsify
