#include "morsify/rational.hpp"

namespace morsify {

Rational::Rational(long n, long d) {
    if (d == 0) throw error("rational with zero denominator");
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
    value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0)
        throw error("malformed rational literal: '" + std::string(text) + "'");
    if (v.get_den() == 0) throw error("rational with zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw error("division by zero");
    return Rational(mpq_class(value_ / o.value_));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw error("reciprocal of zero");
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), k);
    mpq_class v(num, den);
    v.canonicalize();
    Rational r{std::move(v)};
    return invert ? r.reciprocal() : r;
}

std::optional<Rational> Rational::exact_root(const Rational& x, unsigned long q) {
    if (q == 0) throw error("zeroth root");
    if (q == 1) return x;
    if (x.sign() < 0 && q % 2 == 0) return std::nullopt;
    mpz_class num_root, den_root;
    // Canonical form makes num and den coprime, so x is a q-th power exactly
    // when both parts are.
    int num_exact = mpz_root(num_root.get_mpz_t(), x.numerator().get_mpz_t(), q);
    if (num_exact == 0) return std::nullopt;
    int den_exact = mpz_root(den_root.get_mpz_t(), x.denominator().get_mpz_t(), q);
    if (den_exact == 0) return std::nullopt;
    mpq_class v(num_root, den_root);
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::to_string() const {
    return value_.get_str();
}

const Rational& Valuation::finite() const {
    if (!finite_) throw error("valuation is infinite");
    return *finite_;
}

bool Valuation::operator<(const Valuation& o) const {
    if (is_infinite()) return false;
    if (o.is_infinite()) return true;
    return *finite_ < *o.finite_;
}

Valuation Valuation::operator+(const Valuation& o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    return Valuation(*finite_ + *o.finite_);
}

std::string Valuation::to_string() const {
    return is_infinite() ? "inf" : finite_->to_string();
}

}  // namespace morsify
