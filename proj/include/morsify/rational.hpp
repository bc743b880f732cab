#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "morsify/errors.hpp"

namespace morsify {

// Arbitrary-precision rational, always in canonical form: positive
// denominator, gcd(|num|, den) = 1, zero stored as 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit by design
    Rational(long n, long d);
    explicit Rational(mpq_class v);

    // Accepts "p", "p/q" or "-p/q" in base 10.
    static Rational from_string(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    bool operator==(const Rational& o) const { return value_ == o.value_; }
    bool operator!=(const Rational& o) const { return value_ != o.value_; }
    bool operator<(const Rational& o) const { return value_ < o.value_; }
    bool operator<=(const Rational& o) const { return value_ <= o.value_; }
    bool operator>(const Rational& o) const { return value_ > o.value_; }
    bool operator>=(const Rational& o) const { return value_ >= o.value_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational reciprocal() const;

    // Integer exponent power; pow(0, 0) = 1.
    static Rational pow(const Rational& base, long e);

    // The exact q-th root when it exists, nullopt otherwise. Requires q >= 1
    // and, for even q, a non-negative base.
    static std::optional<Rational> exact_root(const Rational& x, unsigned long q);

    // "p" when integral, "p/q" otherwise.
    std::string to_string() const;

private:
    mpq_class value_;  // kept canonical
};

inline Rational abs(const Rational& r) { return r.abs(); }

// A rational extended with +infinity; the codomain of the valuation map and
// of the tree exponent function.
class Valuation {
public:
    Valuation(Rational v) : finite_(std::move(v)) {}  // NOLINT: implicit by design
    Valuation(long v) : finite_(Rational(v)) {}       // NOLINT
    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const { return !finite_.has_value(); }
    // Only valid on finite valuations.
    const Rational& finite() const;

    bool operator==(const Valuation& o) const { return finite_ == o.finite_; }
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const;
    bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
    bool operator>(const Valuation& o) const { return o < *this; }
    bool operator>=(const Valuation& o) const { return o <= *this; }

    Valuation operator+(const Valuation& o) const;

    // "p/q" or "inf".
    std::string to_string() const;

private:
    Valuation() = default;
    std::optional<Rational> finite_;
};

}  // namespace morsify
