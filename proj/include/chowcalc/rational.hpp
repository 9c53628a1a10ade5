#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chowcalc {

using Integer = boost::multiprecision::cpp_int;

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// The value is always kept in lowest terms with a strictly positive
/// denominator, so two equal values have identical representations and
/// identical string forms ("p/q", or "p" when q = 1).
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(value) {} // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer &value) : value_(value) {}
    Rational(const Integer &num, const Integer &den);

    static Rational from_integers(std::int64_t num, std::int64_t den) { return Rational(Integer(num), Integer(den)); }

    /// Parses "p", "-p", "p/q" or "-p/q". Returns nullopt on anything else,
    /// including a zero denominator.
    static std::optional<Rational> parse(std::string_view text);

    Integer numerator() const;
    Integer denominator() const;

    bool is_integer() const { return denominator() == 1; }
    bool is_zero() const { return numerator() == 0; }
    int sign() const;

    Integer floor() const;
    Integer ceil() const;

    /// Numerator as int64 when the value is an integer in range.
    std::optional<std::int64_t> to_int64() const;

    std::string to_string() const;

    Rational &operator+=(const Rational &rhs) { value_ += rhs.value_; return *this; }
    Rational &operator-=(const Rational &rhs) { value_ -= rhs.value_; return *this; }
    Rational &operator*=(const Rational &rhs) { value_ *= rhs.value_; return *this; }
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
    Rational operator-() const { Rational r; r.value_ = -value_; return r; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
    using Value = boost::multiprecision::cpp_rational;
    Value value_;
};

Rational abs(const Rational &x);
Rational max(const Rational &a, const Rational &b);
Rational min(const Rational &a, const Rational &b);
Rational pow(const Rational &base, unsigned exponent);

std::ostream &operator<<(std::ostream &os, const Rational &x);

/// Decimal text of an arbitrary-precision integer.
std::string to_string(const Integer &x);

} // namespace chowcalc
