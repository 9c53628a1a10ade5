#include "chowcalc/rational.hpp"

#include <limits>
#include <ostream>

#include "chowcalc/error.hpp"

namespace chowcalc {

Rational::Rational(const Integer &num, const Integer &den)
{
    if (den == 0)
        throw Error(ErrorCode::invalid_argument, "rational with zero denominator");
    value_ = den < 0 ? Value(-num, -den) : Value(num, den);
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

std::optional<Rational> Rational::parse(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    std::string_view num_text = text;
    std::string_view den_text = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_text = text.substr(0, slash);
        den_text = text.substr(slash + 1);
    }
    if (!all_digits(num_text) || !all_digits(den_text))
        return std::nullopt;
    // cpp_int reads a leading 0 as an octal prefix
    auto decimal = [](std::string_view digits) {
        const auto first = digits.find_first_not_of('0');
        return Integer{std::string(first == std::string_view::npos ? "0" : digits.substr(first))};
    };
    Integer num = decimal(num_text);
    Integer den = decimal(den_text);
    if (den == 0)
        return std::nullopt;
    if (negative)
        num = -num;
    return Rational(num, den);
}

Integer Rational::numerator() const { return boost::multiprecision::numerator(value_); }
Integer Rational::denominator() const { return boost::multiprecision::denominator(value_); }

int Rational::sign() const { return value_.sign(); }

Integer Rational::floor() const
{
    Integer num = numerator();
    Integer den = denominator();
    Integer q = num / den; // truncates toward zero
    if (num < 0 && q * den != num)
        q -= 1;
    return q;
}

Integer Rational::ceil() const { return -(-*this).floor(); }

std::optional<std::int64_t> Rational::to_int64() const
{
    if (!is_integer())
        return std::nullopt;
    Integer num = numerator();
    if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
    return num.convert_to<std::int64_t>();
}

std::string Rational::to_string() const
{
    std::string out = numerator().str();
    if (!is_integer())
        out += "/" + denominator().str();
    return out;
}

Rational &Rational::operator/=(const Rational &rhs)
{
    if (rhs.is_zero())
        throw Error(ErrorCode::invalid_argument, "division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
    int c = a.value_.compare(b.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational &x) { return x.sign() < 0 ? -x : x; }
Rational max(const Rational &a, const Rational &b) { return a < b ? b : a; }
Rational min(const Rational &a, const Rational &b) { return b < a ? b : a; }

Rational pow(const Rational &base, unsigned exponent)
{
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

std::ostream &operator<<(std::ostream &os, const Rational &x) { return os << x.to_string(); }

std::string to_string(const Integer &x) { return x.str(); }

} // namespace chowcalc
