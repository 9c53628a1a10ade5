#include "chowcalc/shape.hpp"

#include <algorithm>
#include <map>

#include "chowcalc/error.hpp"

namespace chowcalc {

ShapeDescriptor::ShapeDescriptor(std::vector<Summand> summands)
{
    std::map<std::int64_t, std::int64_t, std::greater<>> merged;
    for (const auto &s : summands) {
        if (s.exponent < 0)
            throw Error(ErrorCode::invalid_argument,
                        "negative exponent " + std::to_string(s.exponent) + " on O(" + std::to_string(s.twist) + ")");
        merged[s.twist] += s.exponent;
    }
    for (auto [twist, exponent] : merged)
        if (exponent > 0)
            summands_.push_back({twist, exponent});
}

ShapeDescriptor ShapeDescriptor::power(std::int64_t twist, std::int64_t exponent)
{
    return ShapeDescriptor({{twist, exponent}});
}

std::int64_t ShapeDescriptor::rank() const
{
    std::int64_t r = 0;
    for (const auto &s : summands_)
        r += s.exponent;
    return r;
}

std::int64_t ShapeDescriptor::degree() const
{
    std::int64_t d = 0;
    for (const auto &s : summands_)
        d += s.exponent * s.twist;
    return d;
}

ShapeDescriptor ShapeDescriptor::operator+(const ShapeDescriptor &other) const
{
    std::vector<Summand> all(summands_);
    all.insert(all.end(), other.summands_.begin(), other.summands_.end());
    return ShapeDescriptor(std::move(all));
}

ChernCharacter ShapeDescriptor::chern_character(int n) const
{
    ChernCharacter total(n, std::vector<Rational>(n + 1));
    for (const auto &s : summands_)
        total = add(total, scale(ch_line_bundle(n, s.twist), Rational(s.exponent)));
    return total;
}

std::string ShapeDescriptor::to_string() const
{
    if (summands_.empty())
        return "0";
    std::string out;
    for (const auto &s : summands_) {
        if (!out.empty())
            out += "+";
        out += s.twist == 0 ? "O" : "O(" + std::to_string(s.twist) + ")";
        if (s.exponent != 1)
            out += "^" + std::to_string(s.exponent);
    }
    return out;
}

} // namespace chowcalc
