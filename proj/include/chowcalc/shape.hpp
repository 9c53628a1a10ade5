#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chowcalc/chow.hpp"

namespace chowcalc {

struct Summand {
    std::int64_t twist;
    std::int64_t exponent;

    friend bool operator==(const Summand &, const Summand &) = default;
};

/// A direct sum of line bundles O(t_1)^{e_1} + ... on P^n.
///
/// Canonical form: zero exponents dropped, equal twists merged, twists
/// strictly descending. Negative exponents are rejected.
class ShapeDescriptor {
public:
    ShapeDescriptor() = default;
    explicit ShapeDescriptor(std::vector<Summand> summands);

    /// O(twist)^exponent.
    static ShapeDescriptor power(std::int64_t twist, std::int64_t exponent);

    std::span<const Summand> summands() const noexcept { return summands_; }
    bool empty() const noexcept { return summands_.empty(); }
    std::int64_t rank() const;
    std::int64_t degree() const;

    /// Concatenation (direct sum).
    ShapeDescriptor operator+(const ShapeDescriptor &other) const;

    ChernCharacter chern_character(int n) const;

    /// "O+O(-1)^2+O(-3)"; the trivial twist prints as "O" and the zero bundle as "0".
    std::string to_string() const;

    friend bool operator==(const ShapeDescriptor &, const ShapeDescriptor &) = default;

private:
    std::vector<Summand> summands_;
};

} // namespace chowcalc
