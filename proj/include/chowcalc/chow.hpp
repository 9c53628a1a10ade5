#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chowcalc/rational.hpp"

// Intersection-theory arithmetic on P^2 and P^3. Every class is a truncated
// polynomial in the hyperplane class H, stored as its coefficients of
// H^0, ..., H^n.

namespace chowcalc {

/// Chern character (ch_0, ..., ch_n) of a sheaf on P^n, n in {2, 3}.
class ChernCharacter {
public:
    /// Throws unsupported_dimension unless n is 2 or 3, invalid_argument when
    /// the component count is not n + 1 or ch_0 is not an integer.
    ChernCharacter(int ambient_dim, std::vector<Rational> components);

    int ambient_dim() const noexcept { return dim_; }
    std::span<const Rational> components() const noexcept { return comps_; }
    const Rational &operator[](std::size_t i) const { return comps_.at(i); }

    const Rational &rank() const { return comps_[0]; }
    const Rational &c1() const { return comps_[1]; }

    friend bool operator==(const ChernCharacter &, const ChernCharacter &) = default;

private:
    int dim_;
    std::vector<Rational> comps_;
};

struct ToddClass {
    int ambient_dim;
    std::vector<Rational> components;

    ChernCharacter as_character() const { return {ambient_dim, components}; }
};

/// Integer Chern classes. c3 is only meaningful on P^3.
struct ChernClasses {
    Integer rank;
    Integer c1;
    Integer c2;
    Integer c3;

    friend bool operator==(const ChernClasses &, const ChernClasses &) = default;
};

void require_supported_dimension(int n);

ToddClass todd(int n);

/// ch(O(k)) = exp(kH), truncated past H^n.
ChernCharacter ch_line_bundle(int n, std::int64_t k);

ChernCharacter mul(const ChernCharacter &a, const ChernCharacter &b);
ChernCharacter add(const ChernCharacter &a, const ChernCharacter &b);
ChernCharacter sub(const ChernCharacter &a, const ChernCharacter &b);
ChernCharacter scale(const ChernCharacter &a, const Rational &factor);

ChernCharacter twist(const ChernCharacter &x, std::int64_t k);
ChernCharacter dual(const ChernCharacter &x);

/// Degree-n coefficient of ch * td.
Rational euler_characteristic(const ChernCharacter &x);

/// ch(F|_H) for a hyperplane H in P^3: the first three components.
ChernCharacter restrict_to_hyperplane(const ChernCharacter &x);

/// ch(i_* F|_H) on P^3, from the sequence 0 -> F(-1) -> F -> i_* F|_H -> 0.
ChernCharacter pushforward_from_hyperplane(const ChernCharacter &x);

ChernCharacter chern_to_character(const ChernClasses &c, int n);

/// Inverse of chern_to_character. Throws integrality when any implied c_i is
/// fractional. On P^2 the returned c3 is zero.
ChernClasses character_to_chern(const ChernCharacter &x);

} // namespace chowcalc
