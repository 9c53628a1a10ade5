#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chowcalc/rational.hpp"

namespace chowcalc {

/// Generic splitting type b_1 >= ... >= b_r of a torsion-free sheaf: the
/// degrees of its restriction to a generic line.
class SplittingType {
public:
    /// Throws invalid_argument if entries is empty or not non-increasing.
    explicit SplittingType(std::vector<std::int64_t> entries);

    /// Sorts arbitrary entries into canonical non-increasing order.
    static SplittingType canonical(std::vector<std::int64_t> entries);

    std::span<const std::int64_t> entries() const noexcept { return entries_; }
    std::size_t rank() const noexcept { return entries_.size(); }
    std::int64_t c1() const;
    std::int64_t max() const { return entries_.front(); }
    std::int64_t min() const { return entries_.back(); }

    /// Sum of b_i^2.
    Integer sum_of_squares() const;

    /// Splitting type of F(k).
    SplittingType shifted(std::int64_t k) const;
    /// Splitting type of the dual sheaf.
    SplittingType dual() const;

    std::string to_string() const;

    friend bool operator==(const SplittingType &, const SplittingType &) = default;
    friend auto operator<=>(const SplittingType &, const SplittingType &) = default;

private:
    std::vector<std::int64_t> entries_;
};

/// True iff b has length r, sums to c1 and is non-increasing.
bool validate(std::span<const std::int64_t> b, std::int64_t r, std::int64_t c1);
inline bool validate(const SplittingType &b, std::int64_t r, std::int64_t c1) { return validate(b.entries(), r, c1); }

/// Consecutive differences are at most 2.
bool gap_ok(const SplittingType &b);

/// |c1|/r + r, the radius every entry of a semistable reflexive splitting
/// type must respect.
Rational splitting_radius(std::int64_t r, std::int64_t c1);

/// Every |b_i| <= |c1|/r + r. Throws precondition unless validate(b, r, c1).
bool magnitude_ok(const SplittingType &b, std::int64_t r, std::int64_t c1);

/// All splitting types of rank r and first Chern class c1 inside the
/// magnitude box, optionally filtered by the gap condition, in
/// lexicographically descending order.
std::vector<SplittingType> enumerate_splitting_types(std::int64_t r, std::int64_t c1, bool reflexive_gap);

} // namespace chowcalc
