#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chowcalc/shape.hpp"

// Numeric side of linear monads on P^2. A normalized mu-semistable
// torsion-free sheaf of rank r, degree d and charge c = -chi(F(-1)) is the
// middle cohomology of
//
//   O(-1)^{d+c} -> O^{r+d+2c} -> O(1)^c.
//
// The cohomological hypotheses behind that statement (vanishing of
// H^0(F(-1)) and H^2(F(-2))) are about an actual sheaf and are not checked
// here; monad_shape only checks the numeric preconditions.

namespace chowcalc {

class MonadShape {
public:
    /// Exponents of O(-1), O and O(1). Throws not_realizable on a negative one.
    MonadShape(std::int64_t left, std::int64_t middle, std::int64_t right);

    std::int64_t v() const noexcept { return v_; }
    std::int64_t w() const noexcept { return w_; }
    std::int64_t u() const noexcept { return u_; }

    std::int64_t rank() const noexcept { return w_ - v_ - u_; }
    std::int64_t degree() const noexcept { return v_ - u_; }

    ShapeDescriptor left() const { return ShapeDescriptor::power(-1, v_); }
    ShapeDescriptor middle() const { return ShapeDescriptor::power(0, w_); }
    ShapeDescriptor right() const { return ShapeDescriptor::power(1, u_); }

    /// ch(middle) - ch(left) - ch(right) on P^2.
    ChernCharacter cohomology_character() const;

    std::string to_string() const;

    friend bool operator==(const MonadShape &, const MonadShape &) = default;

private:
    std::int64_t v_;
    std::int64_t w_;
    std::int64_t u_;
};

/// -rank + 1 <= d <= 0. Throws invalid_argument for r <= 0.
bool is_normalized(std::int64_t r, std::int64_t d);

/// -chi(F(-1)) = -ch_2 - d/2.
Rational charge(std::int64_t r, std::int64_t d, const Rational &ch2);

/// Throws precondition when (r, d) is not normalized, not_realizable when the
/// charge is negative or fractional or d + c < 0.
MonadShape monad_shape(std::int64_t r, std::int64_t d, const Rational &ch2);

/// Shape of the dual monad: the outer exponents swap.
MonadShape dual_complex_shape(const MonadShape &m);

/// The c + d = 0 case: F is the kernel of a surjection O^{r+c} -> O(1)^c and
/// F* has the resolution 0 -> O(-1)^c -> O^{r+c} -> F* -> 0.
struct KernelPresentation {
    ShapeDescriptor surjection_source;
    ShapeDescriptor surjection_target;
    ShapeDescriptor resolution_left;
    ShapeDescriptor resolution_right;
    Integer hom_dim; ///< dim Hom(O(-1)^c, O^{r+c}) = 3 c (r + c)
};

KernelPresentation kernel_presentation(std::int64_t r, std::int64_t c);

/// A partition as a non-increasing list of positive parts.
using Partition = std::vector<std::int64_t>;

/// Isomorphism type of a zero-dimensional sheaf: one partition per support
/// point, points forgotten. Partitions are kept sorted in descending
/// lexicographic order so equal multisets compare equal.
class PartitionType {
public:
    PartitionType() = default;
    explicit PartitionType(std::vector<Partition> parts);

    const std::vector<Partition> &parts() const noexcept { return parts_; }
    std::int64_t total() const;

    /// "[(2,1),(1)]"; the empty type is "[]".
    std::string to_string() const;
    static std::optional<PartitionType> parse(const std::string &text);

    friend bool operator==(const PartitionType &, const PartitionType &) = default;
    friend auto operator<=>(const PartitionType &, const PartitionType &) = default;

private:
    std::vector<Partition> parts_;
};

/// Every partition type of total length l, in a fixed canonical order.
std::vector<PartitionType> partition_types(std::int64_t l);

struct StratumDims {
    std::int64_t length;
    Integer hom_dim;                        ///< dim Hom(O^{r+c}, Q) = l (r + c)
    std::optional<Integer> projective_dim;  ///< hom_dim - 1, when l >= 1
    Integer aut_left;                       ///< dim Aut(O(-1)^c) = c^2
    Integer aut_middle;                     ///< dim Aut(O^{r+c}) = (r + c)^2
    std::optional<Integer> aut_lambda;      ///< sum m_x^2 when every point is reduced, else unknown
};

StratumDims stratum_dims(std::int64_t r, std::int64_t c, const PartitionType &lambda);

} // namespace chowcalc
