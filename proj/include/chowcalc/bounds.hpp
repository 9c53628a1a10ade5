#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chowcalc/chow.hpp"
#include "chowcalc/splitting.hpp"

// Explicit cohomology bounds for torsion-free sheaves on P^2 and P^3 with a
// given splitting type, and the resulting worst-case bounds on the Euler
// characteristic and on ch_3 of a mu-semistable reflexive sheaf on P^3.

namespace chowcalc {

/// Clamped mode floors every intermediate factor at zero, since each one
/// bounds a dimension. Literal mode evaluates the formulas verbatim.
enum class BoundMode { clamped, literal };

/// h^0(O_{P^n}(k)) = C(k + n, n) for k >= 0, else 0.
Integer h0_line_bundle(int n, std::int64_t k);

struct ExtremeBounds {
    Rational lowest;  ///< bound on h^0 F
    Rational highest; ///< bound on h^N F
};

/// h^0 F <= h^0 O(b) and h^N F <= h^0 O(-b-N-1).
ExtremeBounds extreme_bounds(const SplittingType &b, int N);

struct P2Bounds {
    Rational h0;
    Rational h1;
    Rational h2;
};

/// Bounds for a torsion-free sheaf on P^2. The binomial C(b+2, 2) is taken
/// as the polynomial (b+2)(b+1)/2, which also covers the h^2 side for very
/// negative b.
P2Bounds p2_bounds(const SplittingType &b, const ChernCharacter &ch);

/// -ch_2 + (1/2) sum b_i^2; unchanged by twisting and dualizing.
Rational h1_invariant_bound(const SplittingType &b, const Rational &ch2);

/// Vanishing constant for the restriction of a semistable reflexive sheaf to
/// a generic plane: |c1|/n + n + 4 - ch_2 + (1/2) sum b_i^2.
Rational vanishing_Q(std::int64_t n, std::int64_t c1, const Rational &ch2, const SplittingType &b);

/// The four separate vanishing thresholds on P^2. Each cohomology group
/// vanishes for k strictly greater than the listed value. Diagnostic only;
/// the bounds use vanishing_Q.
struct VanishingThresholds {
    Rational h0_of_minus_k; ///< H^0 F(-k):  k > b_max
    Rational h2_of_k;       ///< H^2 F(k):   k > -b_min - 3
    Rational h1_of_k;       ///< H^1 F(k):   k > -b_min + h^1 bound
    Rational h1_of_minus_k; ///< H^1 F(-k):  k > b_max + 3 + h^1 bound of the dual

    Rational max() const;
};

VanishingThresholds vanishing_thresholds(const SplittingType &b, const Rational &ch2);

struct BoundReport {
    std::int64_t rank = 0;
    std::int64_t c1 = 0;
    Rational ch2;
    Rational splitting_radius; ///< |c1|/rank + rank
    Rational q;
    Integer q_int;                      ///< ceil(q)
    std::vector<Rational> h_bounds;     ///< h^0..h^3
    Rational euler_bound;
    Rational ch3_bound;
    bool literal_mode = false;
    std::optional<SplittingType> splitting; ///< set for per-splitting-type reports
};

/// Per-splitting-type report for a sheaf on P^3. Throws rank_mismatch when
/// the rank differs from the splitting-type length, invalid_argument for
/// rank <= 0.
BoundReport p3_bounds(const SplittingType &b, const ChernCharacter &ch, BoundMode mode = BoundMode::clamped);

/// Report with every b_i replaced by the worst case |c1|/n + n.
BoundReport worst_case_bounds(std::int64_t n, std::int64_t c1, const Rational &ch2,
                              BoundMode mode = BoundMode::clamped);

/// Strict upper bound on |chi(F)| for semistable reflexive F on P^3 with
/// ch_0 = n, ch_1 = c1 and the given ch_2.
Rational euler_bound(std::int64_t n, std::int64_t c1, const Rational &ch2, BoundMode mode = BoundMode::clamped);

/// Strict upper bound on |ch_3|: euler_bound + 2|ch_2| + (11/6)|c1| + n.
Rational ch3_bound(std::int64_t n, std::int64_t c1, const Rational &ch2, BoundMode mode = BoundMode::clamped);

struct C3Interval {
    Integer min;
    Integer max;
};

/// ch_3 of a sheaf with the given integer Chern classes on P^3.
Rational ch3_of_classes(std::int64_t r, std::int64_t c1, std::int64_t c2, const Integer &c3);

/// All integers c3 for which |ch_3(r, c1, c2, c3)| < ch3_bound holds. The
/// set is an interval; its endpoints satisfy the bound and their outer
/// neighbours do not.
C3Interval enumerate_admissible_c3(std::int64_t r, std::int64_t c1, std::int64_t c2);

} // namespace chowcalc
