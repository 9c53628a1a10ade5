#pragma once

#include <cstdint>
#include <vector>

#include "chowcalc/shape.hpp"

// Rank-two stable reflexive sheaves on P^3 with c1 = -1, c2 > 4 and
//   c3 = c2^2 - 2 s c2 + 2 s (s + 1),   1 <= s, (2s + 1)^2 <= 4 c2 - 7,
// admit a resolution 0 -> R^-1 -> R^0 -> F -> 0 by split bundles. This module
// enumerates those parameters, builds the two terms and does the dimension
// count for P(Hom(R^-1, R^0)) and Aut(R^-1) x Aut(R^0).

namespace chowcalc {

struct ResolutionParams {
    std::int64_t c2;
    std::int64_t s;
    std::int64_t c3;
};

struct ResolutionShapes {
    ShapeDescriptor left;  ///< R^-1
    ShapeDescriptor right; ///< R^0
};

struct PresentationReport {
    Integer dim_hom; ///< dim Hom(R^-1, R^0)
    Integer dim_pv;  ///< dim P(Hom(R^-1, R^0))
    Integer dim_g;   ///< dim End(R^-1) + dim End(R^0)
};

/// Every s >= 1 with (2s + 1)^2 <= 4 c2 - 7, decided in integer arithmetic.
/// Empty for c2 <= 4.
std::vector<std::int64_t> admissible_s(std::int64_t c2);

bool is_admissible(std::int64_t c2, std::int64_t s);

/// Throws inadmissible unless is_admissible(c2, s).
std::int64_t c3_of(std::int64_t c2, std::int64_t s);
ResolutionParams resolution_params(std::int64_t c2, std::int64_t s);

ResolutionShapes resolution_shapes(std::int64_t c2, std::int64_t s);

/// ch(R^0) - ch(R^-1) == ch of (2, -1, c2, c3)?
bool resolution_chern_matches(std::int64_t c2, std::int64_t s, std::int64_t c3);
bool verify_resolution_chern(std::int64_t c2, std::int64_t s);

/// dim Hom(a, b) between split bundles on P^n.
Integer hom_dim(const ShapeDescriptor &a, const ShapeDescriptor &b, int n);

PresentationReport presentation_report(std::int64_t c2, std::int64_t s);

} // namespace chowcalc
