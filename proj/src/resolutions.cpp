#include "chowcalc/resolutions.hpp"

#include <string>

#include "chowcalc/bounds.hpp"
#include "chowcalc/error.hpp"

namespace chowcalc {

namespace {

// Keeps c2^2 inside int64.
constexpr std::int64_t max_c2 = std::int64_t{1} << 30;

void require_admissible(std::int64_t c2, std::int64_t s)
{
    if (!is_admissible(c2, s))
        throw Error(ErrorCode::inadmissible,
                    "s = " + std::to_string(s) + " is not admissible for c2 = " + std::to_string(c2));
}

} // namespace

bool is_admissible(std::int64_t c2, std::int64_t s)
{
    if (c2 <= 4 || s < 1)
        return false;
    if (c2 > max_c2)
        throw Error(ErrorCode::invalid_argument, "c2 = " + std::to_string(c2) + " is too large");
    const Integer lhs = Integer(2 * s + 1) * (2 * s + 1);
    return lhs <= Integer(4) * c2 - 7;
}

std::vector<std::int64_t> admissible_s(std::int64_t c2)
{
    std::vector<std::int64_t> out;
    for (std::int64_t s = 1; is_admissible(c2, s); ++s)
        out.push_back(s);
    return out;
}

std::int64_t c3_of(std::int64_t c2, std::int64_t s)
{
    require_admissible(c2, s);
    return c2 * c2 - 2 * s * c2 + 2 * s * (s + 1);
}

ResolutionParams resolution_params(std::int64_t c2, std::int64_t s) { return {c2, s, c3_of(c2, s)}; }

ResolutionShapes resolution_shapes(std::int64_t c2, std::int64_t s)
{
    require_admissible(c2, s);
    return {
        ShapeDescriptor({{-s - 2, 1}, {s - 1 - c2, 1}}),
        ShapeDescriptor({{-s - 1, 1}, {-1, 1}, {-2, 1}, {s - c2, 1}}),
    };
}

bool resolution_chern_matches(std::int64_t c2, std::int64_t s, std::int64_t c3)
{
    const auto shapes = resolution_shapes(c2, s);
    const auto resolved = sub(shapes.right.chern_character(3), shapes.left.chern_character(3));
    return resolved == chern_to_character({2, -1, c2, c3}, 3);
}

bool verify_resolution_chern(std::int64_t c2, std::int64_t s) { return resolution_chern_matches(c2, s, c3_of(c2, s)); }

Integer hom_dim(const ShapeDescriptor &a, const ShapeDescriptor &b, int n)
{
    require_supported_dimension(n);
    Integer total = 0;
    for (const auto &x : a.summands())
        for (const auto &y : b.summands())
            total += Integer(x.exponent) * y.exponent * h0_line_bundle(n, y.twist - x.twist);
    return total;
}

PresentationReport presentation_report(std::int64_t c2, std::int64_t s)
{
    const auto shapes = resolution_shapes(c2, s);
    PresentationReport report;
    report.dim_hom = hom_dim(shapes.left, shapes.right, 3);
    report.dim_pv = report.dim_hom - 1;
    report.dim_g = hom_dim(shapes.left, shapes.left, 3) + hom_dim(shapes.right, shapes.right, 3);
    return report;
}

} // namespace chowcalc
