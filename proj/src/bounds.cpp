#include "chowcalc/bounds.hpp"

#include <string>

#include "chowcalc/error.hpp"

namespace chowcalc {

namespace {

const Rational half = Rational::from_integers(1, 2);

Rational floor_at_zero(const Rational &x, BoundMode mode)
{
    return mode == BoundMode::clamped ? max(x, Rational(0)) : x;
}

void require_positive_rank(std::int64_t n)
{
    if (n <= 0)
        throw Error(ErrorCode::invalid_argument, "rank must be positive, got " + std::to_string(n));
}

// (b+2)(b+1)/2 as a polynomial in b.
Rational binomial_b_plus_2(std::int64_t b)
{
    return Rational(Integer(b + 2) * (b + 1)) / Rational(2);
}

} // namespace

Integer h0_line_bundle(int n, std::int64_t k)
{
    if (n < 1)
        throw Error(ErrorCode::invalid_argument, "h0_line_bundle needs n >= 1");
    if (k < 0)
        return 0;
    // C(k + n, n) = prod_{i=1..n} (k + i) / i, exact at every step.
    Integer result = 1;
    for (int i = 1; i <= n; ++i)
        result = result * (k + i) / i;
    return result;
}

ExtremeBounds extreme_bounds(const SplittingType &b, int N)
{
    require_supported_dimension(N);
    Integer lowest = 0, highest = 0;
    for (auto bi : b.entries()) {
        lowest += h0_line_bundle(N, bi);
        highest += h0_line_bundle(N, -bi - N - 1);
    }
    return {Rational(lowest), Rational(highest)};
}

P2Bounds p2_bounds(const SplittingType &b, const ChernCharacter &ch)
{
    if (ch.ambient_dim() != 2)
        throw Error(ErrorCode::dimension_mismatch, "p2_bounds needs a character on P^2");
    if (ch.rank() != Rational(static_cast<std::int64_t>(b.rank())))
        throw Error(ErrorCode::rank_mismatch,
                    "rank " + ch.rank().to_string() + " does not match splitting type " + b.to_string());
    Rational binomials;
    for (auto bi : b.entries())
        binomials += binomial_b_plus_2(bi);
    return {binomials, -euler_characteristic(ch) + binomials, binomials};
}

Rational h1_invariant_bound(const SplittingType &b, const Rational &ch2)
{
    return -ch2 + half * Rational(b.sum_of_squares());
}

Rational vanishing_Q(std::int64_t n, std::int64_t c1, const Rational &ch2, const SplittingType &b)
{
    if (static_cast<std::int64_t>(b.rank()) != n)
        throw Error(ErrorCode::rank_mismatch,
                    "rank " + std::to_string(n) + " does not match splitting type " + b.to_string());
    return splitting_radius(n, c1) + Rational(4) + h1_invariant_bound(b, ch2);
}

Rational VanishingThresholds::max() const
{
    return chowcalc::max(chowcalc::max(h0_of_minus_k, h2_of_k), chowcalc::max(h1_of_k, h1_of_minus_k));
}

VanishingThresholds vanishing_thresholds(const SplittingType &b, const Rational &ch2)
{
    const Rational h1 = h1_invariant_bound(b, ch2);
    const Rational h1_dual = h1_invariant_bound(b.dual(), ch2);
    return {
        Rational(b.max()),
        Rational(-b.min() - 3),
        Rational(-b.min()) + h1,
        Rational(b.max() + 3) + h1_dual,
    };
}

BoundReport p3_bounds(const SplittingType &b, const ChernCharacter &ch, BoundMode mode)
{
    if (ch.ambient_dim() != 3)
        throw Error(ErrorCode::dimension_mismatch, "p3_bounds needs a character on P^3");
    const auto rank = ch.rank().to_int64();
    if (!rank || *rank <= 0)
        throw Error(ErrorCode::invalid_argument, "p3_bounds needs positive rank, got " + ch.rank().to_string());
    if (static_cast<std::int64_t>(b.rank()) != *rank)
        throw Error(ErrorCode::rank_mismatch,
                    "rank " + ch.rank().to_string() + " does not match splitting type " + b.to_string());
    if (!ch.c1().is_integer())
        throw Error(ErrorCode::integrality, "c1 must be an integer, got " + ch.c1().to_string());

    const ChernCharacter restricted = restrict_to_hyperplane(ch);
    const std::int64_t c1 = *restricted.c1().to_int64();
    const Rational &ch2 = restricted[2];

    BoundReport report;
    report.rank = *rank;
    report.c1 = c1;
    report.ch2 = ch2;
    report.splitting_radius = splitting_radius(*rank, c1);
    report.q = floor_at_zero(vanishing_Q(*rank, c1, ch2, b), mode);
    report.q_int = report.q.ceil();
    report.literal_mode = mode == BoundMode::literal;
    report.splitting = b;

    const auto extremes = extreme_bounds(b, 3);
    const Rational middle = report.q * floor_at_zero(h1_invariant_bound(b, ch2), mode);
    report.h_bounds = {extremes.lowest, middle, middle, extremes.highest};
    report.euler_bound = euler_bound(*rank, c1, ch2, mode);
    report.ch3_bound = ch3_bound(*rank, c1, ch2, mode);
    return report;
}

namespace {

struct WorstCaseFactors {
    Rational radius;
    Rational q;        // t + 4 - ch2 + n t^2 / 2
    Rational h1;       // -ch2 + n t^2 / 2
    Rational extremes; // n/6 (t + 3)^3
};

WorstCaseFactors worst_case_factors(std::int64_t n, std::int64_t c1, const Rational &ch2, BoundMode mode)
{
    require_positive_rank(n);
    const Rational t = splitting_radius(n, c1);
    const Rational h1 = -ch2 + half * Rational(n) * t * t;
    return {
        t,
        floor_at_zero(t + Rational(4) + h1, mode),
        floor_at_zero(h1, mode),
        Rational(n) / Rational(6) * pow(t + Rational(3), 3),
    };
}

} // namespace

BoundReport worst_case_bounds(std::int64_t n, std::int64_t c1, const Rational &ch2, BoundMode mode)
{
    const auto f = worst_case_factors(n, c1, ch2, mode);
    BoundReport report;
    report.rank = n;
    report.c1 = c1;
    report.ch2 = ch2;
    report.splitting_radius = f.radius;
    report.q = f.q;
    report.q_int = f.q.ceil();
    const Rational middle = f.q * f.h1;
    // h^0 + h^3 is bounded by the extremes term, so each of them is too.
    report.h_bounds = {f.extremes, middle, middle, f.extremes};
    report.euler_bound = euler_bound(n, c1, ch2, mode);
    report.ch3_bound = ch3_bound(n, c1, ch2, mode);
    report.literal_mode = mode == BoundMode::literal;
    return report;
}

Rational euler_bound(std::int64_t n, std::int64_t c1, const Rational &ch2, BoundMode mode)
{
    const auto f = worst_case_factors(n, c1, ch2, mode);
    return Rational(2) * f.q * f.h1 + f.extremes;
}

Rational ch3_bound(std::int64_t n, std::int64_t c1, const Rational &ch2, BoundMode mode)
{
    return euler_bound(n, c1, ch2, mode) + Rational(2) * abs(ch2)
           + Rational::from_integers(11, 6) * abs(Rational(c1)) + Rational(n);
}

Rational ch3_of_classes(std::int64_t r, std::int64_t c1, std::int64_t c2, const Integer &c3)
{
    return chern_to_character({r, c1, c2, c3}, 3)[3];
}

C3Interval enumerate_admissible_c3(std::int64_t r, std::int64_t c1, std::int64_t c2)
{
    require_positive_rank(r);
    const Rational ch2 = chern_to_character({r, c1, c2, 0}, 3)[2];
    const Rational bound = ch3_bound(r, c1, ch2);
    // 6 ch_3 = a + 3 c3 with a = c1^3 - 3 c1 c2, so the strict bound reads
    // (-6B - a)/3 < c3 < (6B - a)/3.
    const Rational a(Integer(c1) * c1 * c1 - Integer(3) * c1 * c2);
    const Rational lower = (-Rational(6) * bound - a) / Rational(3);
    const Rational upper = (Rational(6) * bound - a) / Rational(3);
    return {lower.floor() + 1, upper.ceil() - 1};
}

} // namespace chowcalc
