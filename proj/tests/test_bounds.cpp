#include <doctest.h>

#include <random>

#include "chowcalc/bounds.hpp"
#include "chowcalc/error.hpp"
#include "chowcalc/resolutions.hpp"
#include "oracles.hpp"

using namespace chowcalc;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational::from_integers(p, d); }

// The Euler bound display, term by term, summing t^2 over i = 1..n.
Rational euler_display(std::int64_t n, std::int64_t c1, const Rational &ch2)
{
    const Rational t = q(c1 < 0 ? -c1 : c1, n) + q(n);
    Rational sum_sq;
    for (std::int64_t i = 0; i < n; ++i)
        sum_sq += t * t;
    const Rational second = -ch2 + q(1, 2) * sum_sq;
    const Rational first = t + q(4) - ch2 + q(1, 2) * sum_sq;
    return q(2) * first * second + q(n, 6) * (t + q(3)) * (t + q(3)) * (t + q(3));
}

SplittingType random_splitting(std::mt19937_64 &rng)
{
    std::vector<std::int64_t> entries(oracle::random_int(rng, 1, 5));
    for (auto &b : entries)
        b = oracle::random_int(rng, -8, 8);
    return SplittingType::canonical(entries);
}

} // namespace

TEST_SUITE("cohomology_bounds") {
    TEST_CASE("h0 of line bundles") {
        CHECK(h0_line_bundle(3, 0) == 1);
        CHECK(h0_line_bundle(3, -1) == 0);
        CHECK(h0_line_bundle(2, 3) == 10);
        for (int n = 1; n <= 3; ++n)
            for (std::int64_t k = -3; k <= 12; ++k)
                CHECK(h0_line_bundle(n, k) == oracle::monomial_count(n, k));
    }

    TEST_CASE("extreme bounds") {
        auto e = extreme_bounds(SplittingType({0, -1}), 3);
        CHECK(e.lowest == q(1));
        CHECK(e.highest == q(0));
        e = extreme_bounds(SplittingType({2}), 2);
        CHECK(e.lowest == q(6));
        CHECK(e.highest == q(0));
        e = extreme_bounds(SplittingType({-3}), 2);
        CHECK(e.lowest == q(0));
        CHECK(e.highest == q(1));
    }

    TEST_CASE("P2 bounds") {
        auto b = p2_bounds(SplittingType({0, 0}), ChernCharacter(2, {q(2), q(0), q(-5)}));
        CHECK(b.h0 == q(2));
        CHECK(b.h1 == q(5));
        CHECK(b.h2 == q(2));
        b = p2_bounds(SplittingType({0, -1}), ChernCharacter(2, {q(2), q(-1), q(-9, 2)}));
        CHECK(b.h0 == q(1));
        CHECK(b.h1 == q(5));
        b = p2_bounds(SplittingType({0}), ChernCharacter(2, {q(1), q(0), q(0)}));
        CHECK(b.h1 == q(0));
        CHECK_THROWS_AS(p2_bounds(SplittingType({0}), ChernCharacter(2, {q(2), q(0), q(0)})), Error);
    }

    TEST_CASE("P2 bounds agree with monomial counts for nonnegative twists") {
        std::mt19937_64 rng(41);
        for (int i = 0; i < 200; ++i) {
            std::vector<std::int64_t> entries(oracle::random_int(rng, 1, 4));
            for (auto &v : entries)
                v = oracle::random_int(rng, -1, 6);
            auto b = SplittingType::canonical(entries);
            ChernCharacter ch(2, {q(static_cast<std::int64_t>(b.rank())), q(b.c1()), oracle::random_rational(rng)});
            std::int64_t count = 0;
            for (auto v : b.entries())
                count += oracle::monomial_count(2, v);
            const auto bounds = p2_bounds(b, ch);
            CHECK(bounds.h0 == q(count));
            CHECK(bounds.h1 == q(count) - oracle::euler_closed_form(ch));
        }
    }

    TEST_CASE("invariant h1 bound") {
        CHECK(h1_invariant_bound(SplittingType({0, -1}), q(-9, 2)) == q(5));
        CHECK(h1_invariant_bound(SplittingType({0, 0}), q(0)) == q(0));
        // twisting (0,-1) with ch2 = -9/2
        const ChernCharacter ch(2, {q(2), q(-1), q(-9, 2)});
        for (std::int64_t k = -3; k <= 3; ++k)
            CHECK(h1_invariant_bound(SplittingType({0, -1}).shifted(k), twist(ch, k)[2]) == q(5));
    }

    TEST_CASE("invariance under twist and dual") {
        std::mt19937_64 rng(43);
        for (int i = 0; i < 200; ++i) {
            auto b = random_splitting(rng);
            auto ch2 = oracle::random_rational(rng);
            ChernCharacter ch(2, {q(static_cast<std::int64_t>(b.rank())), q(b.c1()), ch2});
            const auto base = h1_invariant_bound(b, ch2);
            for (std::int64_t k = -5; k <= 5; ++k)
                CHECK(h1_invariant_bound(b.shifted(k), twist(ch, k)[2]) == base);
            CHECK(h1_invariant_bound(b.dual(), dual(ch)[2]) == base);
        }
    }

    TEST_CASE("vanishing constant") {
        CHECK(vanishing_Q(2, -1, q(-9, 2), SplittingType({0, -1})) == q(23, 2));
        CHECK(vanishing_Q(1, 0, q(0), SplittingType({0})) == q(5));
        CHECK(vanishing_Q(2, 0, q(-5), SplittingType({0, 0})) == q(11));
        CHECK_THROWS_AS(vanishing_Q(3, 0, q(-5), SplittingType({0, 0})), Error);
    }

    TEST_CASE("vanishing thresholds diagnostic") {
        auto t = vanishing_thresholds(SplittingType({0, -1}), q(-9, 2));
        CHECK(t.h0_of_minus_k == q(0));
        CHECK(t.h2_of_k == q(-2));
        CHECK(t.h1_of_k == q(6));
        CHECK(t.h1_of_minus_k == q(8));
        CHECK(t.max() == q(8));
        // every step threshold sits below the single displayed constant
        // when the splitting type respects the magnitude bound
        CHECK(t.max() < vanishing_Q(2, -1, q(-9, 2), SplittingType({0, -1})));
    }

    TEST_CASE("P3 bounds") {
        auto r = p3_bounds(SplittingType({0, -1}), ChernCharacter(3, {q(2), q(-1), q(-9, 2), q(71, 6)}));
        CHECK(r.q == q(23, 2));
        CHECK(r.q_int == 12);
        CHECK(r.h_bounds == std::vector<Rational>{q(1), q(115, 2), q(115, 2), q(0)});
        CHECK(r.euler_bound == q(1279, 3));
        CHECK(r.ch3_bound == q(2635, 6));
        CHECK_FALSE(r.literal_mode);

        r = p3_bounds(SplittingType({0}), ChernCharacter(3, {q(1), q(0), q(0), q(0)}));
        CHECK(r.h_bounds[1] == q(0));
        CHECK(r.h_bounds[2] == q(0));

        r = p3_bounds(SplittingType({0, 0}), ChernCharacter(3, {q(2), q(0), q(10), q(0)}));
        CHECK(r.h_bounds[1] == q(0));
        CHECK(r.h_bounds[2] == q(0));
        CHECK(r.q == q(0));

        auto lit = p3_bounds(SplittingType({0, 0}), ChernCharacter(3, {q(2), q(0), q(10), q(0)}), BoundMode::literal);
        CHECK(lit.literal_mode);
        CHECK(lit.q == q(-4));
        CHECK(lit.h_bounds[1] == q(40));

        CHECK_THROWS_AS(p3_bounds(SplittingType({0}), ChernCharacter(3, {q(0), q(1), q(0), q(0)})), Error);
        CHECK_THROWS_AS(p3_bounds(SplittingType({0}), ChernCharacter(3, {q(2), q(0), q(0), q(0)})), Error);
    }

    TEST_CASE("default-mode reports are nonnegative") {
        std::mt19937_64 rng(47);
        for (int i = 0; i < 200; ++i) {
            auto b = random_splitting(rng);
            ChernCharacter ch(3, {q(static_cast<std::int64_t>(b.rank())), q(b.c1()), oracle::random_rational(rng),
                                  oracle::random_rational(rng)});
            for (const auto &report : {p3_bounds(b, ch), worst_case_bounds(static_cast<std::int64_t>(b.rank()),
                                                                           b.c1(), ch[2])}) {
                CHECK(report.q >= q(0));
                CHECK(report.euler_bound >= q(0));
                CHECK(report.ch3_bound >= q(0));
                for (const auto &h : report.h_bounds)
                    CHECK(h >= q(0));
                if (report.q > q(0))
                    CHECK(report.q_int >= 1);
            }
        }
    }

    TEST_CASE("euler bound") {
        CHECK(euler_bound(2, -1, q(-9, 2)) == q(1279, 3));
        CHECK(euler_bound(2, 0, q(-5)) == q(935, 3));
        CHECK(euler_bound(1, 0, q(0)) == q(97, 6));
        CHECK_THROWS_AS(euler_bound(0, 0, q(0)), Error);
        std::mt19937_64 rng(53);
        for (int i = 0; i < 100; ++i) {
            auto n = oracle::random_int(rng, 1, 6);
            auto c1 = oracle::random_int(rng, -10, 10);
            auto ch2 = oracle::random_rational(rng);
            CHECK(euler_bound(n, c1, ch2, BoundMode::literal) == euler_display(n, c1, ch2));
        }
    }

    TEST_CASE("ch3 bound") {
        CHECK(ch3_bound(2, -1, q(-9, 2)) == q(2635, 6));
        CHECK(ch3_bound(2, 0, q(-5)) == q(971, 3));
        CHECK(ch3_bound(2, -1, q(-9, 2)) > q(71, 6));
        std::mt19937_64 rng(59);
        for (int i = 0; i < 100; ++i) {
            auto n = oracle::random_int(rng, 1, 6);
            auto c1 = oracle::random_int(rng, -10, 10);
            auto ch2 = oracle::random_rational(rng);
            CHECK(ch3_bound(n, c1, ch2) == ch3_bound(n, -c1, ch2));
            CHECK(ch3_bound(n, c1, ch2, BoundMode::literal)
                  == euler_display(n, c1, ch2) + q(2) * abs(ch2) + q(11, 6) * abs(q(c1)) + q(n));
        }
    }

    TEST_CASE("worst-case report") {
        auto r = worst_case_bounds(2, -1, q(-9, 2));
        CHECK(r.splitting_radius == q(5, 2));
        CHECK(r.q == q(69, 4));
        CHECK(r.euler_bound == q(1279, 3));
        CHECK(r.ch3_bound == q(2635, 6));
        CHECK_FALSE(r.splitting);
    }

    TEST_CASE("admissible c3 interval") {
        auto check_edges = [](std::int64_t r, std::int64_t c1, std::int64_t c2) {
            const auto iv = enumerate_admissible_c3(r, c1, c2);
            const Rational ch2 = chern_to_character({r, c1, c2, 0}, 3)[2];
            const Rational bound = ch3_bound(r, c1, ch2);
            CHECK(iv.min <= iv.max);
            CHECK(abs(ch3_of_classes(r, c1, c2, iv.min)) < bound);
            CHECK(abs(ch3_of_classes(r, c1, c2, iv.max)) < bound);
            CHECK_FALSE(abs(ch3_of_classes(r, c1, c2, iv.min - 1)) < bound);
            CHECK_FALSE(abs(ch3_of_classes(r, c1, c2, iv.max + 1)) < bound);
            CHECK(Rational(iv.max - iv.min + 1) < q(2) * bound * q(6) / q(3) + q(2));
            return iv;
        };
        auto iv = check_edges(2, -1, 5);
        CHECK(iv.min == -882);
        CHECK(iv.max == 873);
        iv = check_edges(1, 0, 0);
        CHECK(iv.min == -34);
        CHECK(iv.max == 34);
        iv = check_edges(3, 1, 4);
        CHECK(iv.min == -2492);
        CHECK(iv.max == 2499);
        for (std::int64_t r = 1; r <= 4; ++r)
            for (std::int64_t c1 = -3; c1 <= 3; ++c1)
                for (std::int64_t c2 = -5; c2 <= 12; ++c2)
                    check_edges(r, c1, c2);
    }

    TEST_CASE("bound contains the resolved sheaves") {
        for (std::int64_t c2 = 5; c2 <= 30; ++c2)
            for (auto s : admissible_s(c2)) {
                const auto ch = chern_to_character({2, -1, c2, c3_of(c2, s)}, 3);
                CHECK(abs(ch[3]) < ch3_bound(2, -1, ch[2]));
            }
    }
}
