#include <doctest.h>

#include <random>

#include "chowcalc/chow.hpp"
#include "chowcalc/error.hpp"
#include "oracles.hpp"

using namespace chowcalc;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational::from_integers(p, d); }

ChernCharacter p3(Rational a, Rational b, Rational c, Rational d) { return {3, {a, b, c, d}}; }
ChernCharacter p2(Rational a, Rational b, Rational c) { return {2, {a, b, c}}; }

ErrorCode code_of(auto &&fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::io;
}

} // namespace

TEST_SUITE("rational") {
    TEST_CASE("reduced form and text") {
        CHECK(q(6, 4).to_string() == "3/2");
        CHECK(q(-6, -4).to_string() == "3/2");
        CHECK(q(4, -6).to_string() == "-2/3");
        CHECK(q(10, 5).to_string() == "2");
        CHECK(q(10, 5).denominator() == 1);
        CHECK(Rational(0).to_string() == "0");
    }

    TEST_CASE("parse") {
        CHECK(Rational::parse("71/6") == q(71, 6));
        CHECK(Rational::parse("-9/2") == q(-9, 2));
        CHECK(Rational::parse("12") == q(12));
        CHECK(Rational::parse("4/6") == q(2, 3));
        CHECK(Rational::parse("010") == q(10));
        CHECK(Rational::parse("09/007") == q(9, 7));
        CHECK(Rational::parse("-0") == q(0));
        CHECK_FALSE(Rational::parse("1/0"));
        CHECK_FALSE(Rational::parse(""));
        CHECK_FALSE(Rational::parse("1.5"));
        CHECK_FALSE(Rational::parse("--1"));
        CHECK_FALSE(Rational::parse("1/-2"));
        CHECK_FALSE(Rational::parse("abc"));
    }

    TEST_CASE("floor and ceil") {
        CHECK(q(7, 2).floor() == 3);
        CHECK(q(7, 2).ceil() == 4);
        CHECK(q(-7, 2).floor() == -4);
        CHECK(q(-7, 2).ceil() == -3);
        CHECK(q(3).floor() == 3);
        CHECK(q(3).ceil() == 3);
    }

    TEST_CASE("no overflow on large values") {
        Rational big = pow(q(10), 40) / q(3);
        CHECK(big * q(3) == pow(q(10), 40));
        CHECK((big - big).is_zero());
    }

    TEST_CASE("division by zero is an error") {
        CHECK(code_of([] { return q(1) / q(0); }) == ErrorCode::invalid_argument);
    }
}

TEST_SUITE("chow_calculus") {
    TEST_CASE("todd classes") {
        CHECK(todd(2).components == std::vector<Rational>{q(1), q(3, 2), q(1)});
        CHECK(todd(3).components == std::vector<Rational>{q(1), q(2), q(11, 6), q(1)});
        CHECK(code_of([] { return todd(4); }) == ErrorCode::unsupported_dimension);
        CHECK(code_of([] { return todd(1); }) == ErrorCode::unsupported_dimension);
    }

    TEST_CASE("line bundle characters") {
        CHECK(ch_line_bundle(3, 0) == p3(q(1), q(0), q(0), q(0)));
        CHECK(ch_line_bundle(3, 2) == p3(q(1), q(2), q(2), q(4, 3)));
        CHECK(ch_line_bundle(2, -1) == p2(q(1), q(-1), q(1, 2)));
        CHECK(code_of([] { return ch_line_bundle(5, 1); }) == ErrorCode::unsupported_dimension);
    }

    TEST_CASE("character invariants") {
        CHECK(code_of([] { return ChernCharacter(3, {q(1), q(0)}); }) == ErrorCode::invalid_argument);
        CHECK(code_of([] { return ChernCharacter(2, {q(1, 2), q(0), q(0)}); }) == ErrorCode::invalid_argument);
    }

    TEST_CASE("mul") {
        auto x = p3(q(2), q(-1), q(-9, 2), q(71, 6));
        CHECK(mul(ch_line_bundle(3, 0), x) == x);
        CHECK(mul(p3(q(1), q(1), q(1, 2), q(1, 6)), p3(q(1), q(-1), q(1, 2), q(-1, 6))) == ch_line_bundle(3, 0));
        CHECK(mul(p2(q(2), q(0), q(-5)), ch_line_bundle(2, -1)) == p2(q(2), q(-2), q(-4)));
        CHECK(code_of([&] { return mul(x, ch_line_bundle(2, 1)); }) == ErrorCode::dimension_mismatch);
    }

    TEST_CASE("twist") {
        auto x = p3(q(2), q(-1), q(-9, 2), q(71, 6));
        CHECK(twist(x, 0) == x);
        CHECK(twist(twist(x, 3), -5) == twist(x, -2));
        CHECK(twist(p2(q(2), q(0), q(-5)), -1) == p2(q(2), q(-2), q(-4)));
    }

    TEST_CASE("twist agrees with the expanded formula") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = trial % 2 ? 3 : 2;
            auto x = oracle::random_character(rng, n);
            auto k = oracle::random_int(rng, -7, 7);
            CHECK(twist(x, k) == oracle::twist_expanded(x, k));
        }
    }

    TEST_CASE("dual") {
        CHECK(dual(p3(q(1), q(1), q(1, 2), q(1, 6))) == p3(q(1), q(-1), q(1, 2), q(-1, 6)));
        CHECK(dual(p3(q(2), q(-1), q(-9, 2), q(71, 6))) == p3(q(2), q(1), q(-9, 2), q(-71, 6)));
        std::mt19937_64 rng(5);
        for (int i = 0; i < 50; ++i) {
            auto x = oracle::random_character(rng, 3);
            CHECK(dual(dual(x)) == x);
            CHECK(twist(twist(x, 4), -4) == x);
        }
    }

    TEST_CASE("euler characteristic") {
        CHECK(euler_characteristic(ch_line_bundle(3, 2)) == q(10));
        CHECK(euler_characteristic(p2(q(1), q(0), q(0))) == q(1));
        CHECK(euler_characteristic(p2(q(2), q(0), q(-5))) == q(-3));
        // chi(O(k)) counts monomials for k >= 0
        for (std::int64_t k = 0; k <= 8; ++k) {
            CHECK(euler_characteristic(ch_line_bundle(2, k)) == q(oracle::monomial_count(2, k)));
            CHECK(euler_characteristic(ch_line_bundle(3, k)) == q(oracle::monomial_count(3, k)));
        }
        // Serre duality: chi(O(-4)) on P^3 is -h^3 = -1
        CHECK(euler_characteristic(ch_line_bundle(3, -4)) == q(-1));
        CHECK(euler_characteristic(ch_line_bundle(2, -3)) == q(1));
    }

    TEST_CASE("mul is commutative and associative, line bundles multiply") {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 100; ++i) {
            const int n = i % 2 ? 3 : 2;
            auto a = oracle::random_character(rng, n);
            auto b = oracle::random_character(rng, n);
            auto c = oracle::random_character(rng, n);
            CHECK(mul(a, b) == mul(b, a));
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            auto k1 = oracle::random_int(rng, -9, 9), k2 = oracle::random_int(rng, -9, 9);
            CHECK(mul(ch_line_bundle(n, k1), ch_line_bundle(n, k2)) == ch_line_bundle(n, k1 + k2));
        }
    }

    TEST_CASE("restriction") {
        CHECK(restrict_to_hyperplane(p3(q(2), q(-1), q(-9, 2), q(71, 6))) == p2(q(2), q(-1), q(-9, 2)));
        CHECK(restrict_to_hyperplane(ch_line_bundle(3, 0)) == ch_line_bundle(2, 0));
        CHECK(code_of([] { return restrict_to_hyperplane(ch_line_bundle(2, 0)); }) == ErrorCode::dimension_mismatch);
        std::mt19937_64 rng(23);
        for (int i = 0; i < 50; ++i) {
            auto x = oracle::random_character(rng, 3);
            auto k = oracle::random_int(rng, -6, 6);
            CHECK(restrict_to_hyperplane(twist(x, k)) == twist(restrict_to_hyperplane(x), k));
        }
    }

    TEST_CASE("pushforward") {
        CHECK(pushforward_from_hyperplane(ch_line_bundle(3, 0)) == p3(q(0), q(1), q(-1, 2), q(1, 6)));
        CHECK(pushforward_from_hyperplane(p3(q(2), q(-1), q(-9, 2), q(71, 6))) == p3(q(0), q(2), q(-2), q(-11, 3)));
        std::mt19937_64 rng(29);
        for (int i = 0; i < 50; ++i) {
            auto x = oracle::random_character(rng, 3);
            CHECK(pushforward_from_hyperplane(x) == sub(x, twist(x, -1)));
            CHECK(euler_characteristic(pushforward_from_hyperplane(x))
                  == euler_characteristic(restrict_to_hyperplane(x)));
        }
    }

    TEST_CASE("chern class conversion") {
        CHECK(chern_to_character({2, -1, 5, 19}, 3) == p3(q(2), q(-1), q(-9, 2), q(71, 6)));
        CHECK(chern_to_character({4, 0, 0, 0}, 3) == p3(q(4), q(0), q(0), q(0)));
        CHECK(chern_to_character({2, 0, 7, 0}, 2) == p2(q(2), q(0), q(-7)));
        CHECK(character_to_chern(p3(q(2), q(-1), q(-9, 2), q(71, 6))) == ChernClasses{2, -1, 5, 19});
        CHECK(character_to_chern(ch_line_bundle(3, 0)) == ChernClasses{1, 0, 0, 0});
        CHECK(code_of([] { return character_to_chern(p2(q(2), q(0), q(1, 3))); }) == ErrorCode::integrality);
        // rank zero (torsion) data converts too
        CHECK(character_to_chern(pushforward_from_hyperplane(ch_line_bundle(3, 0))) == ChernClasses{0, 1, 1, 1});
    }

    TEST_CASE("chern conversion round trip") {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 300; ++i) {
            ChernClasses c{oracle::random_int(rng, -5, 5), oracle::random_int(rng, -20, 20),
                           oracle::random_int(rng, -50, 50), oracle::random_int(rng, -200, 200)};
            CHECK(character_to_chern(chern_to_character(c, 3)) == c);
            ChernClasses planar = c;
            planar.c3 = 0;
            CHECK(character_to_chern(chern_to_character(planar, 2)) == planar);
        }
    }
}
