#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "support.hpp"
#include "trop/semifield.hpp"

using testsup::make_rng;
using testsup::rat;
using trop::FloatNum;
using trop::FloatScalar;
using trop::RatScalar;

using R = RatScalar;

TEST_CASE("addition is max, zero neutral, idempotent") {
    CHECK(add(R::of(2), R::of(-1)) == R::of(2));
    CHECK(add(R::zero(), R::of(5)) == R::of(5));
    CHECK(add(R::of(3), R::of(3)) == R::of(3));
}

TEST_CASE("multiplication is coefficient sum with absorbing zero") {
    CHECK(mul(R::of(1), R::of(-2)) == R::of(-1));
    CHECK(mul(R::zero(), R::of(7)) == R::zero());
    auto rng = make_rng(11);
    for (int t = 0; t < 50; ++t) {
        const R x = testsup::random_scalar<R>(rng, -50, 50, 0.2);
        CHECK(mul(R::one(), x) == x);
    }
}

TEST_CASE("inversion negates and is an involution") {
    CHECK(inv(R::of(2)) == R::of(-2));
    CHECK(inv(R::one()) == R::one());
    CHECK(inv(R::of(-3)) == R::of(3));
    CHECK(inv(inv(rat(7, 3))) == rat(7, 3));
    CHECK_THROWS_AS(inv(R::zero()), trop::DomainError);
}

TEST_CASE("order: bottom element, strictness, reflexivity") {
    CHECK(leq(R::zero(), R::of(-100)));
    CHECK_FALSE(leq(R::of(1), R::of(0)));
    CHECK(leq(R::of(4), R::of(4)));
}

TEST_CASE("order is total and consistent with addition") {
    auto rng = make_rng(12);
    for (int t = 0; t < 200; ++t) {
        const R a = testsup::random_scalar<R>(rng, -20, 20, 0.15);
        const R b = testsup::random_scalar<R>(rng, -20, 20, 0.15);
        CHECK((leq(a, b) || leq(b, a)));
        CHECK(leq(a, b) == (add(a, b) == b));
    }
}

TEST_CASE("distributivity over random triples") {
    auto rng = make_rng(13);
    for (int t = 0; t < 200; ++t) {
        const R a = testsup::random_scalar<R>(rng, -20, 20, 0.2);
        const R b = testsup::random_scalar<R>(rng, -20, 20, 0.2);
        const R c = testsup::random_scalar<R>(rng, -20, 20, 0.2);
        CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
    }
}

TEST_CASE("exact inverses cancel, including fractions") {
    auto rng = make_rng(14);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    for (int t = 0; t < 200; ++t) {
        const R a = rat(num(rng), den(rng));
        CHECK(mul(a, inv(a)) == R::one());
    }
}

TEST_CASE("addition and multiplication are isotone, inversion antitone") {
    auto rng = make_rng(15);
    for (int t = 0; t < 200; ++t) {
        const R a = testsup::random_scalar<R>(rng, -20, 20, 0.1);
        const R b = testsup::random_scalar<R>(rng, -20, 20, 0.1);
        const R c = testsup::random_scalar<R>(rng, -20, 20, 0.1);
        if (!leq(a, b)) continue;
        CHECK(leq(mul(a, c), mul(b, c)));
        CHECK(leq(add(a, c), add(b, c)));
        if (!a.is_zero() && !b.is_zero()) CHECK(leq(inv(b), inv(a)));
    }
}

TEST_CASE("text round trip and aliases") {
    CHECK(R::parse("-inf").is_zero());
    CHECK(R::parse(".").is_zero());
    CHECK(R::parse("@").is_zero());
    CHECK(R::zero().str() == "-inf");

    CHECK(R::parse("7") == R::of(7));
    CHECK(R::parse("-3") == R::of(-3));
    CHECK(R::parse("1.5") == rat(3, 2));
    CHECK(R::parse("-0.25") == rat(-1, 4));
    CHECK(R::parse("2/6") == rat(1, 3));
    CHECK(R::parse("-2/3").str() == "-2/3");
    CHECK(R::of(4).str() == "4");

    CHECK_THROWS_AS(R::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(R::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(R::parse("1.2.3"), std::invalid_argument);

    auto rng = make_rng(16);
    std::uniform_int_distribution<long> num(-99, 99);
    std::uniform_int_distribution<long> den(1, 9);
    for (int t = 0; t < 100; ++t) {
        const R a = rat(num(rng), den(rng));
        CHECK(R::parse(a.str()) == a);
    }
}

TEST_CASE("float mode compares within the configured tolerance") {
    const double saved = FloatNum::epsilon;
    FloatNum::epsilon = 1e-9;
    using F = FloatScalar;
    CHECK(F(1.0) == F(1.0 + 1e-12));
    CHECK(leq(F(1.0 + 1e-12), F(1.0)));
    CHECK_FALSE(leq(F(1.0 + 1e-6), F(1.0)));
    CHECK(add(F(2.0), F(3.0)) == F(3.0));
    CHECK(mul(F(2.5), F(0.5)) == F(3.0));
    CHECK(F::parse("1/2") == F(0.5));
    FloatNum::epsilon = saved;
}
