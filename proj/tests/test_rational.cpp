// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eucalc/errors.hpp"
#include "eucalc/rational.hpp"

using namespace eucalc;

TEST_CASE("parsing and printing round trip") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(parse_rational("0")) == "0");
    CHECK(to_string(parse_rational(" 7 ")) == "7");
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("a"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
}

TEST_CASE("rational arithmetic is a field") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
    for (int i = 0; i < 500; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK(a * (b + c) == a * b + a * c);
        if (b != 0) CHECK((a / b) * b == a);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("canonical representation") {
    Rational q(6, -4);
    q.canonicalize();
    CHECK(q.get_den() > 0);
    CHECK(to_string(q) == "-3/2");
}

TEST_CASE("vectors") {
    RatVector v = parse_rat_vector("1/2, -3, 0");
    REQUIRE(v.size() == 3);
    CHECK(v[0] == Rational(1, 2));
    CHECK(to_string(v) == "1/2,-3,0");
    CHECK(dot(v, v) == Rational(1, 4) + 9);
    CHECK_THROWS_AS(dot(v, RatVector{}), InputError);
}
