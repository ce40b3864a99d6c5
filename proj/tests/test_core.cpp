// Copyright 2026 The gbent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbent/core.hpp"

#include <doctest.h>

#include <random>

using namespace gbent;

TEST_CASE("ParamQ derives h and rejects bad moduli") {
    CHECK(ParamQ(2).h() == 1);
    CHECK(ParamQ(4).h() == 2);
    CHECK(ParamQ(6).h() == 3);
    CHECK(ParamQ(8).h() == 3);
    CHECK(ParamQ(10).h() == 4);
    CHECK(ParamQ(16).h() == 4);
    CHECK(ParamQ(6).half() == 3);
    CHECK(ParamQ(12).is_power_of_two() == false);
    CHECK_THROWS_AS(ParamQ(5), OddModulusError);
    CHECK_THROWS_AS(ParamQ(0), DomainError);
}

TEST_CASE("dot2 is bilinear over Z2") {
    for (Point a = 0; a < 16; ++a)
        for (Point b = 0; b < 16; ++b)
            for (Point c = 0; c < 16; ++c)
                CHECK(dot2(a ^ b, c) == (dot2(a, c) ^ dot2(b, c)));
    CHECK(dot2(0b1011, 0b0011) == 0);
    CHECK(dot2(0b1011, 0b0001) == 1);
}

TEST_CASE("dot_q with powers of two rebuilds the integer mod q") {
    for (std::uint32_t q : {2u, 4u, 6u, 8u, 12u}) {
        const int h = ParamQ(q).h();
        std::vector<std::uint32_t> c;
        for (int i = 0; i < h; ++i)
            c.push_back(1u << i);
        for (std::uint32_t v = 0; v < (1u << h); ++v)
            CHECK(dot_q(to_bits(v, h), c, q) == v % q);
    }
    const std::vector<std::uint8_t> z{1, 0};
    const std::vector<std::uint32_t> c{1};
    CHECK_THROWS_AS(dot_q(z, c, 4), DomainError);
}

TEST_CASE("to_bits is least significant bit first") {
    CHECK(to_bits(6, 4) == std::vector<std::uint8_t>{0, 1, 1, 0});
}

TEST_CASE("Boolean operations") {
    const BooleanFunction f(2, {0, 1, 1, 0});
    const BooleanFunction g(2, {0, 0, 0, 1});
    CHECK((f ^ g) == BooleanFunction(2, {0, 1, 1, 1}));
    CHECK(f.complement() == BooleanFunction(2, {1, 0, 0, 1}));
    CHECK(BooleanFunction(3).is_constant());
    CHECK_FALSE(f.is_constant());
    CHECK(affine_function(2, 0b11, 0) == f);
    CHECK(affine_function(2, 0, 1) == BooleanFunction(2).complement());
    CHECK_THROWS_AS(BooleanFunction(2, {0, 1, 2, 0}), DomainError);
    CHECK_THROWS_AS(BooleanFunction(2, {0, 1}), DomainError);
}

TEST_CASE("truth table text format") {
    const auto f = parse_table("2 6\n0 1 5 3\n");
    CHECK(f.n() == 2);
    CHECK(f.q() == 6);
    CHECK(f(2) == 5);
    CHECK(serialize_table(f) == "2 6\n0 1 5 3\n");
    CHECK(parse_table("  2 6 0\n1\t5 3  ") == f);
}

TEST_CASE("parse/serialize round trip") {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {2u, 4u, 6u, 8u, 10u, 12u, 16u})
        for (int n = 1; n <= 6; ++n) {
            std::vector<std::uint32_t> t(std::size_t{1} << n);
            for (auto& v : t)
                v = rng() % q;
            const GeneralizedFunction f(ParamQ(q), n, t);
            CHECK(parse_table(serialize_table(f)) == f);
        }
    const BooleanFunction b(3, {0, 1, 1, 0, 1, 0, 0, 1});
    CHECK(parse_boolean(serialize_boolean(b)) == b);
}

TEST_CASE("malformed tables are rejected") {
    CHECK_THROWS_AS(parse_table(""), ParseError);
    CHECK_THROWS_AS(parse_table("2 4\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_table("2 4\n0 1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_table("2 4\n0 1 2 4\n"), ParseError);
    CHECK_THROWS_AS(parse_table("2 5\n0 1 2 3\n"), OddModulusError);
    CHECK_THROWS_AS(parse_table("2 4\n0 x 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_table("31 4\n"), ParseError);
    CHECK_THROWS_AS(parse_table("2 -4\n0 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_boolean("1 4\n0 3\n"), ParseError);
}

TEST_CASE("lift embeds a Boolean function") {
    const BooleanFunction b(1, {0, 1});
    const auto f = GeneralizedFunction::lift(b, ParamQ(8));
    CHECK(f.q() == 8);
    CHECK(f(1) == 1);
}
