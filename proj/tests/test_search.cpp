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

#include "gbent/gwht.hpp"
#include "gbent/search.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gbent;

TEST_CASE("exact checker agrees with the bucketed route") {
    std::mt19937_64 rng(61);
    for (std::uint32_t q : {2u, 4u, 6u, 8u, 12u})
        for (int n = 1; n <= 4; ++n) {
            ExactGbentChecker check(q, n);
            for (int rep = 0; rep < 50; ++rep) {
                std::vector<std::uint32_t> t(std::size_t{1} << n);
                for (auto& v : t)
                    v = rng() % q;
                const GeneralizedFunction f(ParamQ(q), n, t);
                CHECK(check(f.table()) == is_gbent(f, GbentMode::Exact).gbent);
            }
        }
    ExactGbentChecker check(4, 2);
    const std::vector<std::uint32_t> bent{0, 0, 0, 2};
    CHECK(check(bent));
}

TEST_CASE("enumeration order is little-endian base q") {
    const SearchSpace space{4, 2, true, 0, 0};
    CHECK(space.size() == 256);
    const auto f = function_at(space, 1 + 4 * 3 + 64 * 2);
    CHECK(f == GeneralizedFunction(ParamQ(4), 2, {1, 3, 0, 2}));
    for (std::uint64_t i = 0; i < 256; i += 17)
        CHECK(function_index(function_at(space, i)) == i);
    CHECK(SearchSpace{8, 3, true, 0, 0}.size() == (std::uint64_t{1} << 24));
    CHECK_THROWS_AS(validate(SearchSpace{8, 4, true, 0, 0}), DomainError);
    CHECK_THROWS_AS(validate(SearchSpace{8, 4, false, 0, 0}), DomainError);
}

TEST_CASE("sampling is keyed by seed and index") {
    const SearchSpace a{8, 3, false, 100, 5};
    const SearchSpace b{8, 3, false, 100, 6};
    CHECK(function_at(a, 17) == function_at(a, 17));
    CHECK_FALSE(function_at(a, 17) == function_at(b, 17));
    CHECK_FALSE(function_at(a, 17) == function_at(a, 18));
}

TEST_CASE("shards partition the range") {
    const auto r = shard(10, 3);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == IndexRange{0, 4});
    CHECK(r[1] == IndexRange{4, 7});
    CHECK(r[2] == IndexRange{7, 10});
    CHECK(shard(2, 4)[3].size() == 0);
    CHECK_THROWS_AS(shard(5, 0), DomainError);
}

TEST_CASE("q = 4, n = 2 census") {
    const SearchSpace space{4, 2, true, 0, 0};
    const auto r = enumerate(space, {Predicate::Q4, Predicate::Triangle});
    CHECK(r.evaluated == 256);
    CHECK(r.gbent == 64);
    CHECK(r.float_gbent == 64);
    CHECK(r.float_disagreements == 0);
    CHECK(r.tallies.at("q4").disagreements() == 0);
    CHECK(r.tallies.at("q4").both_true == 64);
    CHECK(r.tallies.at("triangle").disagreements() == 0);
    CHECK(r.witnesses.empty());
    int oracle_count = 0;
    for (std::uint64_t i = 0; i < 256; ++i)
        oracle_count += oracle::gbent_q4_gaussian(function_at(space, i));
    CHECK(oracle_count == 64);
}

TEST_CASE("witnesses record predicate disagreements") {
    const SearchSpace space{6, 2, true, 0, 0};
    const auto r = enumerate(space, {Predicate::Certify});
    CHECK(r.tallies.at("certify").predicate_only == 0);
    std::uint64_t listed = 0;
    for (const auto& w : r.witnesses)
        listed += w.predicate == "certify";
    CHECK(listed == r.tallies.at("certify").disagreements());
    for (const auto& w : r.witnesses)
        CHECK(parse_table(w.table) == function_at(space, w.index));
}

TEST_CASE("merge is associative, commutative, and matches the unsharded run") {
    const SearchSpace space{8, 2, true, 0, 0};
    const std::vector<Predicate> preds{Predicate::Q8Star, Predicate::Product};
    SearchOptions opt;
    opt.float_check = false;
    const auto full = enumerate(space, preds, opt);
    const auto ranges = shard(space.size(), 8);
    std::vector<CensusReport> parts;
    for (const auto& r : ranges)
        parts.push_back(enumerate(space, preds, r, opt));
    CHECK(merge(parts) == full);
    std::vector<CensusReport> reversed(parts.rbegin(), parts.rend());
    CHECK(merge(reversed) == full);
    const auto left = merge(merge(parts[0], parts[1]), parts[2]);
    const auto right = merge(parts[0], merge(parts[1], parts[2]));
    CHECK(left == right);
    CHECK(merge(empty_report(space, preds), full) == full);
    CHECK(enumerate(space, preds, IndexRange{5, 5}, opt) == empty_report(space, preds));
    CHECK_THROWS_AS(merge(parts[0], parts[0]), DomainError);
    CHECK_THROWS_AS(merge(parts[0], enumerate(space, {Predicate::Q8Star}, ranges[1], opt)), DomainError);
    CHECK(run_sharded(space, preds, 1, 1, opt) == full);
    CHECK(run_sharded(space, preds, 8, 4, opt) == full);
    CHECK(full.tallies.at("q8-star").disagreements() == 0);
}

TEST_CASE("sampled reports are independent of shard count") {
    const SearchSpace space{8, 3, false, 2000, 99};
    const std::vector<Predicate> preds{Predicate::Q8StarStar, Predicate::Square};
    const auto one = run_sharded(space, preds, 1, 1);
    CHECK(run_sharded(space, preds, 7, 3) == one);
    CHECK(one.float_disagreements == 0);
    CHECK(one.tallies.at("q8-starstar").disagreements() == 0);
    CHECK(one.tallies.at("square").disagreements() == 0);
}

TEST_CASE("JSON round trip") {
    const SearchSpace space{6, 2, true, 0, 0};
    const auto r = enumerate(space, {Predicate::Certify});
    const auto j = to_json(r);
    CHECK(j.at("agreement").contains("certify"));
    CHECK(census_from_json(nlohmann::json::parse(j.dump())) == r);
}

TEST_CASE("necessity probe") {
    const auto p4 = necessity_probe(SearchSpace{4, 2, true, 0, 0});
    CHECK(p4.applicable);
    CHECK(p4.predicate == "triangle");
    CHECK(p4.gbent == 64);
    CHECK(p4.pass_fraction() == 1.0);
    CHECK(p4.counterexamples.empty());
    const auto p8 = necessity_probe(SearchSpace{8, 2, true, 0, 0});
    CHECK(p8.pass_fraction() == 1.0);
    const auto p6odd = necessity_probe(SearchSpace{6, 1, true, 0, 0});
    CHECK_FALSE(p6odd.applicable);
    const auto p4odd = necessity_probe(SearchSpace{4, 1, true, 0, 0});
    CHECK(p4odd.applicable);
    CHECK(p4odd.predicate == "square");
    const auto j = to_json(p4odd);
    CHECK(j.at("status").get<std::string>() == (p4odd.vacuous ? "vacuously-passed" : "evaluated"));
}
