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

#pragma once

#include "gbent/conditions.hpp"
#include "gbent/core.hpp"
#include "gbent/cyclotomic.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gbent {

/// Exhaustive mode is allowed while q^{2^n} stays at or below this bound.
inline constexpr std::uint64_t kMaxExhaustive = std::uint64_t{1} << 34;

/// Allocation-free exact gbent test for repeated use on one (q, n).
class ExactGbentChecker {
  public:
    ExactGbentChecker(std::uint32_t q, int n);
    bool operator()(std::span<const std::uint32_t> table);

  private:
    std::uint32_t q_;
    int n_;
    const CyclotomicRing* ring_;
    std::vector<std::int64_t> counts_;
    std::vector<std::int64_t> value_;
    std::vector<std::int64_t> conj_;
    std::vector<std::int64_t> product_;
};

struct SearchSpace {
    std::uint32_t q = 4;
    int n = 2;
    bool exhaustive = true;
    /// Sample count in sampled mode.
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    /// Number of indexable functions: q^{2^n} when exhaustive, otherwise samples.
    std::uint64_t size() const;
};

/// Validates q, n and the exhaustive size bound. Throws DomainError.
void validate(const SearchSpace& space);

/// Exhaustive: digits of index in base q, little-endian in x.
/// Sampled: 2^n draws from a generator keyed by (seed, index).
GeneralizedFunction function_at(const SearchSpace& space, std::uint64_t index);

/// Function index of a table in exhaustive enumeration order.
std::uint64_t function_index(const GeneralizedFunction& f);

struct IndexRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;

    std::uint64_t size() const noexcept { return end - begin; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Splits [0, total) into k contiguous ranges of near-equal size.
std::vector<IndexRange> shard(std::uint64_t total, std::uint64_t k);

struct PredicateTally {
    std::uint64_t predicate_true = 0;
    std::uint64_t both_true = 0;
    std::uint64_t both_false = 0;
    std::uint64_t predicate_only = 0;
    std::uint64_t gbent_only = 0;

    std::uint64_t disagreements() const noexcept { return predicate_only + gbent_only; }
    friend bool operator==(const PredicateTally&, const PredicateTally&) = default;
};

struct Witness {
    std::uint64_t index = 0;
    /// Predicate name, or "float" for an exact/float verdict mismatch.
    std::string predicate;
    bool gbent = false;
    bool predicate_value = false;
    std::string table;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct CensusReport {
    std::uint32_t q = 0;
    int n = 0;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::uint64_t space_size = 0;
    std::vector<std::string> predicates;
    /// Sorted, coalesced index ranges covered by this report.
    std::vector<IndexRange> covered;
    std::uint64_t evaluated = 0;
    std::uint64_t gbent = 0;
    std::uint64_t float_gbent = 0;
    std::uint64_t float_disagreements = 0;
    std::map<std::string, PredicateTally> tallies;
    /// Sorted by (index, predicate).
    std::vector<Witness> witnesses;

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

struct SearchOptions {
    double epsilon = kDefaultGbentEpsilon;
    /// Also run the float backend and count verdict mismatches.
    bool float_check = true;
};

/// The identity element for merge over the given space.
CensusReport empty_report(const SearchSpace& space, const std::vector<Predicate>& predicates);

CensusReport enumerate(const SearchSpace& space, const std::vector<Predicate>& predicates, IndexRange range,
                       const SearchOptions& options = {});
CensusReport enumerate(const SearchSpace& space, const std::vector<Predicate>& predicates,
                       const SearchOptions& options = {});

/// Associative, commutative merge; throws DomainError for incompatible or overlapping reports.
CensusReport merge(const CensusReport& a, const CensusReport& b);
CensusReport merge(const std::vector<CensusReport>& reports);

/// Runs k shards on up to `threads` worker threads and merges in shard order.
CensusReport run_sharded(const SearchSpace& space, const std::vector<Predicate>& predicates, std::uint64_t k,
                         unsigned threads, const SearchOptions& options = {});

nlohmann::json to_json(const CensusReport& report);
CensusReport census_from_json(const nlohmann::json& j);

struct ProbeReport {
    std::uint32_t q = 0;
    int n = 0;
    /// "triangle", "square", or empty when no sufficient condition applies.
    std::string predicate;
    bool applicable = false;
    std::uint64_t evaluated = 0;
    std::uint64_t gbent = 0;
    std::uint64_t passed = 0;
    /// No gbent function in the space, so the pass fraction is vacuous.
    bool vacuous = false;
    /// Gbent functions whose canonical representation fails the condition.
    std::vector<std::string> counterexamples;

    double pass_fraction() const noexcept {
        return gbent == 0 ? 1.0 : static_cast<double>(passed) / static_cast<double>(gbent);
    }
};

/// Checks the sufficient condition on the canonical representation of every gbent function.
ProbeReport necessity_probe(const SearchSpace& space, const SearchOptions& options = {});
ProbeReport probe_from_census(const CensusReport& census);
nlohmann::json to_json(const ProbeReport& report);

} // namespace gbent
