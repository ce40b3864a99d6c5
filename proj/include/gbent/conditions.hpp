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

#include "gbent/alpha.hpp"
#include "gbent/core.hpp"
#include "gbent/decompose.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gbent {

/// Which half of W carries the Hadamard row in the odd-n condition.
enum class Branch { None, FirstHalf, SecondHalf };

struct PointMatch {
    Point u = 0;
    bool matched = false;
    /// Matched Sylvester-Hadamard row, when one exists.
    std::optional<std::uint32_t> row;
    /// +1 or -1; 0 when unmatched.
    int sign = 0;
    Branch branch = Branch::None;
};

/// Agreement between the two disjoint-spectra pairings of the odd-n condition.
struct PairingDiagnostics {
    /// W_i W_{i + 2^{p-1}} == 0 for all i < 2^{p-1} and all u.
    bool half_pairing_disjoint = false;
    /// W_i W_{2^p - 1 - i} == 0 for all i < 2^{p-1} and all u.
    bool mirror_pairing_disjoint = false;
    bool agree() const noexcept { return half_pairing_disjoint == mirror_pairing_disjoint; }
};

struct ConditionReport {
    std::string predicate;
    bool overall = false;
    std::vector<PointMatch> per_point;
    /// First failing point (lowest u), if the failure is pointwise.
    std::optional<Point> witness_point;
    /// Combined function index that broke the bent/semibent requirement, if any.
    std::optional<std::uint32_t> failed_combination;
    std::string reason;
    /// Set by check_product_form when its all-bent precondition does not hold.
    bool precondition_failed = false;
    std::optional<PairingDiagnostics> pairing;
};

/// Matches w against +-magnitude * row r of H_{2^k}, k = log2(w.size()).
/// The sign is normalized from w[0]; the row bits come from the entries at powers of two.
std::optional<PointMatch> match_hadamard_row(std::span<const std::int64_t> w, std::int64_t magnitude);

/// All combined functions bent and W(u) = +-2^{n/2} H^{(r)} at every u. Throws for odd n.
ConditionReport check_triangle(const FformRep& rep);
ConditionReport check_triangle(const CombinedSpectra& cs);

/// All combined functions semibent, and at every u one half of W is
/// +-2^{(n+1)/2} H^{(r)}_{2^{p-1}} while the other half is zero.
/// Throws for even n, p = 0, or q != 2^{p+1}.
ConditionReport check_square(const FformRep& rep);

/// Per-level signs s_t with W_{i + 2^{t-1}} = s_t W_i for every i < 2^{t-1}, plus all-bent.
ConditionReport check_recursive_form(const FformRep& rep);
ConditionReport check_recursive_form(const CombinedSpectra& cs);

/// Per-level product equalities; reports precondition_failed unless all combined functions are bent.
ConditionReport check_product_form(const FformRep& rep);
ConditionReport check_product_form(const CombinedSpectra& cs);

/// q = 8, n even: the four functions a2, a0^a2, a1^a2, a0^a1^a2 bent and
/// W_{a0^a2} W_{a1^a2} = W_{a2} W_{a0^a1^a2} at every u.
ConditionReport check_q8_star(const ComponentDecomp& d);

/// q = 8, n odd: the same four functions semibent, and at every u one of the
/// pairs (a2, a0^a2) or (a1^a2, a0^a1^a2) vanishes while the other has magnitude 2^{(n+1)/2}.
ConditionReport check_q8_starstar(const ComponentDecomp& d);

/// q = 4, n even: a1 and a0^a1 bent.
ConditionReport check_q4(const ComponentDecomp& d);

/// Dispatches to check_triangle (even n) or check_square (odd n).
/// Debug builds additionally confirm gbentness of every certified rep.
ConditionReport certify_sufficient(const FformRep& rep);

enum class Predicate { Triangle, Square, Recursive, Product, Q8Star, Q8StarStar, Q4, Certify };

std::string to_string(Predicate p);
Predicate parse_predicate(const std::string& name);
std::vector<Predicate> all_predicates();

/// Throws DomainError with the reason when the predicate's (q, n) preconditions fail.
void check_applicable(Predicate p, std::uint32_t q, int n);
bool is_applicable(Predicate p, std::uint32_t q, int n);

/// Evaluates a predicate on the canonical decomposition of f.
ConditionReport evaluate_predicate(Predicate p, const GeneralizedFunction& f);

} // namespace gbent
