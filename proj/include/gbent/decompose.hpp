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

#include "gbent/core.hpp"

#include <cstdint>
#include <vector>

namespace gbent {

/// Binary digits of f: f(x) = sum_i 2^i a_i(x), i < h.
struct ComponentDecomp {
    ParamQ params;
    std::vector<BooleanFunction> components;

    int n() const { return components.front().n(); }
};

/// f(x) = (q/2) a(x) + sum_{i<p} 2^i a_i(x) (mod q).
struct FformRep {
    ParamQ params;
    BooleanFunction a;
    std::vector<BooleanFunction> low;

    int n() const noexcept { return a.n(); }
    int p() const noexcept { return static_cast<int>(low.size()); }
};

/// f(x) = sum_i c_i b_i(x) (mod q) with arbitrary coefficients c_i in Z_q.
struct GeneralFormSpec {
    ParamQ params;
    std::vector<std::uint32_t> coefficients;
    std::vector<BooleanFunction> terms;
};

ComponentDecomp to_components(const GeneralizedFunction& f);

/// Throws DomainError naming the first x whose digit sum reaches q.
GeneralizedFunction from_components(const ComponentDecomp& d);

GeneralizedFunction evaluate_general_form(const GeneralFormSpec& spec);

/// Canonical extraction: a = floor(f / (q/2)), low digits of f mod (q/2), p = h - 1.
FformRep to_fform(const GeneralizedFunction& f);

/// Evaluates (q/2) a + sum 2^i a_i mod q. Throws DomainError if p > h - 1
/// or component variable counts differ.
GeneralizedFunction from_fform(const FformRep& rep);

/// The Boolean function a ^ (XOR of low[j] over the set bits j of i).
BooleanFunction combined_function(const FformRep& rep, std::uint32_t i);

} // namespace gbent
