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
#include "gbent/decompose.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace gbent {

/// A bijection on [0, 2^n).
class PermutationTable {
  public:
    /// Throws DomainError unless image is a bijection on [0, 2^n).
    PermutationTable(int n, std::vector<Point> image);

    static PermutationTable identity(int n);

    int n() const noexcept { return n_; }
    Point operator()(Point y) const { return image_[y]; }
    std::span<const Point> image() const noexcept { return image_; }

  private:
    int n_;
    std::vector<Point> image_;
};

/// Index-list format: "n" followed by the 2^n images in order.
PermutationTable parse_permutation(std::string_view text);
std::string serialize_permutation(const PermutationTable& sigma);

/// f(x) = (q/2) a(x); gbent exactly when a is bent.
GeneralizedFunction trivial_gbent(const BooleanFunction& a, std::uint32_t q);

/// Boolean x . sigma(y) on 2n variables; x occupies the low n index bits.
BooleanFunction maiorana_mcfarland(const PermutationTable& sigma);

/// f(x, y) = (q/2) x . sigma(y) + g(y) mod q on 2n variables, x in the low n index bits.
GeneralizedFunction gmmf(const PermutationTable& sigma, const GeneralizedFunction& g, std::uint32_t q);

/// Level signs for select_components; Minus forces the next component to the constant 1.
enum class LevelSign { Plus, Minus };

std::vector<LevelSign> parse_signs(std::string_view text);

/// Builds (q/2) a + a0 + sum_{t>=1} 2^t c_t with constants c_t = (signs[t-1] == Minus).
/// Requires q = 2^{p+1} with p = signs.size() + 1, a bent and a ^ a0 bent.
FformRep select_components(const BooleanFunction& a, const BooleanFunction& a0, const std::vector<LevelSign>& signs,
                           std::uint32_t q);

/// Replaces component `which` by the affine function c0 ^ slope . x.
ComponentDecomp affine_variant(const ComponentDecomp& d, std::size_t which, int c0, Point slope);

PermutationTable random_permutation(int n, std::mt19937_64& rng);
BooleanFunction random_boolean(int n, std::mt19937_64& rng);
GeneralizedFunction random_generalized(std::uint32_t q, int n, std::mt19937_64& rng);

} // namespace gbent
