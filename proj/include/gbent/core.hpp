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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gbent {

/// Index of a point of Z_2^n. Bit j of the integer is coordinate x_{j+1}.
using Point = std::uint32_t;

/// Largest variable count accepted by the truth-table format.
inline constexpr int kMaxVariables = 30;

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when a truth table declares an odd modulus.
class OddModulusError : public ParseError {
  public:
    using ParseError::ParseError;
};

/// Raised when arguments violate an operation's preconditions.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Modulus q together with h = ceil(log2 q), so that 2^{h-1} < q <= 2^h.
class ParamQ {
  public:
    /// Throws OddModulusError for odd q and DomainError for q < 2.
    explicit ParamQ(std::uint32_t q);

    std::uint32_t q() const noexcept { return q_; }
    int h() const noexcept { return h_; }
    std::uint32_t half() const noexcept { return q_ / 2; }
    bool is_power_of_two() const noexcept { return (q_ & (q_ - 1)) == 0; }

    friend bool operator==(const ParamQ&, const ParamQ&) = default;

  private:
    std::uint32_t q_;
    int h_;
};

class BooleanFunction {
  public:
    /// The all-zero function in n variables.
    explicit BooleanFunction(int n);
    BooleanFunction(int n, std::vector<std::uint8_t> table);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return table_.size(); }
    std::uint8_t operator()(Point x) const { return table_[x]; }
    std::span<const std::uint8_t> table() const noexcept { return table_; }

    BooleanFunction operator^(const BooleanFunction& other) const;
    BooleanFunction complement() const;
    bool is_constant() const noexcept;

    friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

  private:
    int n_;
    std::vector<std::uint8_t> table_;
};

class GeneralizedFunction {
  public:
    GeneralizedFunction(ParamQ params, int n, std::vector<std::uint32_t> table);

    /// The q-valued image of a Boolean function (values 0 and 1).
    static GeneralizedFunction lift(const BooleanFunction& f, ParamQ params);

    const ParamQ& params() const noexcept { return params_; }
    std::uint32_t q() const noexcept { return params_.q(); }
    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return table_.size(); }
    std::uint32_t operator()(Point x) const { return table_[x]; }
    std::span<const std::uint32_t> table() const noexcept { return table_; }

    friend bool operator==(const GeneralizedFunction&, const GeneralizedFunction&) = default;

  private:
    ParamQ params_;
    int n_;
    std::vector<std::uint32_t> table_;
};

/// Inner product over Z_2: parity of popcount(a & b).
int dot2(Point a, Point b) noexcept;

/// x (.) y = sum z_i c_i mod q. Throws DomainError on length mismatch.
std::uint32_t dot_q(std::span<const std::uint8_t> z, std::span<const std::uint32_t> c, std::uint32_t q);

/// The bit vector of an integer, least significant bit first.
std::vector<std::uint8_t> to_bits(std::uint32_t value, int width);

/// Affine Boolean function x -> c0 ^ (slope . x).
BooleanFunction affine_function(int n, Point slope, int c0);

/// Text format: header "n q" then 2^n values in [0, q), natural index order.
GeneralizedFunction parse_table(std::string_view text);
std::string serialize_table(const GeneralizedFunction& f);

/// A q = 2 table read as a Boolean function.
BooleanFunction parse_boolean(std::string_view text);
std::string serialize_boolean(const BooleanFunction& f);

} // namespace gbent
