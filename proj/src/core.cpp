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

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

namespace gbent {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxVariables)
        throw DomainError("variable count must be in [1, " + std::to_string(kMaxVariables) + "], got " +
                          std::to_string(n));
}

// Splits on any whitespace; returns tokens as views into text.
std::vector<std::string_view> tokenize(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        if (j > i)
            out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_uint(std::string_view tok, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(std::string("invalid ") + what + ": '" + std::string(tok) + "'");
    return v;
}

} // namespace

ParamQ::ParamQ(std::uint32_t q) : q_(q), h_(0) {
    if (q < 2)
        throw DomainError("modulus q must be at least 2, got " + std::to_string(q));
    if (q % 2 != 0)
        throw OddModulusError("modulus q must be even, got " + std::to_string(q));
    if (q > (1u << 16))
        throw DomainError("modulus q too large: " + std::to_string(q));
    h_ = std::bit_width(q - 1);
}

BooleanFunction::BooleanFunction(int n) : n_(n) {
    check_n(n);
    table_.assign(std::size_t{1} << n, 0);
}

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)) {
    check_n(n);
    if (table_.size() != (std::size_t{1} << n))
        throw DomainError("Boolean truth table must have 2^n entries");
    for (auto& b : table_)
        if (b > 1)
            throw DomainError("Boolean truth table entries must be 0 or 1");
}

BooleanFunction BooleanFunction::operator^(const BooleanFunction& other) const {
    if (other.n_ != n_)
        throw DomainError("XOR of Boolean functions with different variable counts");
    BooleanFunction out(n_);
    for (std::size_t x = 0; x < table_.size(); ++x)
        out.table_[x] = table_[x] ^ other.table_[x];
    return out;
}

BooleanFunction BooleanFunction::complement() const {
    BooleanFunction out(*this);
    for (auto& b : out.table_)
        b ^= 1;
    return out;
}

bool BooleanFunction::is_constant() const noexcept {
    return std::all_of(table_.begin(), table_.end(), [&](std::uint8_t b) { return b == table_.front(); });
}

GeneralizedFunction::GeneralizedFunction(ParamQ params, int n, std::vector<std::uint32_t> table)
    : params_(params), n_(n), table_(std::move(table)) {
    check_n(n);
    if (table_.size() != (std::size_t{1} << n))
        throw DomainError("truth table must have 2^n entries");
    for (std::size_t x = 0; x < table_.size(); ++x)
        if (table_[x] >= params_.q())
            throw DomainError("table value " + std::to_string(table_[x]) + " at index " + std::to_string(x) +
                              " is not below q=" + std::to_string(params_.q()));
}

GeneralizedFunction GeneralizedFunction::lift(const BooleanFunction& f, ParamQ params) {
    std::vector<std::uint32_t> t(f.table().begin(), f.table().end());
    return GeneralizedFunction(params, f.n(), std::move(t));
}

int dot2(Point a, Point b) noexcept { return std::popcount(a & b) & 1; }

std::uint32_t dot_q(std::span<const std::uint8_t> z, std::span<const std::uint32_t> c, std::uint32_t q) {
    if (z.size() != c.size())
        throw DomainError("dot_q: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        acc = (acc + std::uint64_t{z[i]} * (c[i] % q)) % q;
    return static_cast<std::uint32_t>(acc);
}

std::vector<std::uint8_t> to_bits(std::uint32_t value, int width) {
    std::vector<std::uint8_t> bits(width);
    for (int j = 0; j < width; ++j)
        bits[j] = (value >> j) & 1u;
    return bits;
}

BooleanFunction affine_function(int n, Point slope, int c0) {
    std::vector<std::uint8_t> t(std::size_t{1} << n);
    for (Point x = 0; x < t.size(); ++x)
        t[x] = static_cast<std::uint8_t>(dot2(slope, x) ^ (c0 & 1));
    return BooleanFunction(n, std::move(t));
}

GeneralizedFunction parse_table(std::string_view text) {
    auto tokens = tokenize(text);
    if (tokens.size() < 2)
        throw ParseError("missing header 'n q'");
    auto n64 = parse_uint(tokens[0], "variable count");
    auto q64 = parse_uint(tokens[1], "modulus");
    if (n64 < 1 || n64 > kMaxVariables)
        throw ParseError("variable count out of range: " + std::string(tokens[0]));
    if (q64 < 2 || q64 > (1u << 16))
        throw ParseError("modulus out of range: " + std::string(tokens[1]));
    if (q64 % 2 != 0)
        throw OddModulusError("odd modulus q=" + std::to_string(q64) + " is not supported");
    const int n = static_cast<int>(n64);
    const auto q = static_cast<std::uint32_t>(q64);
    const std::size_t expected = std::size_t{1} << n;
    if (tokens.size() - 2 != expected)
        throw ParseError("expected " + std::to_string(expected) + " values, found " +
                         std::to_string(tokens.size() - 2));
    std::vector<std::uint32_t> table(expected);
    for (std::size_t x = 0; x < expected; ++x) {
        auto v = parse_uint(tokens[x + 2], "table value");
        if (v >= q)
            throw ParseError("value " + std::to_string(v) + " at index " + std::to_string(x) + " is not below q=" +
                             std::to_string(q));
        table[x] = static_cast<std::uint32_t>(v);
    }
    return GeneralizedFunction(ParamQ(q), n, std::move(table));
}

std::string serialize_table(const GeneralizedFunction& f) {
    std::ostringstream os;
    os << f.n() << ' ' << f.q() << '\n';
    for (std::size_t x = 0; x < f.size(); ++x)
        os << (x ? " " : "") << f(static_cast<Point>(x));
    os << '\n';
    return os.str();
}

BooleanFunction parse_boolean(std::string_view text) {
    auto f = parse_table(text);
    if (f.q() != 2)
        throw ParseError("expected a Boolean table (q=2), got q=" + std::to_string(f.q()));
    std::vector<std::uint8_t> t(f.table().begin(), f.table().end());
    return BooleanFunction(f.n(), std::move(t));
}

std::string serialize_boolean(const BooleanFunction& f) {
    return serialize_table(GeneralizedFunction::lift(f, ParamQ(2)));
}

} // namespace gbent
