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

#include "gbent/construct.hpp"

#include "gbent/wht.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace gbent {

PermutationTable::PermutationTable(int n, std::vector<Point> image) : n_(n), image_(std::move(image)) {
    if (n < 1 || n > kMaxVariables)
        throw DomainError("permutation variable count out of range");
    if (image_.size() != (std::size_t{1} << n))
        throw DomainError("permutation must list 2^n images");
    std::vector<std::uint8_t> seen(image_.size(), 0);
    for (auto v : image_) {
        if (v >= image_.size() || seen[v])
            throw DomainError("permutation table is not a bijection (value " + std::to_string(v) + ")");
        seen[v] = 1;
    }
}

PermutationTable PermutationTable::identity(int n) {
    std::vector<Point> image(std::size_t{1} << n);
    std::iota(image.begin(), image.end(), Point{0});
    return PermutationTable(n, std::move(image));
}

PermutationTable parse_permutation(std::string_view text) {
    std::istringstream is{std::string(text)};
    long long n = 0;
    if (!(is >> n) || n < 1 || n > kMaxVariables)
        throw ParseError("permutation file must start with a variable count");
    std::vector<Point> image;
    long long v = 0;
    while (is >> v) {
        if (v < 0)
            throw ParseError("negative permutation entry");
        image.push_back(static_cast<Point>(v));
    }
    if (!is.eof())
        throw ParseError("invalid token in permutation file");
    if (image.size() != (std::size_t{1} << n))
        throw ParseError("permutation must list 2^n images");
    try {
        return PermutationTable(static_cast<int>(n), std::move(image));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_permutation(const PermutationTable& sigma) {
    std::ostringstream os;
    os << sigma.n() << '\n';
    for (std::size_t y = 0; y < sigma.image().size(); ++y)
        os << (y ? " " : "") << sigma.image()[y];
    os << '\n';
    return os.str();
}

GeneralizedFunction trivial_gbent(const BooleanFunction& a, std::uint32_t q) {
    const ParamQ params(q);
    std::vector<std::uint32_t> table(a.size());
    for (std::size_t x = 0; x < a.size(); ++x)
        table[x] = params.half() * a(static_cast<Point>(x));
    return GeneralizedFunction(params, a.n(), std::move(table));
}

BooleanFunction maiorana_mcfarland(const PermutationTable& sigma) {
    const int n = sigma.n();
    if (2 * n > kMaxVariables)
        throw DomainError("Maiorana-McFarland function too large");
    const Point mask = (Point{1} << n) - 1;
    std::vector<std::uint8_t> t(std::size_t{1} << (2 * n));
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
        const Point x = static_cast<Point>(idx) & mask;
        const Point y = static_cast<Point>(idx) >> n;
        t[idx] = static_cast<std::uint8_t>(dot2(x, sigma(y)));
    }
    return BooleanFunction(2 * n, std::move(t));
}

GeneralizedFunction gmmf(const PermutationTable& sigma, const GeneralizedFunction& g, std::uint32_t q) {
    if (sigma.n() != g.n())
        throw DomainError("GMMF needs sigma and g on the same number of variables");
    if (g.q() != q)
        throw DomainError("GMMF: g is valued in Z_" + std::to_string(g.q()) + ", expected Z_" + std::to_string(q));
    const ParamQ params(q);
    const BooleanFunction a = maiorana_mcfarland(sigma);
    const int n = sigma.n();
    std::vector<std::uint32_t> table(a.size());
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        const Point y = static_cast<Point>(idx) >> n;
        table[idx] = (params.half() * a(static_cast<Point>(idx)) + g(y)) % q;
    }
    return GeneralizedFunction(params, 2 * n, std::move(table));
}

std::vector<LevelSign> parse_signs(std::string_view text) {
    std::vector<LevelSign> out;
    for (char c : text) {
        if (c == '+')
            out.push_back(LevelSign::Plus);
        else if (c == '-')
            out.push_back(LevelSign::Minus);
        else if (c != ',' && c != ' ')
            throw ParseError(std::string("invalid sign character '") + c + "'");
    }
    return out;
}

FformRep select_components(const BooleanFunction& a, const BooleanFunction& a0, const std::vector<LevelSign>& signs,
                           std::uint32_t q) {
    const ParamQ params(q);
    const int p = static_cast<int>(signs.size()) + 1;
    if (!params.is_power_of_two() || q != (1u << (p + 1)))
        throw DomainError("select_components needs q = 2^{p+1} with p = " + std::to_string(p) + ", got q=" +
                          std::to_string(q));
    if (a.n() != a0.n())
        throw DomainError("a and a0 must have the same number of variables");
    if (!is_bent(a).value)
        throw DomainError("select_components: a is not bent");
    if (!is_bent(a ^ a0).value)
        throw DomainError("select_components: a ^ a0 is not bent");
    FformRep rep{params, a, {a0}};
    for (auto s : signs) {
        const BooleanFunction zero(a.n());
        rep.low.push_back(s == LevelSign::Minus ? zero.complement() : zero);
    }
    return rep;
}

ComponentDecomp affine_variant(const ComponentDecomp& d, std::size_t which, int c0, Point slope) {
    if (which >= d.components.size())
        throw DomainError("component index out of range");
    ComponentDecomp out = d;
    out.components[which] = affine_function(d.n(), slope, c0);
    return out;
}

PermutationTable random_permutation(int n, std::mt19937_64& rng) {
    std::vector<Point> image(std::size_t{1} << n);
    std::iota(image.begin(), image.end(), Point{0});
    std::shuffle(image.begin(), image.end(), rng);
    return PermutationTable(n, std::move(image));
}

BooleanFunction random_boolean(int n, std::mt19937_64& rng) {
    std::vector<std::uint8_t> t(std::size_t{1} << n);
    for (auto& b : t)
        b = static_cast<std::uint8_t>(rng() & 1u);
    return BooleanFunction(n, std::move(t));
}

GeneralizedFunction random_generalized(std::uint32_t q, int n, std::mt19937_64& rng) {
    std::vector<std::uint32_t> t(std::size_t{1} << n);
    for (auto& v : t)
        v = static_cast<std::uint32_t>(rng() % q);
    return GeneralizedFunction(ParamQ(q), n, std::move(t));
}

} // namespace gbent
