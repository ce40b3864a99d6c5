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

#include "gbent/decompose.hpp"

#include <string>

namespace gbent {

namespace {

void check_components(const std::vector<BooleanFunction>& fs, int n) {
    for (const auto& f : fs)
        if (f.n() != n)
            throw DomainError("component functions have different variable counts");
}

} // namespace

ComponentDecomp to_components(const GeneralizedFunction& f) {
    const int h = f.params().h();
    std::vector<std::vector<std::uint8_t>> digits(h, std::vector<std::uint8_t>(f.size()));
    for (std::size_t x = 0; x < f.size(); ++x)
        for (int i = 0; i < h; ++i)
            digits[i][x] = (f(static_cast<Point>(x)) >> i) & 1u;
    ComponentDecomp d{f.params(), {}};
    d.components.reserve(h);
    for (auto& t : digits)
        d.components.emplace_back(f.n(), std::move(t));
    return d;
}

GeneralizedFunction from_components(const ComponentDecomp& d) {
    if (d.components.empty())
        throw DomainError("decomposition has no components");
    if (static_cast<int>(d.components.size()) > d.params.h())
        throw DomainError("decomposition has more than h components");
    const int n = d.n();
    check_components(d.components, n);
    std::vector<std::uint32_t> table(std::size_t{1} << n, 0);
    for (std::size_t x = 0; x < table.size(); ++x) {
        std::uint32_t v = 0;
        for (std::size_t i = 0; i < d.components.size(); ++i)
            v |= std::uint32_t{d.components[i](static_cast<Point>(x))} << i;
        if (v >= d.params.q())
            throw DomainError("components sum to " + std::to_string(v) + " >= q at x=" + std::to_string(x));
        table[x] = v;
    }
    return GeneralizedFunction(d.params, n, std::move(table));
}

GeneralizedFunction evaluate_general_form(const GeneralFormSpec& spec) {
    if (spec.terms.empty() || spec.terms.size() != spec.coefficients.size())
        throw DomainError("general form needs one coefficient per term");
    const int n = spec.terms.front().n();
    check_components(spec.terms, n);
    const std::uint64_t q = spec.params.q();
    std::vector<std::uint32_t> table(std::size_t{1} << n, 0);
    for (std::size_t x = 0; x < table.size(); ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < spec.terms.size(); ++i)
            acc += (spec.coefficients[i] % q) * spec.terms[i](static_cast<Point>(x));
        table[x] = static_cast<std::uint32_t>(acc % q);
    }
    return GeneralizedFunction(spec.params, n, std::move(table));
}

FformRep to_fform(const GeneralizedFunction& f) {
    const std::uint32_t half = f.params().half();
    const int p = f.params().h() - 1;
    std::vector<std::uint8_t> a(f.size());
    std::vector<std::vector<std::uint8_t>> low(p, std::vector<std::uint8_t>(f.size()));
    for (std::size_t x = 0; x < f.size(); ++x) {
        const std::uint32_t v = f(static_cast<Point>(x));
        a[x] = static_cast<std::uint8_t>(v / half);
        const std::uint32_t r = v % half;
        for (int i = 0; i < p; ++i)
            low[i][x] = (r >> i) & 1u;
    }
    FformRep rep{f.params(), BooleanFunction(f.n(), std::move(a)), {}};
    rep.low.reserve(p);
    for (auto& t : low)
        rep.low.emplace_back(f.n(), std::move(t));
    return rep;
}

GeneralizedFunction from_fform(const FformRep& rep) {
    if (rep.p() > rep.params.h() - 1)
        throw DomainError("fform has p=" + std::to_string(rep.p()) + " > h-1");
    check_components(rep.low, rep.n());
    const std::uint64_t q = rep.params.q();
    std::vector<std::uint32_t> table(rep.a.size());
    for (std::size_t x = 0; x < table.size(); ++x) {
        const auto pt = static_cast<Point>(x);
        std::uint64_t v = std::uint64_t{rep.params.half()} * rep.a(pt);
        for (int i = 0; i < rep.p(); ++i)
            v += std::uint64_t{rep.low[i](pt)} << i;
        table[x] = static_cast<std::uint32_t>(v % q);
    }
    return GeneralizedFunction(rep.params, rep.n(), std::move(table));
}

BooleanFunction combined_function(const FformRep& rep, std::uint32_t i) {
    if (i >> rep.p())
        throw DomainError("combination index out of range");
    BooleanFunction out = rep.a;
    for (int j = 0; j < rep.p(); ++j)
        if ((i >> j) & 1u)
            out = out ^ rep.low[j];
    return out;
}

} // namespace gbent
