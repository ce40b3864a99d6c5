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

#include "gbent/wht.hpp"

#include <cmath>
#include <numbers>

namespace gbent {

namespace {

// Walsh-style transforms of the indicators of each output value, built lazily.
template <typename Visit>
void for_each_value_transform(const GeneralizedFunction& f, Visit&& visit) {
    std::vector<std::uint8_t> present(f.q(), 0);
    for (auto v : f.table())
        present[v] = 1;
    std::vector<std::int64_t> t(f.size());
    for (std::uint32_t k = 0; k < f.q(); ++k) {
        if (!present[k])
            continue;
        for (std::size_t x = 0; x < f.size(); ++x)
            t[x] = f(static_cast<Point>(x)) == k ? 1 : 0;
        butterfly(t);
        visit(k, std::span<const std::int64_t>(t));
    }
}

} // namespace

GwhtSpectrum make_spectrum(int n, std::uint32_t q, std::vector<CyclotomicInt> exact) {
    GwhtSpectrum s{n, q, std::move(exact), {}};
    const double scale = 1.0 / std::sqrt(std::ldexp(1.0, n));
    s.numeric.reserve(s.exact.size());
    for (const auto& z : s.exact)
        s.numeric.push_back(z.numeric() * scale);
    return s;
}

GwhtSpectrum gwht_direct(const GeneralizedFunction& f) {
    const auto& ring = CyclotomicRing::ring(f.q());
    std::vector<CyclotomicInt> exact;
    exact.reserve(f.size());
    std::vector<std::int64_t> counts(f.q());
    for (std::size_t u = 0; u < f.size(); ++u) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t x = 0; x < f.size(); ++x)
            counts[f(static_cast<Point>(x))] += dot2(static_cast<Point>(u), static_cast<Point>(x)) ? -1 : 1;
        CyclotomicInt acc(ring);
        for (std::uint32_t k = 0; k < f.q(); ++k)
            acc.add_zeta_power(k, counts[k]);
        exact.push_back(std::move(acc));
    }
    return make_spectrum(f.n(), f.q(), std::move(exact));
}

GwhtSpectrum gwht_bucketed(const GeneralizedFunction& f) {
    const auto& ring = CyclotomicRing::ring(f.q());
    std::vector<CyclotomicInt> exact(f.size(), CyclotomicInt(ring));
    for_each_value_transform(f, [&](std::uint32_t k, std::span<const std::int64_t> t) {
        for (std::size_t u = 0; u < t.size(); ++u)
            exact[u].add_zeta_power(k, t[u]);
    });
    return make_spectrum(f.n(), f.q(), std::move(exact));
}

std::vector<std::complex<double>> gwht_float(const GeneralizedFunction& f) {
    std::vector<std::complex<double>> out(f.size());
    const double scale = 1.0 / std::sqrt(std::ldexp(1.0, f.n()));
    const double q = static_cast<double>(f.q());
    for_each_value_transform(f, [&](std::uint32_t k, std::span<const std::int64_t> t) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / q;
        const std::complex<double> w(std::cos(angle) * scale, std::sin(angle) * scale);
        for (std::size_t u = 0; u < t.size(); ++u)
            out[u] += static_cast<double>(t[u]) * w;
    });
    return out;
}

double parseval_ratio(const std::vector<std::complex<double>>& normalized) {
    double sum = 0.0;
    for (const auto& z : normalized)
        sum += std::norm(z);
    return sum / static_cast<double>(normalized.size());
}

GbentReport is_gbent_exact(const GwhtSpectrum& s) {
    GbentReport r;
    r.mode = GbentMode::Exact;
    const std::int64_t target = std::int64_t{1} << s.n;
    for (std::size_t u = 0; u < s.exact.size(); ++u) {
        const CyclotomicInt norm = s.exact[u] * s.exact[u].conj();
        if (!norm.equals_integer(target) && !r.first_failure)
            r.first_failure = static_cast<Point>(u);
        const double dev = std::abs(std::abs(s.numeric[u]) - 1.0);
        if (dev > r.worst_deviation) {
            r.worst_deviation = dev;
            r.worst_point = static_cast<Point>(u);
        }
    }
    r.gbent = !r.first_failure.has_value();
    return r;
}

GbentReport is_gbent_float(const std::vector<std::complex<double>>& normalized, double epsilon) {
    GbentReport r;
    r.mode = GbentMode::Float;
    for (std::size_t u = 0; u < normalized.size(); ++u) {
        const double dev = std::abs(std::abs(normalized[u]) - 1.0);
        if (dev > r.worst_deviation) {
            r.worst_deviation = dev;
            r.worst_point = static_cast<Point>(u);
        }
    }
    r.gbent = r.worst_deviation <= epsilon;
    return r;
}

GbentReport is_gbent(const GeneralizedFunction& f, GbentMode mode, double epsilon) {
    if (mode == GbentMode::Exact)
        return is_gbent_exact(gwht_bucketed(f));
    return is_gbent_float(gwht_float(f), epsilon);
}

std::string to_string(GbentMode mode) { return mode == GbentMode::Exact ? "exact" : "float"; }

GbentMode parse_gbent_mode(const std::string& text) {
    if (text == "exact")
        return GbentMode::Exact;
    if (text == "float")
        return GbentMode::Float;
    throw DomainError("unknown mode '" + text + "' (expected exact or float)");
}

} // namespace gbent
