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

// Brute-force reference implementations used only by the tests.

#include "gbent/core.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

inline int parity(std::uint32_t v) { return __builtin_popcount(v) & 1; }

/// Quadratic-time Walsh transform straight from the definition.
inline std::vector<std::int64_t> wht(const gbent::BooleanFunction& f) {
    std::vector<std::int64_t> out(f.size());
    for (std::uint32_t u = 0; u < f.size(); ++u)
        for (std::uint32_t x = 0; x < f.size(); ++x)
            out[u] += (f(x) ^ parity(u & x)) ? -1 : 1;
    return out;
}

/// Normalized GWHT in long double, summing unit vectors one x at a time.
inline std::vector<std::complex<long double>> gwht(const gbent::GeneralizedFunction& f) {
    const long double tau = 2.0L * std::numbers::pi_v<long double>;
    const long double scale = 1.0L / std::sqrt(std::ldexp(1.0L, f.n()));
    std::vector<std::complex<long double>> out(f.size());
    for (std::uint32_t u = 0; u < f.size(); ++u) {
        std::complex<long double> acc = 0;
        for (std::uint32_t x = 0; x < f.size(); ++x) {
            const long double angle = tau * f(x) / f.q();
            const long double s = parity(u & x) ? -1.0L : 1.0L;
            acc += s * std::complex<long double>(std::cos(angle), std::sin(angle));
        }
        out[u] = acc * scale;
    }
    return out;
}

inline bool gbent_numeric(const gbent::GeneralizedFunction& f, long double tol = 1e-9L) {
    for (const auto& h : gwht(f))
        if (std::abs(std::norm(h) - 1.0L) > tol)
            return false;
    return true;
}

/// Exact q = 4 test in the Gaussian integers: H(u) = sum i^{f(x)} (-1)^{u.x}.
inline bool gbent_q4_gaussian(const gbent::GeneralizedFunction& f) {
    static constexpr int re[4] = {1, 0, -1, 0};
    static constexpr int im[4] = {0, 1, 0, -1};
    for (std::uint32_t u = 0; u < f.size(); ++u) {
        std::int64_t a = 0, b = 0;
        for (std::uint32_t x = 0; x < f.size(); ++x) {
            const int s = parity(u & x) ? -1 : 1;
            a += s * re[f(x) % 4];
            b += s * im[f(x) % 4];
        }
        if (a * a + b * b != (std::int64_t{1} << f.n()))
            return false;
    }
    return true;
}

inline bool bent(const gbent::BooleanFunction& f) {
    if (f.n() % 2)
        return false;
    const std::int64_t m = std::int64_t{1} << (f.n() / 2);
    for (auto w : wht(f))
        if (w != m && w != -m)
            return false;
    return true;
}

inline bool semibent(const gbent::BooleanFunction& f) {
    const std::int64_t m = std::int64_t{1} << ((f.n() + 1) / 2);
    for (auto w : wht(f))
        if (w != 0 && w != m && w != -m)
            return false;
    return true;
}

/// Numeric zeta^k.
inline std::complex<double> zeta(std::uint32_t q, std::int64_t k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / q;
    return {std::cos(angle), std::sin(angle)};
}

} // namespace oracle
