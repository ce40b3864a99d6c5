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

#include "gbent/wht.hpp"

#include <cmath>
#include <cstdlib>

namespace gbent {

double WalshSpectrum::normalized(Point u) const {
    return static_cast<double>(coeffs[u]) / std::sqrt(std::ldexp(1.0, n));
}

void butterfly(std::span<std::int64_t> data) {
    const std::size_t len = data.size();
    for (std::size_t half = 1; half < len; half <<= 1) {
        for (std::size_t block = 0; block < len; block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                const std::int64_t a = data[i];
                const std::int64_t b = data[i + half];
                data[i] = a + b;
                data[i + half] = a - b;
            }
        }
    }
}

WalshSpectrum fwht(const BooleanFunction& f) {
    WalshSpectrum s{f.n(), std::vector<std::int64_t>(f.size())};
    for (std::size_t x = 0; x < f.size(); ++x)
        s.coeffs[x] = f(static_cast<Point>(x)) ? -1 : 1;
    butterfly(s.coeffs);
    return s;
}

bool satisfies_parseval(const WalshSpectrum& s) {
    std::int64_t sum = 0;
    for (auto c : s.coeffs)
        sum += c * c;
    return sum == (std::int64_t{1} << (2 * s.n));
}

std::int64_t bent_magnitude(int n) {
    if (n % 2 != 0)
        throw DomainError("bent magnitude undefined for odd n");
    return std::int64_t{1} << (n / 2);
}

SpectralVerdict is_bent(const WalshSpectrum& s) {
    if (s.n % 2 != 0)
        return {false, "bent functions exist only for even n"};
    const auto mag = bent_magnitude(s.n);
    for (auto c : s.coeffs)
        if (std::llabs(c) != mag)
            return {false, {}};
    return {true, {}};
}

SpectralVerdict is_bent(const BooleanFunction& f) { return is_bent(fwht(f)); }

bool is_semibent(const WalshSpectrum& s) {
    if (s.n % 2 == 0)
        throw DomainError("semibent test requires odd n");
    const std::int64_t mag = std::int64_t{1} << ((s.n + 1) / 2);
    for (auto c : s.coeffs)
        if (c != 0 && std::llabs(c) != mag)
            return false;
    return true;
}

bool is_semibent(const BooleanFunction& f) { return is_semibent(fwht(f)); }

bool are_disjoint_spectra(const WalshSpectrum& f, const WalshSpectrum& g) {
    if (f.n != g.n || f.size() != g.size())
        throw DomainError("disjoint spectra test needs equal variable counts");
    for (std::size_t u = 0; u < f.size(); ++u)
        if (f.coeffs[u] != 0 && g.coeffs[u] != 0)
            return false;
    return true;
}

bool are_disjoint_spectra(const BooleanFunction& f, const BooleanFunction& g) {
    if (f.n() != g.n())
        throw DomainError("disjoint spectra test needs equal variable counts");
    return are_disjoint_spectra(fwht(f), fwht(g));
}

WalshSpectrum translate_spectrum(const WalshSpectrum& s, Point alpha, int flip) {
    if (alpha >= s.size())
        throw DomainError("translation vector out of range");
    WalshSpectrum out{s.n, std::vector<std::int64_t>(s.size())};
    for (Point u = 0; u < s.size(); ++u) {
        const int sign = (flip & 1) ^ dot2(u, alpha);
        out.coeffs[u] = sign ? -s.coeffs[u] : s.coeffs[u];
    }
    return out;
}

WalshSpectrum add_affine_spectrum(const WalshSpectrum& s, Point alpha, int flip) {
    if (alpha >= s.size())
        throw DomainError("affine slope out of range");
    WalshSpectrum out{s.n, std::vector<std::int64_t>(s.size())};
    for (Point u = 0; u < s.size(); ++u)
        out.coeffs[u] = (flip & 1) ? -s.coeffs[u ^ alpha] : s.coeffs[u ^ alpha];
    return out;
}

} // namespace gbent
