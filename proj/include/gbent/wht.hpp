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
#include <span>
#include <vector>

namespace gbent {

/// Unnormalized Walsh spectrum: coeffs[u] = sum_x (-1)^{f(x) ^ u.x}.
/// The normalized value is coeffs[u] * 2^{-n/2}; the factor is kept symbolic.
struct WalshSpectrum {
    int n = 0;
    std::vector<std::int64_t> coeffs;

    std::int64_t operator[](Point u) const { return coeffs[u]; }
    std::size_t size() const noexcept { return coeffs.size(); }
    double normalized(Point u) const;

    friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

/// In-place radix-2 butterfly over a length-2^k sequence, index ascending.
/// Applying it twice multiplies the sequence by 2^k.
void butterfly(std::span<std::int64_t> data);

WalshSpectrum fwht(const BooleanFunction& f);

/// sum_u coeffs[u]^2 == 4^n.
bool satisfies_parseval(const WalshSpectrum& s);

struct SpectralVerdict {
    bool value = false;
    /// Empty when the verdict is meaningful; otherwise why it was forced to false.
    std::string reason;
};

/// |coeffs[u]| == 2^{n/2} for all u. Odd n yields false with a reason.
SpectralVerdict is_bent(const WalshSpectrum& s);
SpectralVerdict is_bent(const BooleanFunction& f);

/// Every coeffs[u] in {0, +-2^{(n+1)/2}}. Throws DomainError for even n.
bool is_semibent(const WalshSpectrum& s);
bool is_semibent(const BooleanFunction& f);

/// coeffs_f[u] * coeffs_g[u] == 0 for all u. Throws DomainError on size mismatch.
bool are_disjoint_spectra(const WalshSpectrum& f, const WalshSpectrum& g);
bool are_disjoint_spectra(const BooleanFunction& f, const BooleanFunction& g);

/// Spectrum of x -> g(x ^ alpha) ^ flip: (-1)^flip (-1)^{u.alpha} coeffs[u].
WalshSpectrum translate_spectrum(const WalshSpectrum& s, Point alpha, int flip);

/// Spectrum of x -> g(x) ^ alpha.x ^ flip: (-1)^flip coeffs[u ^ alpha].
WalshSpectrum add_affine_spectrum(const WalshSpectrum& s, Point alpha, int flip);

/// 2^{n/2} when n is even; throws for odd n.
std::int64_t bent_magnitude(int n);

} // namespace gbent
