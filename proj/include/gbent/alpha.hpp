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
#include "gbent/cyclotomic.hpp"
#include "gbent/decompose.hpp"
#include "gbent/gwht.hpp"
#include "gbent/wht.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace gbent {

/// Largest p accepted by solve_alpha.
inline constexpr int kMaxAlphaLog = 12;
/// Batch route memory cap: 2^p combined spectra of 2^n entries each.
inline constexpr int kMaxBatchLog = 26;

/// Entry (r, c) of the Sylvester-Hadamard matrix: (-1)^{popcount(r & c)}.
inline int hadamard_entry(std::uint32_t r, std::uint32_t c) noexcept { return dot2(r, c) ? -1 : 1; }

/// Row accessor for H_{2^k}; entries are computed on demand.
struct HadamardIndex {
    int size_log = 0;

    std::uint32_t size() const noexcept { return 1u << size_log; }
    int entry(std::uint32_t r, std::uint32_t c) const noexcept { return hadamard_entry(r, c); }
    std::vector<int> row(std::uint32_t r) const;
};

/// Right-hand side of H Lambda = B: entry i is zeta^{z_i (.) (1, 2, ..., 2^{p-1})}.
struct BVector {
    std::uint32_t q = 0;
    int p = 0;
    std::vector<std::uint32_t> exponents;
    std::vector<CyclotomicInt> exact;
};

BVector make_b_vector(std::uint32_t q, int p);

/// Solution of H_{2^p} Lambda = B.
///
/// scaled[i] = 2^p alpha_i lies in Z[zeta_q]; values[i] is the numeric alpha_i.
struct AlphaVector {
    std::uint32_t q = 0;
    int p = 0;
    std::vector<CyclotomicInt> scaled;
    std::vector<std::complex<double>> values;
};

AlphaVector solve_alpha(std::uint32_t q, int p);

/// True when H_{2^p} (scaled / 2^p) == B holds exactly.
bool alpha_system_holds(const AlphaVector& alpha);

/// Theta_i(x) = (-1)^{XOR over set bits j of i of components[j](x)}.
int theta_eval(std::span<const BooleanFunction> components, std::uint32_t i, Point x);

/// sum_i alpha_i Theta_i(x) as an exact element of Z[zeta_q].
CyclotomicInt reconstructed_value(std::span<const BooleanFunction> components, const AlphaVector& alpha, Point x);

struct ReconstructionResult {
    /// max_x |zeta^{f_low(x)} - sum_i alpha_i Theta_i(x)| with numeric alpha.
    double max_deviation = 0.0;
    /// Exact comparison 2^p zeta^{f_low(x)} == sum_i scaled_i Theta_i(x) at every x.
    bool exact_zero = false;
};

/// f_low = sum 2^j low_j, the part of f without the (q/2) a term.
ReconstructionResult reconstruct_zeta(const FformRep& rep, const AlphaVector& alpha);
/// f_low = sum 2^j a_j over all components; requires alpha.p == component count.
ReconstructionResult reconstruct_zeta(const ComponentDecomp& d, const AlphaVector& alpha);

/// Full Walsh spectra of the 2^p functions a ^ z_i.(a_0, ..., a_{p-1}).
struct CombinedSpectra {
    int n = 0;
    int p = 0;
    std::vector<WalshSpectrum> spectra;
};

CombinedSpectra combined_spectra(const FformRep& rep);

/// Unnormalized W_i(u) for i < 2^p.
std::vector<std::int64_t> w_vector(const CombinedSpectra& cs, Point u);

/// S = H_{2^p} W.
std::vector<std::int64_t> s_vector(std::span<const std::int64_t> w);

/// Exact GWHT through H(u) = sum_i alpha_i W_i(u).
GwhtSpectrum gwht_linear(const FformRep& rep);

/// Normalized H(u) = sum_i alpha_i W_i(u) 2^{-n/2} in floating point.
std::complex<double> gwht_linear_at(const CombinedSpectra& cs, const AlphaVector& alpha, Point u);
std::complex<double> gwht_linear_at(const FformRep& rep, Point u);

/// Largest component count accepted by the implicit subset-sum formula.
inline constexpr int kMaxImplicitLog = 5;

/// Literal evaluation of the triple subset sum over I, J subset I, K subset complement(I).
std::complex<double> gwht_implicit_oracle(const ComponentDecomp& d, Point u);
/// The same sum carried out in Z[zeta_q].
GwhtSpectrum gwht_implicit_exact(const ComponentDecomp& d);

/// (sum S_k cos(2 pi k/q))^2 + (sum S_k sin(2 pi k/q))^2.
double abs_cos_sin_form(std::span<const double> s, std::uint32_t q);
/// sum S_k^2 + 2 sum_{k>=1} cos(2 pi k/q) sum_i S_i S_{i+k}.
double abs_correlation_form(std::span<const double> s, std::uint32_t q);

struct MagnitudeViaS {
    std::vector<std::int64_t> w;
    std::vector<std::int64_t> s;
    /// |H_f(u)|^2 from each of the two expansions.
    double from_correlation = 0.0;
    double from_cos_sin = 0.0;
};

MagnitudeViaS magnitude_via_S(const CombinedSpectra& cs, std::uint32_t q, Point u);
MagnitudeViaS magnitude_via_S(const FformRep& rep, Point u);

} // namespace gbent
