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

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace gbent {

/// Generalized Walsh-Hadamard spectrum.
///
/// exact[u] is the unnormalized sum_x zeta^{f(x)} (-1)^{u.x} in Z[zeta_q].
/// numeric[u] is the normalized value exact[u] * 2^{-n/2}; it is filled from
/// the exact value by every exact route, so two routes that agree exactly
/// also agree bit for bit here.
struct GwhtSpectrum {
    int n = 0;
    std::uint32_t q = 0;
    std::vector<CyclotomicInt> exact;
    std::vector<std::complex<double>> numeric;

    std::size_t size() const noexcept { return numeric.size(); }
};

/// Builds the numeric mirror from exact values.
GwhtSpectrum make_spectrum(int n, std::uint32_t q, std::vector<CyclotomicInt> exact);

/// Literal double sum over x for each u.
GwhtSpectrum gwht_direct(const GeneralizedFunction& f);

/// sum_k zeta^k T_k(u), T_k the Walsh-style transform of the indicator of f = k.
GwhtSpectrum gwht_bucketed(const GeneralizedFunction& f);

/// Floating-point only backend (bucketed, complex doubles, normalized).
std::vector<std::complex<double>> gwht_float(const GeneralizedFunction& f);

/// sum_u |H(u)|^2 / 2^n; equals 1 up to rounding.
double parseval_ratio(const std::vector<std::complex<double>>& normalized);

enum class GbentMode { Exact, Float };

inline constexpr double kDefaultGbentEpsilon = 1e-6;

struct GbentReport {
    bool gbent = false;
    GbentMode mode = GbentMode::Exact;
    /// Point with the largest deviation from |H| = 1.
    Point worst_point = 0;
    /// | |H(worst)| - 1 |, from the numeric value in both modes.
    double worst_deviation = 0.0;
    /// Exact mode: first point where N(u) != 2^n, if any.
    std::optional<Point> first_failure;
};

/// Exact: H(u) * conj(H(u)) == 2^n in Z[zeta_q] for all u.
GbentReport is_gbent_exact(const GwhtSpectrum& s);
/// Float: max_u | |H(u)| - 1 | <= epsilon.
GbentReport is_gbent_float(const std::vector<std::complex<double>>& normalized, double epsilon);

GbentReport is_gbent(const GeneralizedFunction& f, GbentMode mode, double epsilon = kDefaultGbentEpsilon);

std::string to_string(GbentMode mode);
GbentMode parse_gbent_mode(const std::string& text);

} // namespace gbent
