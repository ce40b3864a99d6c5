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

#include "gbent/alpha.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace gbent {

namespace {

void check_p(int p) {
    if (p < 0 || p > kMaxAlphaLog)
        throw DomainError("p must be in [0, " + std::to_string(kMaxAlphaLog) + "], got " + std::to_string(p));
}

std::uint32_t low_value(std::span<const BooleanFunction> components, Point x) {
    std::uint32_t v = 0;
    for (std::size_t j = 0; j < components.size(); ++j)
        v |= std::uint32_t{components[j](x)} << j;
    return v;
}

ReconstructionResult reconstruct(std::span<const BooleanFunction> components, int n, const AlphaVector& alpha) {
    if (static_cast<int>(components.size()) != alpha.p)
        throw DomainError("alpha solved for p=" + std::to_string(alpha.p) + " but " +
                          std::to_string(components.size()) + " components given");
    const auto& ring = CyclotomicRing::ring(alpha.q);
    const std::int64_t scale = std::int64_t{1} << alpha.p;
    ReconstructionResult r{0.0, true};
    const std::size_t size = std::size_t{1} << n;
    for (std::size_t xi = 0; xi < size; ++xi) {
        const auto x = static_cast<Point>(xi);
        const std::uint32_t k = low_value(components, x);

        CyclotomicInt lhs(ring);
        std::complex<double> numeric{0.0, 0.0};
        for (std::uint32_t i = 0; i < alpha.scaled.size(); ++i) {
            const int theta = theta_eval(components, i, x);
            if (theta > 0) {
                lhs += alpha.scaled[i];
                numeric += alpha.values[i];
            } else {
                lhs -= alpha.scaled[i];
                numeric -= alpha.values[i];
            }
        }
        CyclotomicInt target(ring);
        target.add_zeta_power(k, scale);
        if (!(lhs == target))
            r.exact_zero = false;
        r.max_deviation = std::max(r.max_deviation, std::abs(numeric - ring.numeric_power(k)));
    }
    return r;
}

} // namespace

std::vector<int> HadamardIndex::row(std::uint32_t r) const {
    std::vector<int> out(size());
    for (std::uint32_t c = 0; c < size(); ++c)
        out[c] = entry(r, c);
    return out;
}

BVector make_b_vector(std::uint32_t q, int p) {
    check_p(p);
    const auto& ring = CyclotomicRing::ring(q);
    std::vector<std::uint32_t> weights(p);
    for (int j = 0; j < p; ++j)
        weights[j] = 1u << j;
    BVector b{q, p, {}, {}};
    const std::uint32_t size = 1u << p;
    for (std::uint32_t i = 0; i < size; ++i) {
        const auto z = to_bits(i, p);
        const std::uint32_t e = dot_q(z, weights, q);
        b.exponents.push_back(e);
        CyclotomicInt v(ring);
        v.add_zeta_power(e, 1);
        b.exact.push_back(std::move(v));
    }
    return b;
}

AlphaVector solve_alpha(std::uint32_t q, int p) {
    const BVector b = make_b_vector(q, p);
    const auto& ring = CyclotomicRing::ring(q);
    const std::uint32_t size = 1u << p;
    const double inv = std::ldexp(1.0, -p);
    AlphaVector alpha{q, p, {}, {}};
    alpha.scaled.reserve(size);
    alpha.values.reserve(size);
    for (std::uint32_t i = 0; i < size; ++i) {
        CyclotomicInt acc(ring);
        for (std::uint32_t k = 0; k < size; ++k)
            acc.add_zeta_power(b.exponents[k], hadamard_entry(i, k));
        alpha.values.push_back(acc.numeric() * inv);
        alpha.scaled.push_back(std::move(acc));
    }
    return alpha;
}

bool alpha_system_holds(const AlphaVector& alpha) {
    const BVector b = make_b_vector(alpha.q, alpha.p);
    const auto& ring = CyclotomicRing::ring(alpha.q);
    const std::uint32_t size = 1u << alpha.p;
    for (std::uint32_t k = 0; k < size; ++k) {
        CyclotomicInt acc(ring);
        for (std::uint32_t i = 0; i < size; ++i) {
            if (hadamard_entry(k, i) > 0)
                acc += alpha.scaled[i];
            else
                acc -= alpha.scaled[i];
        }
        if (!(acc == b.exact[k] * static_cast<std::int64_t>(size)))
            return false;
    }
    return true;
}

int theta_eval(std::span<const BooleanFunction> components, std::uint32_t i, Point x) {
    if (components.size() < 32 && (i >> components.size()) != 0)
        throw DomainError("Theta index out of range");
    return dot2(i, low_value(components, x)) ? -1 : 1;
}

CyclotomicInt reconstructed_value(std::span<const BooleanFunction> components, const AlphaVector& alpha, Point x) {
    if (static_cast<int>(components.size()) != alpha.p)
        throw DomainError("alpha/component count mismatch");
    CyclotomicInt acc(CyclotomicRing::ring(alpha.q));
    for (std::uint32_t i = 0; i < alpha.scaled.size(); ++i) {
        if (theta_eval(components, i, x) > 0)
            acc += alpha.scaled[i];
        else
            acc -= alpha.scaled[i];
    }
    return acc.divide_exact(std::int64_t{1} << alpha.p);
}

ReconstructionResult reconstruct_zeta(const FformRep& rep, const AlphaVector& alpha) {
    if (alpha.q != rep.params.q())
        throw DomainError("alpha solved for a different q");
    return reconstruct(rep.low, rep.n(), alpha);
}

ReconstructionResult reconstruct_zeta(const ComponentDecomp& d, const AlphaVector& alpha) {
    if (alpha.q != d.params.q())
        throw DomainError("alpha solved for a different q");
    return reconstruct(d.components, d.n(), alpha);
}

CombinedSpectra combined_spectra(const FformRep& rep) {
    if (rep.p() + rep.n() > kMaxBatchLog)
        throw DomainError("p + n exceeds the batch memory cap of " + std::to_string(kMaxBatchLog));
    CombinedSpectra cs{rep.n(), rep.p(), {}};
    const std::uint32_t size = 1u << rep.p();
    cs.spectra.reserve(size);
    for (std::uint32_t i = 0; i < size; ++i)
        cs.spectra.push_back(fwht(combined_function(rep, i)));
    return cs;
}

std::vector<std::int64_t> w_vector(const CombinedSpectra& cs, Point u) {
    std::vector<std::int64_t> w(cs.spectra.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = cs.spectra[i][u];
    return w;
}

std::vector<std::int64_t> s_vector(std::span<const std::int64_t> w) {
    // Row k of H dotted with W is the k-th output of the butterfly.
    std::vector<std::int64_t> s(w.begin(), w.end());
    butterfly(s);
    return s;
}

GwhtSpectrum gwht_linear(const FformRep& rep) {
    const AlphaVector alpha = solve_alpha(rep.params.q(), rep.p());
    const CombinedSpectra cs = combined_spectra(rep);
    const auto& ring = CyclotomicRing::ring(rep.params.q());
    const std::int64_t scale = std::int64_t{1} << rep.p();
    std::vector<CyclotomicInt> exact;
    exact.reserve(rep.a.size());
    for (std::size_t u = 0; u < rep.a.size(); ++u) {
        CyclotomicInt acc(ring);
        for (std::size_t i = 0; i < cs.spectra.size(); ++i)
            acc += alpha.scaled[i] * cs.spectra[i][static_cast<Point>(u)];
        exact.push_back(acc.divide_exact(scale));
    }
    return make_spectrum(rep.n(), rep.params.q(), std::move(exact));
}

std::complex<double> gwht_linear_at(const CombinedSpectra& cs, const AlphaVector& alpha, Point u) {
    if (alpha.p != cs.p)
        throw DomainError("alpha/spectra p mismatch");
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < cs.spectra.size(); ++i)
        acc += alpha.values[i] * static_cast<double>(cs.spectra[i][u]);
    return acc / std::sqrt(std::ldexp(1.0, cs.n));
}

std::complex<double> gwht_linear_at(const FformRep& rep, Point u) {
    return gwht_linear_at(combined_spectra(rep), solve_alpha(rep.params.q(), rep.p()), u);
}

namespace {

struct SubsetSpectra {
    int h = 0;
    std::vector<WalshSpectrum> spectra; // indexed by subset mask of components
};

SubsetSpectra subset_spectra(const ComponentDecomp& d) {
    const int h = static_cast<int>(d.components.size());
    if (h > kMaxImplicitLog)
        throw DomainError("implicit formula limited to h <= " + std::to_string(kMaxImplicitLog));
    SubsetSpectra ss{h, {}};
    for (std::uint32_t mask = 0; mask < (1u << h); ++mask) {
        BooleanFunction g(d.n());
        for (int t = 0; t < h; ++t)
            if ((mask >> t) & 1u)
                g = g ^ d.components[t];
        ss.spectra.push_back(fwht(g));
    }
    return ss;
}

// Integer inner sum over J subset I, K subset complement(I) of (-1)^{|J|} W_{J u K}(u).
std::int64_t inner_sum(const SubsetSpectra& ss, std::uint32_t subset, Point u) {
    const std::uint32_t full = (1u << ss.h) - 1;
    const std::uint32_t comp = full & ~subset;
    std::int64_t acc = 0;
    for (std::uint32_t j = subset;; j = (j - 1) & subset) {
        const int sign = (std::popcount(j) & 1) ? -1 : 1;
        for (std::uint32_t k = comp;; k = (k - 1) & comp) {
            acc += sign * ss.spectra[j | k][u];
            if (k == 0)
                break;
        }
        if (j == 0)
            break;
    }
    return acc;
}

std::int64_t subset_exponent(std::uint32_t subset) {
    // sum_{i in I} 2^i is the mask itself.
    return static_cast<std::int64_t>(subset);
}

} // namespace

std::complex<double> gwht_implicit_oracle(const ComponentDecomp& d, Point u) {
    const SubsetSpectra ss = subset_spectra(d);
    const double q = static_cast<double>(d.params.q());
    const double norm = 1.0 / std::sqrt(std::ldexp(1.0, d.n()));
    std::complex<double> acc{0.0, 0.0};
    for (std::uint32_t subset = 0; subset < (1u << ss.h); ++subset) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(subset_exponent(subset)) / q;
        const std::complex<double> zeta_pow(std::cos(angle), std::sin(angle));
        acc += zeta_pow * (static_cast<double>(inner_sum(ss, subset, u)) * norm);
    }
    return acc * std::ldexp(1.0, -ss.h);
}

GwhtSpectrum gwht_implicit_exact(const ComponentDecomp& d) {
    const SubsetSpectra ss = subset_spectra(d);
    const auto& ring = CyclotomicRing::ring(d.params.q());
    const std::size_t size = std::size_t{1} << d.n();
    std::vector<CyclotomicInt> exact;
    exact.reserve(size);
    for (std::size_t ui = 0; ui < size; ++ui) {
        CyclotomicInt acc(ring);
        for (std::uint32_t subset = 0; subset < (1u << ss.h); ++subset)
            acc.add_zeta_power(subset_exponent(subset), inner_sum(ss, subset, static_cast<Point>(ui)));
        exact.push_back(acc.divide_exact(std::int64_t{1} << ss.h));
    }
    return make_spectrum(d.n(), d.params.q(), std::move(exact));
}

double abs_cos_sin_form(std::span<const double> s, std::uint32_t q) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q);
        re += s[k] * std::cos(angle);
        im += s[k] * std::sin(angle);
    }
    return re * re + im * im;
}

double abs_correlation_form(std::span<const double> s, std::uint32_t q) {
    double total = 0.0;
    for (double v : s)
        total += v * v;
    for (std::size_t k = 1; k < s.size(); ++k) {
        double corr = 0.0;
        for (std::size_t i = 0; i + k < s.size(); ++i)
            corr += s[i] * s[i + k];
        total += 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q)) * corr;
    }
    return total;
}

MagnitudeViaS magnitude_via_S(const CombinedSpectra& cs, std::uint32_t q, Point u) {
    MagnitudeViaS m;
    m.w = w_vector(cs, u);
    m.s = s_vector(m.w);
    std::vector<double> s(m.s.begin(), m.s.end());
    // Unnormalized S carries an extra 2^{n/2}, so divide by 2^{2p + n}.
    const double denom = std::ldexp(1.0, 2 * cs.p + cs.n);
    m.from_correlation = abs_correlation_form(s, q) / denom;
    m.from_cos_sin = abs_cos_sin_form(s, q) / denom;
    return m;
}

MagnitudeViaS magnitude_via_S(const FformRep& rep, Point u) {
    return magnitude_via_S(combined_spectra(rep), rep.params.q(), u);
}

} // namespace gbent
