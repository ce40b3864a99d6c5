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

#include "gbent/conditions.hpp"

#include "gbent/gwht.hpp"
#include "gbent/wht.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

namespace gbent {

namespace {

void require_even_n(int n, const char* what) {
    if (n % 2 != 0)
        throw DomainError(std::string(what) + " requires even n, got n=" + std::to_string(n));
}

void require_odd_n(int n, const char* what) {
    if (n % 2 == 0)
        throw DomainError(std::string(what) + " requires odd n, got n=" + std::to_string(n));
}

void require_q(const ParamQ& params, std::uint32_t q, const char* what) {
    if (params.q() != q)
        throw DomainError(std::string(what) + " requires q=" + std::to_string(q) + ", got q=" +
                          std::to_string(params.q()));
}

void fail_at(ConditionReport& r, Point u, std::string reason) {
    if (!r.witness_point && r.reason.empty()) {
        r.witness_point = u;
        r.reason = std::move(reason);
    }
}

void fail_combination(ConditionReport& r, std::uint32_t i, std::string reason) {
    if (!r.failed_combination && r.reason.empty()) {
        r.failed_combination = i;
        r.reason = std::move(reason);
    }
}

void finish(ConditionReport& r) {
    r.overall = r.reason.empty();
    for (const auto& m : r.per_point)
        r.overall = r.overall && m.matched;
}

// First combined function that is not bent, if any.
std::optional<std::uint32_t> first_non_bent(const CombinedSpectra& cs) {
    for (std::uint32_t i = 0; i < cs.spectra.size(); ++i)
        if (!is_bent(cs.spectra[i]).value)
            return i;
    return std::nullopt;
}

std::size_t point_count(const CombinedSpectra& cs) { return std::size_t{1} << cs.n; }

int sign_of(std::int64_t v) { return v < 0 ? -1 : 1; }

} // namespace

std::optional<PointMatch> match_hadamard_row(std::span<const std::int64_t> w, std::int64_t magnitude) {
    if (w.empty() || (w.size() & (w.size() - 1)) != 0)
        throw DomainError("W vector length must be a power of two");
    if (std::llabs(w[0]) != magnitude)
        return std::nullopt;
    const int sign = sign_of(w[0]);
    std::uint32_t row = 0;
    for (std::uint32_t bit = 1; bit < w.size(); bit <<= 1) {
        const std::int64_t v = w[bit] * sign;
        if (v == -magnitude)
            row |= bit;
        else if (v != magnitude)
            return std::nullopt;
    }
    for (std::uint32_t i = 0; i < w.size(); ++i)
        if (w[i] * sign != magnitude * hadamard_entry(row, i))
            return std::nullopt;
    PointMatch m;
    m.matched = true;
    m.row = row;
    m.sign = sign;
    return m;
}

ConditionReport check_triangle(const CombinedSpectra& cs) {
    require_even_n(cs.n, "condition (triangle)");
    ConditionReport r;
    r.predicate = "triangle";
    if (auto bad = first_non_bent(cs))
        fail_combination(r, *bad, "combined function " + std::to_string(*bad) + " is not bent");
    const std::int64_t mag = bent_magnitude(cs.n);
    r.per_point.reserve(point_count(cs));
    for (std::size_t ui = 0; ui < point_count(cs); ++ui) {
        const auto u = static_cast<Point>(ui);
        const auto w = w_vector(cs, u);
        auto m = match_hadamard_row(w, mag);
        PointMatch pm = m.value_or(PointMatch{});
        pm.u = u;
        if (!m)
            fail_at(r, u, "W(u) is not +-2^{n/2} times a Hadamard row");
        r.per_point.push_back(pm);
    }
    finish(r);
    return r;
}

ConditionReport check_triangle(const FformRep& rep) {
    require_even_n(rep.n(), "condition (triangle)");
    return check_triangle(combined_spectra(rep));
}

ConditionReport check_square(const FformRep& rep) {
    require_odd_n(rep.n(), "condition (square)");
    if (rep.p() < 1)
        throw DomainError("condition (square) requires p >= 1");
    if (rep.params.q() != (1u << (rep.p() + 1)))
        throw DomainError("condition (square) requires q = 2^{p+1}; got q=" + std::to_string(rep.params.q()) +
                          ", p=" + std::to_string(rep.p()));
    const CombinedSpectra cs = combined_spectra(rep);
    ConditionReport r;
    r.predicate = "square";
    for (std::uint32_t i = 0; i < cs.spectra.size(); ++i)
        if (!is_semibent(cs.spectra[i])) {
            fail_combination(r, i, "combined function " + std::to_string(i) + " is not semibent");
            break;
        }
    const std::int64_t mag = std::int64_t{1} << ((cs.n + 1) / 2);
    const std::size_t size = cs.spectra.size();
    const std::size_t half = size / 2;
    PairingDiagnostics diag{true, true};
    r.per_point.reserve(point_count(cs));
    for (std::size_t ui = 0; ui < point_count(cs); ++ui) {
        const auto u = static_cast<Point>(ui);
        const auto w = w_vector(cs, u);
        for (std::size_t i = 0; i < half; ++i) {
            if (w[i] != 0 && w[i + half] != 0)
                diag.half_pairing_disjoint = false;
            if (w[i] != 0 && w[size - 1 - i] != 0)
                diag.mirror_pairing_disjoint = false;
        }
        const std::span<const std::int64_t> first(w.data(), half);
        const std::span<const std::int64_t> second(w.data() + half, half);
        auto all_zero = [](std::span<const std::int64_t> s) {
            for (auto v : s)
                if (v != 0)
                    return false;
            return true;
        };
        PointMatch pm;
        if (all_zero(second)) {
            if (auto m = match_hadamard_row(first, mag)) {
                pm = *m;
                pm.branch = Branch::FirstHalf;
            }
        }
        if (!pm.matched && all_zero(first)) {
            if (auto m = match_hadamard_row(second, mag)) {
                pm = *m;
                pm.branch = Branch::SecondHalf;
            }
        }
        pm.u = u;
        if (!pm.matched)
            fail_at(r, u, "W(u) is not (+-2^{(n+1)/2} H^{(r)}, 0) or (0, +-2^{(n+1)/2} H^{(r)})");
        r.per_point.push_back(pm);
    }
    r.pairing = diag;
    finish(r);
    return r;
}

ConditionReport check_recursive_form(const CombinedSpectra& cs) {
    require_even_n(cs.n, "recursive form");
    ConditionReport r;
    r.predicate = "recursive";
    if (auto bad = first_non_bent(cs))
        fail_combination(r, *bad, "combined function " + std::to_string(*bad) + " is not bent");
    r.per_point.reserve(point_count(cs));
    for (std::size_t ui = 0; ui < point_count(cs); ++ui) {
        const auto u = static_cast<Point>(ui);
        const auto w = w_vector(cs, u);
        PointMatch pm;
        pm.u = u;
        pm.matched = w[0] != 0;
        std::uint32_t row = 0;
        for (int t = 1; pm.matched && t <= cs.p; ++t) {
            const std::size_t step = std::size_t{1} << (t - 1);
            // The level sign is fixed by i = 0 and must hold for every i < 2^{t-1}.
            int level_sign = 0;
            if (w[step] == w[0])
                level_sign = 1;
            else if (w[step] == -w[0])
                level_sign = -1;
            for (std::size_t i = 0; level_sign != 0 && i < step; ++i)
                if (w[i + step] != level_sign * w[i])
                    level_sign = 0;
            if (level_sign == 0)
                pm.matched = false;
            else if (level_sign < 0)
                row |= static_cast<std::uint32_t>(step);
        }
        if (pm.matched) {
            pm.row = row;
            pm.sign = sign_of(w[0]);
        } else {
            fail_at(r, u, "no per-level signs satisfy W_{i+2^{t-1}} = s_t W_i");
        }
        r.per_point.push_back(pm);
    }
    finish(r);
    return r;
}

ConditionReport check_recursive_form(const FformRep& rep) {
    require_even_n(rep.n(), "recursive form");
    return check_recursive_form(combined_spectra(rep));
}

ConditionReport check_product_form(const CombinedSpectra& cs) {
    require_even_n(cs.n, "product form");
    ConditionReport r;
    r.predicate = "product";
    if (auto bad = first_non_bent(cs)) {
        r.precondition_failed = true;
        fail_combination(r, *bad, "precondition: combined function " + std::to_string(*bad) + " is not bent");
        finish(r);
        return r;
    }
    // All magnitudes equal 2^{n/2}, so each product equality reduces to a sign comparison.
    r.per_point.reserve(point_count(cs));
    for (std::size_t ui = 0; ui < point_count(cs); ++ui) {
        const auto u = static_cast<Point>(ui);
        const auto w = w_vector(cs, u);
        PointMatch pm;
        pm.u = u;
        pm.matched = true;
        for (int t = 1; t <= cs.p; ++t) {
            const std::size_t step = std::size_t{1} << (t - 1);
            int lhs = 1;
            int rhs = 1;
            for (std::size_t i = 0; i < step; ++i) {
                lhs *= sign_of(w[i]);
                rhs *= sign_of(w[i + step]);
            }
            // A free sign in front of an odd number of factors can absorb any mismatch.
            if (step % 2 == 0 && lhs != rhs)
                pm.matched = false;
        }
        if (pm.matched)
            pm.sign = sign_of(w[0]);
        else
            fail_at(r, u, "product equality fails at some level");
        r.per_point.push_back(pm);
    }
    finish(r);
    return r;
}

ConditionReport check_product_form(const FformRep& rep) {
    require_even_n(rep.n(), "product form");
    return check_product_form(combined_spectra(rep));
}

namespace {

// Spectra of a2, a0^a2, a1^a2, a0^a1^a2 in that order.
std::array<WalshSpectrum, 4> q8_spectra(const ComponentDecomp& d) {
    if (d.components.size() != 3)
        throw DomainError("q=8 decomposition needs three components");
    const auto& a0 = d.components[0];
    const auto& a1 = d.components[1];
    const auto& a2 = d.components[2];
    return {fwht(a2), fwht(a0 ^ a2), fwht(a1 ^ a2), fwht(a0 ^ a1 ^ a2)};
}

} // namespace

ConditionReport check_q8_star(const ComponentDecomp& d) {
    require_q(d.params, 8, "condition (*)");
    require_even_n(d.n(), "condition (*)");
    const auto sp = q8_spectra(d);
    ConditionReport r;
    r.predicate = "q8-star";
    for (std::uint32_t i = 0; i < 4; ++i)
        if (!is_bent(sp[i]).value) {
            fail_combination(r, i, "combined function " + std::to_string(i) + " is not bent");
            break;
        }
    for (std::size_t ui = 0; ui < sp[0].size(); ++ui) {
        const auto u = static_cast<Point>(ui);
        PointMatch pm;
        pm.u = u;
        pm.matched = sp[1][u] * sp[2][u] == sp[0][u] * sp[3][u];
        if (!pm.matched)
            fail_at(r, u, "W_{a0^a2} W_{a1^a2} != W_{a2} W_{a0^a1^a2}");
        r.per_point.push_back(pm);
    }
    finish(r);
    return r;
}

ConditionReport check_q8_starstar(const ComponentDecomp& d) {
    require_q(d.params, 8, "condition (**)");
    require_odd_n(d.n(), "condition (**)");
    const auto sp = q8_spectra(d);
    ConditionReport r;
    r.predicate = "q8-starstar";
    for (std::uint32_t i = 0; i < 4; ++i)
        if (!is_semibent(sp[i])) {
            fail_combination(r, i, "combined function " + std::to_string(i) + " is not semibent");
            break;
        }
    const std::int64_t mag = std::int64_t{1} << ((d.n() + 1) / 2);
    for (std::size_t ui = 0; ui < sp[0].size(); ++ui) {
        const auto u = static_cast<Point>(ui);
        PointMatch pm;
        pm.u = u;
        const bool first_zero = sp[1][u] == 0 && sp[0][u] == 0;
        const bool second_full = std::llabs(sp[2][u]) == mag && std::llabs(sp[3][u]) == mag;
        const bool second_zero = sp[2][u] == 0 && sp[3][u] == 0;
        const bool first_full = std::llabs(sp[0][u]) == mag && std::llabs(sp[1][u]) == mag;
        if (first_zero && second_full) {
            pm.matched = true;
            pm.branch = Branch::SecondHalf;
        } else if (second_zero && first_full) {
            pm.matched = true;
            pm.branch = Branch::FirstHalf;
        } else {
            fail_at(r, u, "neither pair vanishes with the other at magnitude 2^{(n+1)/2}");
        }
        r.per_point.push_back(pm);
    }
    finish(r);
    return r;
}

ConditionReport check_q4(const ComponentDecomp& d) {
    require_q(d.params, 4, "q=4 characterization");
    require_even_n(d.n(), "q=4 characterization");
    if (d.components.size() != 2)
        throw DomainError("q=4 decomposition needs two components");
    ConditionReport r;
    r.predicate = "q4";
    const auto& a0 = d.components[0];
    const auto& a1 = d.components[1];
    if (!is_bent(a1).value)
        fail_combination(r, 0, "a1 is not bent");
    else if (!is_bent(a0 ^ a1).value)
        fail_combination(r, 1, "a0 ^ a1 is not bent");
    finish(r);
    return r;
}

ConditionReport certify_sufficient(const FformRep& rep) {
    ConditionReport r = rep.n() % 2 == 0 ? check_triangle(rep) : check_square(rep);
    r.predicate = "certify";
#ifndef NDEBUG
    if (r.overall && !is_gbent(from_fform(rep), GbentMode::Exact).gbent)
        throw std::logic_error("certified representation is not gbent");
#endif
    return r;
}

std::string to_string(Predicate p) {
    switch (p) {
    case Predicate::Triangle:
        return "triangle";
    case Predicate::Square:
        return "square";
    case Predicate::Recursive:
        return "recursive";
    case Predicate::Product:
        return "product";
    case Predicate::Q8Star:
        return "q8-star";
    case Predicate::Q8StarStar:
        return "q8-starstar";
    case Predicate::Q4:
        return "q4";
    case Predicate::Certify:
        return "certify";
    }
    return "?";
}

std::vector<Predicate> all_predicates() {
    return {Predicate::Triangle, Predicate::Square, Predicate::Recursive, Predicate::Product,
            Predicate::Q8Star,   Predicate::Q8StarStar, Predicate::Q4,     Predicate::Certify};
}

Predicate parse_predicate(const std::string& name) {
    for (auto p : all_predicates())
        if (to_string(p) == name)
            return p;
    throw DomainError("unknown predicate '" + name + "'");
}

void check_applicable(Predicate p, std::uint32_t q, int n) {
    const ParamQ params(q);
    const bool even = n % 2 == 0;
    auto need = [&](bool ok, const std::string& why) {
        if (!ok)
            throw DomainError("predicate " + to_string(p) + " " + why);
    };
    switch (p) {
    case Predicate::Triangle:
    case Predicate::Recursive:
    case Predicate::Product:
        need(even, "requires even n");
        break;
    case Predicate::Square:
        need(!even, "requires odd n");
        need(params.is_power_of_two() && q >= 4, "requires q = 2^{p+1} with p >= 1");
        break;
    case Predicate::Q8Star:
        need(q == 8 && even, "requires q=8 and even n");
        break;
    case Predicate::Q8StarStar:
        need(q == 8 && !even, "requires q=8 and odd n");
        break;
    case Predicate::Q4:
        need(q == 4 && even, "requires q=4 and even n");
        break;
    case Predicate::Certify:
        need(even || (params.is_power_of_two() && q >= 4), "requires even n, or odd n with q = 2^{p+1}");
        break;
    }
}

bool is_applicable(Predicate p, std::uint32_t q, int n) {
    try {
        check_applicable(p, q, n);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

ConditionReport evaluate_predicate(Predicate p, const GeneralizedFunction& f) {
    check_applicable(p, f.q(), f.n());
    switch (p) {
    case Predicate::Triangle:
        return check_triangle(to_fform(f));
    case Predicate::Square:
        return check_square(to_fform(f));
    case Predicate::Recursive:
        return check_recursive_form(to_fform(f));
    case Predicate::Product:
        return check_product_form(to_fform(f));
    case Predicate::Q8Star:
        return check_q8_star(to_components(f));
    case Predicate::Q8StarStar:
        return check_q8_starstar(to_components(f));
    case Predicate::Q4:
        return check_q4(to_components(f));
    case Predicate::Certify:
        return certify_sufficient(to_fform(f));
    }
    throw DomainError("unknown predicate");
}

} // namespace gbent
