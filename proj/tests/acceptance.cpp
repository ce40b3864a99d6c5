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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "gbent/alpha.hpp"
#include "gbent/conditions.hpp"
#include "gbent/construct.hpp"
#include "gbent/decompose.hpp"
#include "gbent/gwht.hpp"
#include "gbent/search.hpp"
#include "gbent/wht.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace gbent;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok)
                detail = what;
            ok = false;
        }
    }
};

// Exact/float verdict disagreements summed over every suite.
std::uint64_t g_verdict_checks = 0;
std::uint64_t g_verdict_disagreements = 0;

void cross_check(const GeneralizedFunction& f, bool exact) {
    ++g_verdict_checks;
    if (is_gbent(f, GbentMode::Float).gbent != exact)
        ++g_verdict_disagreements;
}

GeneralizedFunction random_function(std::uint32_t q, int n, std::mt19937_64& rng) {
    return random_generalized(q, n, rng);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

bool report(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s)
        out.require(false, "runtime " + fmt("%.3g", secs) + " s over budget " + fmt("%.3g", budget_s) + " s");
    std::printf("%s %2d %s (%.4f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                out.detail.empty() ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
    return out.ok;
}

Outcome criterion1() {
    Outcome o;
    const double r = std::sqrt(2.0);
    const std::complex<double> expect[4] = {{1.0 / 4, (1 + r) / 4}, {1.0 / 4, (1 - r) / 4}, {(1 + r) / 4, -1.0 / 4},
                                            {(1 - r) / 4, -1.0 / 4}};
    const auto alpha = solve_alpha(8, 2);
    double worst = 0;
    for (int i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(alpha.values[i] - expect[i]));
    o.require(worst <= 1e-12, "max deviation " + fmt("%.3g", worst));
    o.require(alpha_system_holds(alpha), "system does not hold exactly");
    o.detail = o.ok ? "max deviation " + fmt("%.3g", worst) : o.detail;
    return o;
}

Outcome criterion2() {
    Outcome o;
    const double s3 = std::sqrt(3.0);
    const std::complex<double> paper[8] = {{1.5, s3 / 2}, {0.5, -s3 / 2}, {1.5, -1.5 * s3}, {-1.5, -s3 / 2},
                                           {-1.5, 1.5 * s3}, {1.5, s3 / 2}, {4.5, 1.5 * s3}, {1.5, -1.5 * s3}};
    const auto alpha = solve_alpha(6, 3);
    double worst = 0;
    for (int i = 0; i < 8; ++i)
        worst = std::max(worst, std::abs(alpha.values[i] - paper[i] / 8.0));
    o.require(worst <= 1e-12, "Lambda deviation " + fmt("%.3g", worst));

    // b0 = x0, b1 = x1, so x = b0 + 2 b1 runs over (0,0), (1,0), (0,1), (1,1).
    const BooleanFunction b0(2, {0, 1, 0, 1});
    const BooleanFunction b1(2, {0, 0, 1, 1});
    const std::int64_t expect_exp[4] = {0, 2, 3, 5};
    const auto f = evaluate_general_form({ParamQ(6), {2, 3}, {b0, b1}});
    const auto d = to_components(f);
    for (Point x = 0; x < 4; ++x)
        o.require(reconstructed_value(d.components, alpha, x) == CyclotomicInt::zeta_power(6, expect_exp[x]),
                  "components of 2b0+3b1 miss zeta^" + std::to_string(expect_exp[x]));
    o.require(reconstruct_zeta(d, alpha).exact_zero, "reconstruct_zeta is not exact");

    // The identification a0 = b1, a1 = b0 ^ b1, a2 = 0.
    const std::vector<BooleanFunction> literal{b1, b0 ^ b1, BooleanFunction(2)};
    std::ostringstream got;
    for (Point x = 0; x < 4; ++x) {
        const auto v = reconstructed_value(literal, alpha, x);
        for (std::int64_t k = 0; k < 6; ++k)
            if (v == CyclotomicInt::zeta_power(6, k))
                got << (x ? "," : "") << "z^" << k;
    }
    o.detail = "Lambda deviation " + fmt("%.3g", worst) + "; components of 2b0+3b1 give z^0,z^2,z^3,z^5" +
               "; literal a2=0 identification gives " + got.str();
    return o;
}

// Sweep shared by criteria 3 and 4.
const std::uint32_t kSweepQ[] = {4, 6, 8, 10, 12, 16};
const int kSweepN[] = {2, 4, 6, 8};

Outcome criterion3() {
    Outcome o;
    std::mt19937_64 rng(3003);
    double worst = 0;
    std::uint64_t count = 0;
    for (auto q : kSweepQ) {
        const auto alpha_full = solve_alpha(q, ParamQ(q).h());
        const auto alpha_low = solve_alpha(q, ParamQ(q).h() - 1);
        for (auto n : kSweepN)
            for (int rep = 0; rep < 100; ++rep) {
                const auto f = random_function(q, n, rng);
                const auto full = reconstruct_zeta(to_components(f), alpha_full);
                const auto low = reconstruct_zeta(to_fform(f), alpha_low);
                o.require(full.exact_zero && low.exact_zero,
                          "exact reconstruction fails at q=" + std::to_string(q) + " n=" + std::to_string(n));
                worst = std::max({worst, full.max_deviation, low.max_deviation});
                ++count;
            }
    }
    o.require(worst <= 1e-12, "float deviation " + fmt("%.3g", worst));
    if (o.ok)
        o.detail = std::to_string(count) + " functions, exact deviation 0, float deviation " + fmt("%.3g", worst);
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::mt19937_64 rng(4004);
    double worst = 0;
    std::uint64_t implicit = 0;
    for (auto q : kSweepQ)
        for (auto n : kSweepN)
            for (int rep = 0; rep < 100; ++rep) {
                const auto f = random_function(q, n, rng);
                const auto direct = gwht_direct(f);
                const auto bucketed = gwht_bucketed(f);
                const auto rep_f = to_fform(f);
                const auto linear = gwht_linear(rep_f);
                const auto cs = combined_spectra(rep_f);
                const auto alpha = solve_alpha(q, rep_f.p());
                const auto fl = gwht_float(f);
                const auto d = to_components(f);
                const bool with_implicit = ParamQ(q).h() <= 4;
                implicit += with_implicit;
                for (Point u = 0; u < f.size(); ++u) {
                    const auto ref = direct.numeric[u];
                    o.require(bucketed.exact[u] == direct.exact[u] && linear.exact[u] == direct.exact[u],
                              "exact routes differ");
                    worst = std::max({worst, std::abs(bucketed.numeric[u] - ref), std::abs(linear.numeric[u] - ref),
                                      std::abs(gwht_linear_at(cs, alpha, u) - ref), std::abs(fl[u] - ref)});
                    if (with_implicit)
                        worst = std::max(worst, std::abs(gwht_implicit_oracle(d, u) - ref));
                }
                cross_check(f, is_gbent_exact(direct).gbent);
            }
    o.require(worst <= 1e-9, "route deviation " + fmt("%.3g", worst));
    if (o.ok)
        o.detail = "max route deviation " + fmt("%.3g", worst) + ", implicit oracle on " + std::to_string(implicit) +
                   " functions";
    return o;
}

void fold_census(const CensusReport& r) {
    g_verdict_checks += r.evaluated;
    g_verdict_disagreements += r.float_disagreements;
}

Outcome criterion5() {
    Outcome o;
    const auto r = enumerate(SearchSpace{4, 2, true, 0, 0}, {Predicate::Q4});
    fold_census(r);
    o.require(r.evaluated == 256, "evaluated " + std::to_string(r.evaluated));
    o.require(r.gbent == 64, "gbent count " + std::to_string(r.gbent));
    o.require(r.tallies.at("q4").disagreements() == 0, "q4 disagreements");
    if (o.ok)
        o.detail = "64/256 gbent, q4 agreement 256/256";
    return o;
}

Outcome criterion6() {
    Outcome o;
    const auto r = enumerate(SearchSpace{8, 2, true, 0, 0}, {Predicate::Q8Star, Predicate::Triangle});
    fold_census(r);
    o.require(r.evaluated == 4096, "evaluated " + std::to_string(r.evaluated));
    o.require(r.tallies.at("q8-star").disagreements() == 0, "q8-star disagreements");
    o.require(r.tallies.at("triangle").disagreements() == 0, "triangle disagreements");
    if (o.ok)
        o.detail = std::to_string(r.gbent) + "/4096 gbent, q8-star and triangle agree everywhere";
    return o;
}

Outcome criterion7() {
    Outcome o;
#ifdef GBENT_LONG_TESTS
    const SearchSpace space{8, 3, true, 0, 0};
#else
    const SearchSpace space{8, 3, false, 100000, 20240607};
#endif
    const auto r = run_sharded(space, {Predicate::Q8StarStar, Predicate::Square}, 64,
                               std::max(1u, std::thread::hardware_concurrency()));
    fold_census(r);
    o.require(r.evaluated == space.size(), "evaluated " + std::to_string(r.evaluated));
    o.require(r.tallies.at("q8-starstar").disagreements() == 0, "q8-starstar disagreements");
    o.require(r.tallies.at("square").disagreements() == 0, "square disagreements");
    if (o.ok)
        o.detail = std::string(space.exhaustive ? "exhaustive" : "sampled") + ", " + std::to_string(r.gbent) + "/" +
                   std::to_string(r.evaluated) + " gbent, q8-starstar and square agree everywhere";
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(8008);
    int built = 0, certified = 0, gbent = 0;
    auto record = [&](const FformRep& rep) {
        const auto f = from_fform(rep);
        const bool c = certify_sufficient(rep).overall;
        const bool g = is_gbent(f, GbentMode::Exact).gbent;
        cross_check(f, g);
        ++built;
        certified += c;
        gbent += g;
    };
    for (std::uint32_t q : {4u, 6u, 8u, 12u, 16u}) {
        const bool selectable = ParamQ(q).is_power_of_two();
        for (int i = 0; i < 100; ++i) {
            const int side = 1 + i % 4;
            if (selectable && i % 2 == 0) {
                const auto a = maiorana_mcfarland(random_permutation(side, rng)) ^
                               affine_function(2 * side, static_cast<Point>(rng() % (1u << (2 * side))),
                                               static_cast<int>(rng() & 1));
                // a ^ a0 stays bent when a0 is affine
                const auto a0 =
                    affine_function(2 * side, static_cast<Point>(rng() % (1u << (2 * side))), static_cast<int>(rng() & 1));
                const int p = ParamQ(q).h() - 1;
                std::vector<LevelSign> signs;
                for (int t = 1; t < p; ++t)
                    signs.push_back(rng() & 1 ? LevelSign::Minus : LevelSign::Plus);
                record(select_components(a, a0, signs, q));
            } else {
                record(to_fform(gmmf(random_permutation(side, rng), random_generalized(q, side, rng), q)));
            }
        }
    }
    o.require(built == 500, "built " + std::to_string(built));
    o.require(certified == built, "certified " + std::to_string(certified) + "/" + std::to_string(built));
    o.require(gbent == built, "gbent " + std::to_string(gbent) + "/" + std::to_string(built));
    if (o.ok)
        o.detail = "500/500 certified and gbent";
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::mt19937_64 rng(9009);
    int total = 0, gbent = 0, triangle = 0;
    for (std::uint32_t q : {4u, 6u, 8u, 12u, 16u})
        for (int i = 0; i < 100; ++i) {
            const auto f = gmmf(random_permutation(2, rng), random_generalized(q, 2, rng), q);
            const bool g = is_gbent(f, GbentMode::Exact).gbent;
            cross_check(f, g);
            ++total;
            gbent += g;
            triangle += check_triangle(to_fform(f)).overall;
        }
    o.require(gbent == total, "gbent " + std::to_string(gbent) + "/" + std::to_string(total));
    o.require(triangle == total, "triangle " + std::to_string(triangle) + "/" + std::to_string(total));
    if (o.ok)
        o.detail = "500/500 gbent and triangle";
    return o;
}

Outcome criterion10() {
    Outcome o;
    std::mt19937_64 rng(10010);
    for (int n = 1; n <= 12; ++n)
        for (int rep = 0; rep < 10; ++rep) {
            const auto s = fwht(random_boolean(n, rng));
            o.require(satisfies_parseval(s), "Parseval fails at n=" + std::to_string(n));
            std::vector<std::int64_t> v(std::size_t{1} << n), w;
            for (auto& x : v)
                x = static_cast<std::int64_t>(rng() % 2001) - 1000;
            w = v;
            butterfly(w);
            butterfly(w);
            for (std::size_t i = 0; i < v.size(); ++i)
                o.require(w[i] == (v[i] << n), "involution fails at n=" + std::to_string(n));
        }
    double parseval_worst = 0;
    for (std::uint32_t q : {4u, 6u, 8u, 10u, 12u, 16u})
        for (int n = 1; n <= 10; ++n)
            for (int rep = 0; rep < 5; ++rep) {
                const auto f = random_function(q, n, rng);
                parseval_worst = std::max(parseval_worst, std::abs(parseval_ratio(gwht_float(f)) - 1.0));
                parseval_worst = std::max(parseval_worst, std::abs(parseval_ratio(gwht_bucketed(f).numeric) - 1.0));
            }
    o.require(parseval_worst <= 1e-6, "generalized Parseval deviation " + fmt("%.3g", parseval_worst));
    double abs_worst = 0;
    for (int rep = 0; rep < 10000; ++rep) {
        const int p = 1 + static_cast<int>(rng() % 4);
        const std::uint32_t q = 2 * (1 + static_cast<std::uint32_t>(rng() % 16));
        std::vector<double> s(std::size_t{1} << p);
        for (auto& x : s)
            x = static_cast<double>(static_cast<std::int64_t>(rng() % 513) - 256);
        const double a = abs_cos_sin_form(s, q);
        const double b = abs_correlation_form(s, q);
        abs_worst = std::max(abs_worst, std::abs(a - b) / std::max(1.0, a));
    }
    o.require(abs_worst <= 1e-9, "magnitude forms differ by " + fmt("%.3g", abs_worst));
    if (o.ok)
        o.detail = "Parseval exact, involution exact, generalized Parseval " + fmt("%.3g", parseval_worst) +
                   ", magnitude forms " + fmt("%.3g", abs_worst);
    return o;
}

Outcome criterion11() {
    Outcome o;
    o.require(g_verdict_disagreements == 0, std::to_string(g_verdict_disagreements) + " disagreements");
    o.detail = std::to_string(g_verdict_disagreements) + " disagreements in " + std::to_string(g_verdict_checks) +
               " verdicts";
    return o;
}

} // namespace

int main() {
    bool all = true;
    all &= report(1, "alpha for q=8, p=2", 1e-3, criterion1);
    all &= report(2, "alpha and reconstruction for q=6, p=3", 1e-3, criterion2);
    all &= report(3, "reconstruction identity", 30, criterion3);
    all &= report(4, "route agreement", 60, criterion4);
    all &= report(5, "q=4, n=2 census", 1, criterion5);
    all &= report(6, "q=8, n=2 census", 10, criterion6);
#ifdef GBENT_LONG_TESTS
    all &= report(7, "q=8, n=3 census", 0, criterion7);
#else
    all &= report(7, "q=8, n=3 census", 60, criterion7);
#endif
    all &= report(8, "soundness of the sufficient conditions", 60, criterion8);
    all &= report(9, "generalized Maiorana-McFarland", 30, criterion9);
    all &= report(10, "transform properties", 10, criterion10);
    all &= report(11, "exact/float verdict agreement", 0, criterion11);
    return all ? 0 : 1;
}
