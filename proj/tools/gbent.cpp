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
#include "gbent/conditions.hpp"
#include "gbent/construct.hpp"
#include "gbent/core.hpp"
#include "gbent/decompose.hpp"
#include "gbent/gwht.hpp"
#include "gbent/search.hpp"
#include "gbent/wht.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace gbent;

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

std::string num(double v) {
    char out[40];
    std::snprintf(out, sizeof out, "%.17g", v);
    return out;
}

std::string num(std::complex<double> z) { return num(z.real()) + " " + num(z.imag()); }

int run_wht(const std::string& path) {
    const BooleanFunction f = parse_boolean(read_input(path));
    const WalshSpectrum s = fwht(f);
    std::cout << "n " << f.n() << "\n";
    for (Point u = 0; u < s.size(); ++u)
        std::cout << u << " " << s[u] << " " << num(s.normalized(u)) << "\n";
    const SpectralVerdict bent = is_bent(s);
    std::cout << "bent " << (bent.value ? "yes" : "no");
    if (!bent.reason.empty())
        std::cout << " (" << bent.reason << ")";
    std::cout << "\n";
    if (f.n() % 2 == 1)
        std::cout << "semibent " << (is_semibent(s) ? "yes" : "no") << "\n";
    return 0;
}

GwhtSpectrum route_spectrum(const GeneralizedFunction& f, const std::string& route) {
    if (route == "direct")
        return gwht_direct(f);
    if (route == "bucketed")
        return gwht_bucketed(f);
    if (route == "linear")
        return gwht_linear(to_fform(f));
    if (route == "implicit")
        return gwht_implicit_exact(to_components(f));
    throw DomainError("unknown route " + route);
}

int run_gwht(const std::string& path, const std::string& route, const std::string& mode) {
    const GeneralizedFunction f = parse_table(read_input(path));
    std::cout << "n " << f.n() << " q " << f.q() << "\n";
    if (parse_gbent_mode(mode) == GbentMode::Float) {
        if (route != "direct")
            throw DomainError("float mode has a single route; omit --route");
        const auto h = gwht_float(f);
        for (Point u = 0; u < h.size(); ++u)
            std::cout << u << " " << num(h[u]) << "\n";
        return 0;
    }
    const GwhtSpectrum s = route_spectrum(f, route);
    for (Point u = 0; u < s.size(); ++u)
        std::cout << u << " " << s.exact[u] << " " << num(s.numeric[u]) << "\n";
    return 0;
}

int run_check_gbent(const std::string& path, const std::string& mode, double epsilon) {
    const GeneralizedFunction f = parse_table(read_input(path));
    const GbentReport r = is_gbent(f, parse_gbent_mode(mode), epsilon);
    std::cout << "gbent " << (r.gbent ? "yes" : "no") << "\n";
    std::cout << "mode " << to_string(r.mode) << "\n";
    std::cout << "worst_point " << r.worst_point << "\n";
    std::cout << "worst_deviation " << num(r.worst_deviation) << "\n";
    if (r.first_failure)
        std::cout << "first_failure " << *r.first_failure << "\n";
    return r.gbent ? 0 : kExitFalse;
}

int run_decompose(const std::string& path, const std::string& form, int component) {
    const GeneralizedFunction f = parse_table(read_input(path));
    std::vector<std::pair<std::string, BooleanFunction>> parts;
    if (form == "components") {
        const ComponentDecomp d = to_components(f);
        for (std::size_t i = 0; i < d.components.size(); ++i)
            parts.emplace_back("a" + std::to_string(i), d.components[i]);
    } else if (form == "fform") {
        const FformRep rep = to_fform(f);
        parts.emplace_back("a", rep.a);
        for (std::size_t i = 0; i < rep.low.size(); ++i)
            parts.emplace_back("a" + std::to_string(i), rep.low[i]);
    } else {
        throw DomainError("unknown form " + form);
    }
    if (component >= 0) {
        if (static_cast<std::size_t>(component) >= parts.size())
            throw DomainError("component index out of range");
        std::cout << serialize_boolean(parts[component].second);
        return 0;
    }
    for (const auto& [name, g] : parts)
        std::cout << "# " << name << "\n" << serialize_boolean(g);
    return 0;
}

int run_alpha(std::uint32_t q, int p) {
    const AlphaVector alpha = solve_alpha(q, p);
    std::cout << "q " << q << " p " << p << " scale 2^" << p << "\n";
    for (std::size_t i = 0; i < alpha.values.size(); ++i)
        std::cout << i << " " << alpha.scaled[i] << " " << num(alpha.values[i]) << "\n";
    std::cout << "system " << (alpha_system_holds(alpha) ? "holds" : "fails") << "\n";
    return 0;
}

const char* branch_name(Branch b) {
    switch (b) {
    case Branch::FirstHalf:
        return "first";
    case Branch::SecondHalf:
        return "second";
    case Branch::None:
        break;
    }
    return "-";
}

int run_check_conditions(const std::string& path, const std::string& name) {
    const GeneralizedFunction f = parse_table(read_input(path));
    const ConditionReport r = evaluate_predicate(parse_predicate(name), f);
    std::cout << "predicate " << r.predicate << "\n";
    std::cout << "holds " << (r.overall ? "yes" : "no") << "\n";
    if (!r.reason.empty())
        std::cout << "reason " << r.reason << "\n";
    if (r.precondition_failed)
        std::cout << "precondition failed\n";
    if (r.failed_combination)
        std::cout << "failed_combination " << *r.failed_combination << "\n";
    if (r.witness_point)
        std::cout << "witness_point " << *r.witness_point << "\n";
    for (const auto& m : r.per_point) {
        std::cout << "u " << m.u << " ";
        if (!m.matched) {
            std::cout << "unmatched\n";
            continue;
        }
        std::cout << "row " << (m.row ? std::to_string(*m.row) : "-") << " sign " << (m.sign > 0 ? "+" : "-");
        if (m.branch != Branch::None)
            std::cout << " half " << branch_name(m.branch);
        std::cout << "\n";
    }
    if (r.pairing)
        std::cout << "pairing half " << (r.pairing->half_pairing_disjoint ? "disjoint" : "overlap") << " mirror "
                  << (r.pairing->mirror_pairing_disjoint ? "disjoint" : "overlap") << "\n";
    return r.overall ? 0 : kExitFalse;
}

struct ConstructArgs {
    std::string recipe;
    std::uint32_t q = 0;
    std::string bent;
    std::string a0;
    std::string signs;
    std::string perm;
    std::string g;
};

int run_construct(const ConstructArgs& a) {
    auto need = [](const std::string& value, const char* flag) {
        if (value.empty())
            throw DomainError(std::string("recipe needs ") + flag);
    };
    GeneralizedFunction out(ParamQ(2), 1, {0, 0});
    if (a.recipe == "trivial") {
        need(a.bent, "--bent");
        out = trivial_gbent(parse_boolean(read_input(a.bent)), a.q);
    } else if (a.recipe == "gmmf") {
        need(a.perm, "--perm");
        need(a.g, "--g");
        out = gmmf(parse_permutation(read_input(a.perm)), parse_table(read_input(a.g)), a.q);
    } else if (a.recipe == "select") {
        need(a.bent, "--bent");
        need(a.a0, "--a0");
        const FformRep rep =
            select_components(parse_boolean(read_input(a.bent)), parse_boolean(read_input(a.a0)), parse_signs(a.signs), a.q);
        out = from_fform(rep);
    } else {
        throw DomainError("unknown recipe " + a.recipe);
    }
    std::cout << serialize_table(out);
    return 0;
}

struct SearchArgs {
    std::uint32_t q = 4;
    int n = 2;
    bool exhaustive = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t shards = 1;
    std::int64_t shard_index = -1;
    unsigned threads = 0;
    std::string out;
    std::vector<std::string> predicates;
    bool probe = false;
    bool no_float = false;
    std::vector<std::string> merge;
};

void emit(const nlohmann::json& j, const std::string& path) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write " + path);
    out << text;
}

int run_search(const SearchArgs& a) {
    if (!a.merge.empty()) {
        std::vector<CensusReport> reports;
        for (const auto& path : a.merge) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(read_input(path));
                reports.push_back(census_from_json(j));
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(path + ": " + e.what());
            }
        }
        const CensusReport merged = merge(reports);
        emit(a.probe ? to_json(probe_from_census(merged)) : to_json(merged), a.out);
        return 0;
    }
    if (a.exhaustive == (a.samples > 0))
        throw DomainError("choose exactly one of --exhaustive and --samples");
    const SearchSpace space{a.q, a.n, a.exhaustive, a.samples, a.seed};
    validate(space);
    std::vector<Predicate> preds;
    if (a.predicates.empty()) {
        for (auto p : all_predicates())
            if (is_applicable(p, a.q, a.n))
                preds.push_back(p);
    } else {
        for (const auto& name : a.predicates)
            preds.push_back(parse_predicate(name));
    }
    SearchOptions options;
    options.float_check = !a.no_float;
    CensusReport report;
    if (a.shard_index >= 0) {
        const auto ranges = shard(space.size(), a.shards);
        if (static_cast<std::uint64_t>(a.shard_index) >= ranges.size())
            throw DomainError("--shard-index must be below --shards");
        report = enumerate(space, preds, ranges[a.shard_index], options);
    } else {
        const unsigned threads = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
        report = run_sharded(space, preds, a.shards, threads, options);
    }
    emit(a.probe ? to_json(probe_from_census(report)) : to_json(report), a.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized bent function toolkit"};
    app.require_subcommand(1);

    std::string input;
    std::string route = "direct";
    std::string mode = "exact";
    double epsilon = kDefaultGbentEpsilon;
    std::string form = "components";
    int component = -1;
    std::uint32_t alpha_q = 0;
    int alpha_p = 0;
    std::string predicate;
    ConstructArgs cargs;
    SearchArgs sargs;

    auto* wht = app.add_subcommand("wht", "Walsh spectrum of a Boolean truth table");
    wht->add_option("file", input, "Truth table file (default stdin)");

    auto* gwht = app.add_subcommand("gwht", "Generalized Walsh-Hadamard spectrum");
    gwht->add_option("file", input, "Truth table file (default stdin)");
    gwht->add_option("--route", route, "direct|bucketed|linear|implicit")
        ->check(CLI::IsMember({"direct", "bucketed", "linear", "implicit"}));
    gwht->add_option("--mode", mode, "exact|float")->check(CLI::IsMember({"exact", "float"}));

    auto* check = app.add_subcommand("check-gbent", "Test |H_f(u)| = 1 at every u");
    check->add_option("file", input, "Truth table file (default stdin)");
    check->add_option("--mode", mode, "exact|float")->check(CLI::IsMember({"exact", "float"}));
    check->add_option("--epsilon", epsilon, "Float tolerance")->check(CLI::PositiveNumber);

    auto* decompose = app.add_subcommand("decompose", "Component functions");
    decompose->add_option("file", input, "Truth table file (default stdin)");
    decompose->add_option("--form", form, "components|fform")->check(CLI::IsMember({"components", "fform"}));
    decompose->add_option("--component", component, "Print a single component in table format");

    auto* alpha = app.add_subcommand("alpha", "Coefficients of the Hadamard alpha system");
    alpha->add_option("--q", alpha_q, "Modulus")->required();
    alpha->add_option("--p", alpha_p, "Number of low components")->required();

    auto* conditions = app.add_subcommand("check-conditions", "Evaluate a sufficient condition");
    conditions->add_option("file", input, "Truth table file (default stdin)");
    conditions->add_option("--predicate", predicate, "triangle|square|recursive|product|q8-star|q8-starstar|q4|certify")
        ->required();

    auto* construct = app.add_subcommand("construct", "Build a gbent function");
    construct->add_option("--recipe", cargs.recipe, "trivial|gmmf|select")
        ->required()
        ->check(CLI::IsMember({"trivial", "gmmf", "select"}));
    construct->add_option("--q", cargs.q, "Modulus")->required();
    construct->add_option("--bent", cargs.bent, "Bent Boolean function file");
    construct->add_option("--a0", cargs.a0, "Second Boolean function file (select)");
    construct->add_option("--signs", cargs.signs, "Level signs, e.g. -+ (select)");
    construct->add_option("--perm", cargs.perm, "Permutation file: n then 2^n images");
    construct->add_option("--g", cargs.g, "Generalized function file on the y half (gmmf)");

    auto* search = app.add_subcommand("search", "Census of a function space");
    search->add_option("--q", sargs.q, "Modulus");
    search->add_option("--n", sargs.n, "Variables");
    search->add_flag("--exhaustive", sargs.exhaustive, "Enumerate all q^(2^n) functions");
    search->add_option("--samples", sargs.samples, "Seeded random sample count");
    search->add_option("--seed", sargs.seed, "Sample seed");
    search->add_option("--shards", sargs.shards, "Number of contiguous index ranges")->check(CLI::PositiveNumber);
    search->add_option("--shard-index", sargs.shard_index, "Run only this shard");
    search->add_option("--threads", sargs.threads, "Worker threads (default all cores)");
    search->add_option("--out", sargs.out, "Report path (default stdout)");
    search->add_option("--predicates", sargs.predicates, "Predicates to tally (default all applicable)")
        ->delimiter(',');
    search->add_flag("--probe", sargs.probe, "Emit the necessity probe report instead of the census");
    search->add_flag("--no-float", sargs.no_float, "Skip the float cross-check");
    search->add_option("--merge", sargs.merge, "Merge shard reports instead of searching");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*wht)
            return run_wht(input);
        if (*gwht)
            return run_gwht(input, route, mode);
        if (*check)
            return run_check_gbent(input, mode, epsilon);
        if (*decompose)
            return run_decompose(input, form, component);
        if (*alpha)
            return run_alpha(alpha_q, alpha_p);
        if (*conditions)
            return run_check_conditions(input, predicate);
        if (*construct)
            return run_construct(cargs);
        if (*search)
            return run_search(sargs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
