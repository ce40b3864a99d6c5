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

#include "gbent/search.hpp"

#include "gbent/gwht.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <tuple>

namespace gbent {

ExactGbentChecker::ExactGbentChecker(std::uint32_t q, int n)
    : q_(q), n_(n), ring_(&CyclotomicRing::ring(q)) {
    const std::size_t deg = ring_->degree();
    counts_.assign(deg << n, 0);
    value_.assign(deg, 0);
    conj_.assign(deg, 0);
    product_.reserve(2 * deg);
}

bool ExactGbentChecker::operator()(std::span<const std::uint32_t> table) {
    const std::size_t deg = ring_->degree();
    const std::size_t size = std::size_t{1} << n_;
    if (table.size() != size)
        throw DomainError("table size does not match checker");
    // One butterfly per power-basis coordinate of zeta^{f(x)}.
    for (std::size_t j = 0; j < deg; ++j) {
        std::span<std::int64_t> seq(counts_.data() + j * size, size);
        for (std::size_t x = 0; x < size; ++x)
            seq[x] = ring_->power(table[x])[j];
        butterfly(seq);
    }
    const std::int64_t target = std::int64_t{1} << n_;
    for (std::size_t u = 0; u < size; ++u) {
        for (std::size_t j = 0; j < deg; ++j)
            value_[j] = counts_[j * size + u];
        std::fill(conj_.begin(), conj_.end(), 0);
        for (std::size_t j = 0; j < deg; ++j) {
            if (value_[j] == 0)
                continue;
            auto p = ring_->power(static_cast<std::int64_t>(q_) - static_cast<std::int64_t>(j));
            for (std::size_t k = 0; k < deg; ++k)
                conj_[k] += value_[j] * p[k];
        }
        product_.assign(2 * deg - 1, 0);
        for (std::size_t i = 0; i < deg; ++i)
            for (std::size_t k = 0; k < deg; ++k)
                product_[i + k] += value_[i] * conj_[k];
        ring_->reduce(product_);
        if (product_[0] != target)
            return false;
        for (std::size_t k = 1; k < deg; ++k)
            if (product_[k] != 0)
                return false;
    }
    return true;
}

std::uint64_t SearchSpace::size() const {
    if (!exhaustive)
        return samples;
    const std::uint64_t points = std::uint64_t{1} << n;
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < points; ++i) {
        if (total > kMaxExhaustive / q)
            throw DomainError("search space q^{2^n} too large for exhaustive mode");
        total *= q;
    }
    return total;
}

void validate(const SearchSpace& space) {
    const ParamQ params(space.q);
    if (space.n < 1 || space.n > 20)
        throw DomainError("search supports 1 <= n <= 20");
    if (space.exhaustive) {
        (void)space.size();
    } else if (space.samples == 0) {
        throw DomainError("sampled search needs a positive sample count");
    }
}

GeneralizedFunction function_at(const SearchSpace& space, std::uint64_t index) {
    const std::size_t points = std::size_t{1} << space.n;
    std::vector<std::uint32_t> table(points);
    if (space.exhaustive) {
        std::uint64_t rest = index;
        for (auto& v : table) {
            v = static_cast<std::uint32_t>(rest % space.q);
            rest /= space.q;
        }
    } else {
        std::seed_seq seq{static_cast<std::uint32_t>(space.seed), static_cast<std::uint32_t>(space.seed >> 32),
                          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
        std::mt19937_64 rng(seq);
        for (auto& v : table)
            v = static_cast<std::uint32_t>(rng() % space.q);
    }
    return GeneralizedFunction(ParamQ(space.q), space.n, std::move(table));
}

std::uint64_t function_index(const GeneralizedFunction& f) {
    SearchSpace space{f.q(), f.n(), true, 0, 0};
    (void)space.size();
    std::uint64_t index = 0;
    for (std::size_t x = f.size(); x-- > 0;)
        index = index * f.q() + f(static_cast<Point>(x));
    return index;
}

std::vector<IndexRange> shard(std::uint64_t total, std::uint64_t k) {
    if (k == 0)
        throw DomainError("shard count must be at least 1");
    std::vector<IndexRange> out;
    out.reserve(k);
    const std::uint64_t base = total / k;
    const std::uint64_t extra = total % k;
    std::uint64_t begin = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t len = base + (i < extra ? 1 : 0);
        out.push_back({begin, begin + len});
        begin += len;
    }
    return out;
}

CensusReport empty_report(const SearchSpace& space, const std::vector<Predicate>& predicates) {
    validate(space);
    CensusReport r;
    r.q = space.q;
    r.n = space.n;
    r.exhaustive = space.exhaustive;
    r.seed = space.exhaustive ? 0 : space.seed;
    r.space_size = space.size();
    for (auto p : predicates) {
        check_applicable(p, space.q, space.n);
        r.predicates.push_back(to_string(p));
        r.tallies[to_string(p)] = {};
    }
    return r;
}

namespace {

bool witness_less(const Witness& a, const Witness& b) {
    return std::tie(a.index, a.predicate) < std::tie(b.index, b.predicate);
}

void add_range(std::vector<IndexRange>& ranges, IndexRange r) {
    if (r.size() == 0)
        return;
    for (const auto& existing : ranges)
        if (r.begin < existing.end && existing.begin < r.end)
            throw DomainError("merged reports cover overlapping ranges");
    ranges.push_back(r);
    std::sort(ranges.begin(), ranges.end(), [](const IndexRange& a, const IndexRange& b) { return a.begin < b.begin; });
    std::vector<IndexRange> merged;
    for (const auto& x : ranges) {
        if (!merged.empty() && merged.back().end == x.begin)
            merged.back().end = x.end;
        else
            merged.push_back(x);
    }
    ranges = std::move(merged);
}

} // namespace

CensusReport enumerate(const SearchSpace& space, const std::vector<Predicate>& predicates, IndexRange range,
                       const SearchOptions& options) {
    CensusReport r = empty_report(space, predicates);
    if (range.begin > range.end || range.end > r.space_size)
        throw DomainError("index range outside the search space");
    add_range(r.covered, range);
    ExactGbentChecker checker(space.q, space.n);
    for (std::uint64_t idx = range.begin; idx < range.end; ++idx) {
        const GeneralizedFunction f = function_at(space, idx);
        const bool gbent = checker(f.table());
        ++r.evaluated;
        r.gbent += gbent;
        auto witness = [&](const std::string& name, bool value) {
            r.witnesses.push_back({idx, name, gbent, value, serialize_table(f)});
        };
        if (options.float_check) {
            const bool fg = is_gbent_float(gwht_float(f), options.epsilon).gbent;
            r.float_gbent += fg;
            if (fg != gbent) {
                ++r.float_disagreements;
                witness("float", fg);
            }
        }
        for (auto p : predicates) {
            const bool value = evaluate_predicate(p, f).overall;
            auto& t = r.tallies[to_string(p)];
            t.predicate_true += value;
            if (value && gbent)
                ++t.both_true;
            else if (!value && !gbent)
                ++t.both_false;
            else if (value)
                ++t.predicate_only;
            else
                ++t.gbent_only;
            if (value != gbent)
                witness(to_string(p), value);
        }
    }
    std::sort(r.witnesses.begin(), r.witnesses.end(), witness_less);
    return r;
}

CensusReport enumerate(const SearchSpace& space, const std::vector<Predicate>& predicates,
                       const SearchOptions& options) {
    return enumerate(space, predicates, IndexRange{0, space.size()}, options);
}

CensusReport merge(const CensusReport& a, const CensusReport& b) {
    if (a.q != b.q || a.n != b.n || a.exhaustive != b.exhaustive || a.seed != b.seed ||
        a.space_size != b.space_size || a.predicates != b.predicates)
        throw DomainError("cannot merge reports from different searches");
    CensusReport out = a;
    for (const auto& r : b.covered)
        add_range(out.covered, r);
    out.evaluated += b.evaluated;
    out.gbent += b.gbent;
    out.float_gbent += b.float_gbent;
    out.float_disagreements += b.float_disagreements;
    for (const auto& [name, t] : b.tallies) {
        auto& dst = out.tallies[name];
        dst.predicate_true += t.predicate_true;
        dst.both_true += t.both_true;
        dst.both_false += t.both_false;
        dst.predicate_only += t.predicate_only;
        dst.gbent_only += t.gbent_only;
    }
    out.witnesses.insert(out.witnesses.end(), b.witnesses.begin(), b.witnesses.end());
    std::sort(out.witnesses.begin(), out.witnesses.end(), witness_less);
    return out;
}

CensusReport merge(const std::vector<CensusReport>& reports) {
    if (reports.empty())
        throw DomainError("nothing to merge");
    CensusReport out = reports.front();
    for (std::size_t i = 1; i < reports.size(); ++i)
        out = merge(out, reports[i]);
    return out;
}

CensusReport run_sharded(const SearchSpace& space, const std::vector<Predicate>& predicates, std::uint64_t k,
                         unsigned threads, const SearchOptions& options) {
    validate(space);
    const auto ranges = shard(space.size(), k);
    std::vector<CensusReport> results(ranges.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < ranges.size(); i = next++) {
            try {
                results[i] = enumerate(space, predicates, ranges[i], options);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ranges.size())));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < count; ++t)
            pool.emplace_back(worker);
    }
    if (error)
        std::rethrow_exception(error);
    return merge(results);
}

nlohmann::json to_json(const CensusReport& r) {
    nlohmann::json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["mode"] = r.exhaustive ? "exhaustive" : "sampled";
    j["seed"] = r.seed;
    j["space_size"] = r.space_size;
    j["predicates"] = r.predicates;
    j["covered"] = nlohmann::json::array();
    for (const auto& c : r.covered)
        j["covered"].push_back({c.begin, c.end});
    j["evaluated"] = r.evaluated;
    j["gbent"] = r.gbent;
    j["float_gbent"] = r.float_gbent;
    j["float_disagreements"] = r.float_disagreements;
    j["agreement"] = nlohmann::json::object();
    for (const auto& [name, t] : r.tallies)
        j["agreement"][name] = {{"predicate_true", t.predicate_true}, {"both_true", t.both_true},
                                {"both_false", t.both_false},         {"predicate_only", t.predicate_only},
                                {"gbent_only", t.gbent_only},         {"disagreements", t.disagreements()}};
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : r.witnesses)
        j["witnesses"].push_back({{"index", w.index},
                                  {"predicate", w.predicate},
                                  {"gbent", w.gbent},
                                  {"predicate_value", w.predicate_value},
                                  {"table", w.table}});
    return j;
}

CensusReport census_from_json(const nlohmann::json& j) {
    CensusReport r;
    r.q = j.at("q").get<std::uint32_t>();
    r.n = j.at("n").get<int>();
    r.exhaustive = j.at("mode").get<std::string>() == "exhaustive";
    r.seed = j.at("seed").get<std::uint64_t>();
    r.space_size = j.at("space_size").get<std::uint64_t>();
    r.predicates = j.at("predicates").get<std::vector<std::string>>();
    for (const auto& c : j.at("covered"))
        r.covered.push_back({c.at(0).get<std::uint64_t>(), c.at(1).get<std::uint64_t>()});
    r.evaluated = j.at("evaluated").get<std::uint64_t>();
    r.gbent = j.at("gbent").get<std::uint64_t>();
    r.float_gbent = j.at("float_gbent").get<std::uint64_t>();
    r.float_disagreements = j.at("float_disagreements").get<std::uint64_t>();
    for (const auto& [name, t] : j.at("agreement").items())
        r.tallies[name] = {t.at("predicate_true").get<std::uint64_t>(), t.at("both_true").get<std::uint64_t>(),
                           t.at("both_false").get<std::uint64_t>(), t.at("predicate_only").get<std::uint64_t>(),
                           t.at("gbent_only").get<std::uint64_t>()};
    for (const auto& w : j.at("witnesses"))
        r.witnesses.push_back({w.at("index").get<std::uint64_t>(), w.at("predicate").get<std::string>(),
                               w.at("gbent").get<bool>(), w.at("predicate_value").get<bool>(),
                               w.at("table").get<std::string>()});
    return r;
}

namespace {

std::optional<Predicate> probe_predicate(std::uint32_t q, int n) {
    if (n % 2 == 0)
        return Predicate::Triangle;
    if (is_applicable(Predicate::Square, q, n))
        return Predicate::Square;
    return std::nullopt;
}

} // namespace

ProbeReport probe_from_census(const CensusReport& census) {
    ProbeReport p;
    p.q = census.q;
    p.n = census.n;
    p.evaluated = census.evaluated;
    p.gbent = census.gbent;
    p.vacuous = census.gbent == 0;
    const auto pred = probe_predicate(census.q, census.n);
    if (!pred)
        return p;
    p.predicate = to_string(*pred);
    const auto it = census.tallies.find(p.predicate);
    if (it == census.tallies.end())
        throw DomainError("census lacks the " + p.predicate + " tally");
    p.applicable = true;
    p.passed = it->second.both_true;
    for (const auto& w : census.witnesses)
        if (w.predicate == p.predicate && w.gbent && !w.predicate_value)
            p.counterexamples.push_back(w.table);
    return p;
}

ProbeReport necessity_probe(const SearchSpace& space, const SearchOptions& options) {
    std::vector<Predicate> preds;
    if (auto pred = probe_predicate(space.q, space.n))
        preds.push_back(*pred);
    return probe_from_census(enumerate(space, preds, options));
}

nlohmann::json to_json(const ProbeReport& p) {
    nlohmann::json j;
    j["q"] = p.q;
    j["n"] = p.n;
    j["predicate"] = p.predicate;
    j["applicable"] = p.applicable;
    j["evaluated"] = p.evaluated;
    j["gbent"] = p.gbent;
    j["passed"] = p.passed;
    j["vacuous"] = p.vacuous;
    j["status"] = !p.applicable ? "not-applicable" : p.vacuous ? "vacuously-passed" : "evaluated";
    j["pass_fraction"] = p.pass_fraction();
    j["counterexamples"] = p.counterexamples;
    return j;
}

} // namespace gbent
