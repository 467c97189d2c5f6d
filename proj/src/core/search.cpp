#include "search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <thread>

namespace prm {

using nlohmann::json;

std::string to_string(Objective o) {
    switch (o) {
        case Objective::min_gamma: return "min_gamma";
        case Objective::max_d_at_fixed_k: return "max_d_at_fixed_k";
        case Objective::max_k_at_fixed_d: return "max_k_at_fixed_d";
    }
    return "min_gamma";
}

Objective objective_from_string(const std::string& s) {
    if (s == "min_gamma") return Objective::min_gamma;
    if (s == "max_d_at_fixed_k") return Objective::max_d_at_fixed_k;
    if (s == "max_k_at_fixed_d") return Objective::max_k_at_fixed_d;
    throw DomainError("unknown objective: " + s);
}

void SearchConfig::validate() const {
    require_prime(static_cast<std::uint32_t>(p));
    if (m < 1) throw DomainError("SearchConfig: m must be >= 1");
    if (k_min < 1 || k_max < k_min) throw DomainError("SearchConfig: bad k range");
    if (triortho_max_degree(p, m) < 0)
        throw DomainError("SearchConfig: no triorthogonal degree exists");
    const std::uint64_t total =
        pow_u64(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(m));
    if (static_cast<std::uint64_t>(k_max) >= total)
        throw DomainError("SearchConfig: k_max leaves no columns");
    if (walkers < 1) throw DomainError("SearchConfig: walkers must be >= 1");
    if (objective == Objective::max_k_at_fixed_d && fixed_d < 2)
        throw DomainError("SearchConfig: fixed_d must be >= 2");
}

json to_json(const SearchConfig& c) {
    return json{{"p", c.p},
                {"m", c.m},
                {"k_min", c.k_min},
                {"k_max", c.k_max},
                {"objective", to_string(c.objective)},
                {"fixed_d", c.fixed_d},
                {"seed", c.seed},
                {"iterations", c.iterations},
                {"time_limit_s", c.time_limit_s},
                {"distance_budget", big_str(c.distance_budget)},
                {"isd_iters", c.isd_iters},
                {"walkers", c.walkers}};
}

SearchConfig search_config_from_json(const json& j) {
    SearchConfig c;
    c.p = j.at("p").get<int>();
    c.m = j.at("m").get<int>();
    c.k_min = j.value("k_min", 1);
    c.k_max = j.value("k_max", c.k_min);
    if (j.contains("objective")) c.objective = objective_from_string(j["objective"]);
    c.fixed_d = j.value("fixed_d", 2LL);
    c.seed = j.value("seed", 1ULL);
    c.iterations = j.value("iterations", 200ULL);
    c.time_limit_s = j.value("time_limit_s", 0.0);
    if (j.contains("distance_budget"))
        c.distance_budget = big_parse(j["distance_budget"].get<std::string>());
    c.isd_iters = j.value("isd_iters", 6);
    c.walkers = j.value("walkers", 1);
    c.validate();
    return c;
}

json to_json(const SearchResult& r) {
    json trace = json::array();
    for (const auto& imp : r.trace)
        trace.push_back(json{{"iteration", imp.iteration}, {"report", to_json(imp.report)}});
    return json{{"best", to_json(r.best)}, {"columns", r.columns}, {"trace", trace}};
}

std::vector<Fp> decode_column(std::uint64_t c, int p, int m) { return point_of_column(c, p, m); }

std::uint64_t encode_point(const std::vector<Fp>& x, int p) { return column_of_point(x, p); }

CodeReport replay(int p, int m, const std::vector<std::uint64_t>& columns,
                  const AnalysisOptions& opts) {
    RmSpec spec{p, m, triortho_max_degree(p, m)};
    PunctureSet s{p, m, columns};
    s.validate();
    return analyze(build_code(spec, s), opts);
}

namespace {

bool valid_for(const SearchConfig& cfg, const CodeReport& r) {
    if (!r.d || *r.d < 2 || r.k < 1) return false;
    switch (cfg.objective) {
        case Objective::min_gamma:
            return r.gamma.has_value();
        case Objective::max_d_at_fixed_k:
            return !r.rank_deficient;
        case Objective::max_k_at_fixed_d:
            return !r.rank_deficient && *r.d >= cfg.fixed_d;
    }
    return false;
}

// Strictly better, with the gamma / n / -k tie-break.
bool better(const SearchConfig& cfg, const CodeReport& a, const CodeReport& b) {
    const bool va = valid_for(cfg, a), vb = valid_for(cfg, b);
    if (va != vb) return va;
    if (!va) return false;
    auto tie = [&](double eps = 1e-12) {
        const double ga = a.gamma.value_or(1e9), gb = b.gamma.value_or(1e9);
        if (std::abs(ga - gb) > eps) return ga < gb;
        if (a.n != b.n) return a.n < b.n;
        return a.k > b.k;
    };
    switch (cfg.objective) {
        case Objective::min_gamma:
            return tie();
        case Objective::max_d_at_fixed_k:
            if (*a.d != *b.d) return *a.d > *b.d;
            return tie();
        case Objective::max_k_at_fixed_d:
            if (a.k != b.k) return a.k > b.k;
            return tie();
    }
    return false;
}

struct WalkerOutcome {
    bool has_best{false};
    CodeReport best;
    std::vector<std::uint64_t> best_columns;
    std::vector<Improvement> trace;
};

void run_walker(const SearchConfig& cfg, std::uint64_t walker_seed, WalkerOutcome& out) {
    std::mt19937_64 rng(walker_seed);
    const std::uint64_t total =
        pow_u64(static_cast<std::uint64_t>(cfg.p), static_cast<std::uint64_t>(cfg.m));
    RmSpec spec{cfg.p, cfg.m, triortho_max_degree(cfg.p, cfg.m)};

    AnalysisOptions aopts;
    aopts.budget = cfg.distance_budget;
    aopts.seed = walker_seed;
    aopts.threads = 1;
    aopts.isd_iters = cfg.isd_iters;
    aopts.want_a_d = false;

    auto sample_set = [&](std::size_t k) {
        std::set<std::uint64_t> s;
        while (s.size() < k) s.insert(bounded_u64(rng, total) + 1);
        return std::vector<std::uint64_t>(s.begin(), s.end());
    };

    const int k_start = cfg.k_min + static_cast<int>(bounded_u64(
                            rng, static_cast<std::uint64_t>(cfg.k_max - cfg.k_min + 1)));
    std::vector<std::uint64_t> current = sample_set(static_cast<std::size_t>(k_start));

    auto evaluate = [&](const std::vector<std::uint64_t>& cols) {
        PunctureSet s{cfg.p, cfg.m, cols};
        return analyze(build_code(spec, s), aopts);
    };

    CodeReport cur_rep = evaluate(current);
    out.best = cur_rep;
    out.best_columns = current;
    out.has_best = true;
    out.trace.push_back({0, cur_rep});

    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t it = 1; it <= cfg.iterations; ++it) {
        if (cfg.time_limit_s > 0.0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
            if (elapsed.count() > cfg.time_limit_s) break;
        }

        std::vector<std::uint64_t> cand = current;
        const bool fixed_k = cfg.k_min == cfg.k_max || cfg.objective == Objective::max_d_at_fixed_k;
        const std::uint64_t kind = fixed_k ? 0 : bounded_u64(rng, 10);
        auto not_member = [&]() {
            std::uint64_t c;
            do {
                c = bounded_u64(rng, total) + 1;
            } while (std::find(cand.begin(), cand.end(), c) != cand.end());
            return c;
        };
        if (kind <= 7 || cand.empty()) {  // swap one column
            if (!cand.empty()) cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(
                                              bounded_u64(rng, cand.size())));
            cand.push_back(not_member());
        } else if (kind == 8 && static_cast<int>(cand.size()) < cfg.k_max) {  // grow
            cand.push_back(not_member());
        } else if (static_cast<int>(cand.size()) > cfg.k_min && cand.size() > 1) {  // shrink
            cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(bounded_u64(rng, cand.size())));
        } else {
            continue;
        }
        std::sort(cand.begin(), cand.end());

        const CodeReport rep = evaluate(cand);
        if (!better(cfg, cur_rep, rep)) {  // accept improvements and sideways moves
            current = cand;
            cur_rep = rep;
        }
        if (better(cfg, rep, out.best)) {
            out.best = rep;
            out.best_columns = cand;
            out.trace.push_back({it, rep});
        }
    }
}

}  // namespace

SearchResult random_search(const SearchConfig& cfg) {
    cfg.validate();
    std::vector<WalkerOutcome> outcomes(static_cast<std::size_t>(cfg.walkers));
    if (cfg.walkers == 1) {
        run_walker(cfg, cfg.seed, outcomes[0]);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < cfg.walkers; ++i)
            pool.emplace_back(run_walker, std::cref(cfg), cfg.seed + static_cast<std::uint64_t>(i),
                              std::ref(outcomes[static_cast<std::size_t>(i)]));
        for (auto& th : pool) th.join();
    }

    // Deterministic merge in walker order.
    std::size_t win = 0;
    for (std::size_t i = 1; i < outcomes.size(); ++i)
        if (better(cfg, outcomes[i].best, outcomes[win].best)) win = i;

    SearchResult res;
    res.best = outcomes[win].best;
    res.columns = outcomes[win].best_columns;
    res.trace = std::move(outcomes[win].trace);

    // Exact re-verification of the final candidate when the default budget
    // allows; search-time scoring may have used bounds only.
    if (res.best.d && res.best.d_certainty == Certainty::upper_bound) {
        AnalysisOptions verify;
        verify.seed = cfg.seed;
        verify.isd_iters = std::max(cfg.isd_iters, 48);
        try {
            RmSpec spec{cfg.p, cfg.m, triortho_max_degree(cfg.p, cfg.m)};
            PunctureSet s{cfg.p, cfg.m, res.columns};
            const CodeReport exact = analyze(build_code(spec, s), verify);
            res.best = exact;
        } catch (const BudgetError&) {
        }
    }
    return res;
}

}  // namespace prm
