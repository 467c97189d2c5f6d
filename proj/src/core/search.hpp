#ifndef PRM_CORE_SEARCH_HPP
#define PRM_CORE_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "triortho.hpp"

namespace prm {

enum class Objective { min_gamma, max_d_at_fixed_k, max_k_at_fixed_d };

std::string to_string(Objective o);
Objective objective_from_string(const std::string& s);

struct SearchConfig {
    int p{3};
    int m{4};
    int k_min{1};
    int k_max{1};
    Objective objective{Objective::min_gamma};
    long long fixed_d{2};          // floor for max_k_at_fixed_d
    std::uint64_t seed{1};
    std::uint64_t iterations{200};
    double time_limit_s{0.0};      // 0 = no wall-clock limit
    BigCount distance_budget{2000000};
    int isd_iters{6};
    int walkers{1};

    void validate() const;
};

nlohmann::json to_json(const SearchConfig& c);
SearchConfig search_config_from_json(const nlohmann::json& j);

struct Improvement {
    std::uint64_t iteration{0};
    CodeReport report;
};

struct SearchResult {
    CodeReport best;
    std::vector<std::uint64_t> columns;
    std::vector<Improvement> trace;
};

nlohmann::json to_json(const SearchResult& r);

// Base-p digits of c-1, least significant first.
std::vector<Fp> decode_column(std::uint64_t c, int p, int m);
std::uint64_t encode_point(const std::vector<Fp>& x, int p);

// Rebuild a code from recorded puncture columns at maximal degree and analyze
// it with the given budgets.
CodeReport replay(int p, int m, const std::vector<std::uint64_t>& columns,
                  const AnalysisOptions& opts);

// Seeded propose-evaluate walk over puncture sets of the maximal-degree
// space: swap/add/remove one column per step, keep improvements, return the
// best visit. Independent walkers merge deterministically.
SearchResult random_search(const SearchConfig& cfg);

}  // namespace prm

#endif
