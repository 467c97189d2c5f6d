#ifndef PRM_CORE_REPORT_HPP
#define PRM_CORE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"

namespace prm {

enum class Certainty { exact, upper_bound };

std::string to_string(Certainty c);
Certainty certainty_from_string(const std::string& s);

// How a code was obtained; enough to reproduce the run.
struct Construction {
    std::string method;  // "punctured-reed-muller", "manhattan-ball-scan",
                         // "small-puncture-closed-form", "random-search"
    int p{0};
    int m{0};
    long long r{-1};
    long long w{-1};                     // Manhattan ball radius, when applicable
    std::vector<std::uint64_t> columns;  // explicit puncture columns, when applicable
    std::uint64_t seed{0};
    std::string budget;                  // decimal string
    int threads{1};
    int isd_iters{0};
    std::string distance_route;          // e.g. "dual-enumeration", "closed-form", "info-set-search"
};

// Derived quantum code summary. Big integers stay exact; gamma is the only
// floating-point field.
struct CodeReport {
    int p{0};
    BigCount n{0};
    BigCount k{0};
    std::optional<BigCount> d;
    Certainty d_certainty{Certainty::exact};
    std::optional<double> gamma;
    std::optional<BigCount> a_d;
    bool rank_deficient{false};
    Construction construction;
};

// gamma = log(n/k) / log(d). Requires k >= 1 and d >= 2.
double yield_gamma(const BigCount& n, const BigCount& k, const BigCount& d);

nlohmann::json to_json(const Construction& c);
Construction construction_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CodeReport& r);
CodeReport report_from_json(const nlohmann::json& j);

}  // namespace prm

#endif
