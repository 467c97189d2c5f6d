#include "report.hpp"

#include "errors.hpp"

namespace prm {

using nlohmann::json;

std::string to_string(Certainty c) {
    return c == Certainty::exact ? "exact" : "upper_bound";
}

Certainty certainty_from_string(const std::string& s) {
    if (s == "exact") return Certainty::exact;
    if (s == "upper_bound") return Certainty::upper_bound;
    throw DomainError("unknown certainty: " + s);
}

double yield_gamma(const BigCount& n, const BigCount& k, const BigCount& d) {
    if (k < 1) throw DomainError("yield_gamma: k must be >= 1");
    if (d < 2) throw DomainError("yield_gamma: d must be >= 2");
    return (big_log2(n) - big_log2(k)) / big_log2(d);
}

json to_json(const Construction& c) {
    json j;
    j["method"] = c.method;
    j["p"] = c.p;
    j["m"] = c.m;
    if (c.r >= 0) j["r"] = c.r;
    if (c.w >= 0) j["w"] = c.w;
    if (!c.columns.empty()) j["columns"] = c.columns;
    j["seed"] = c.seed;
    if (!c.budget.empty()) j["budget"] = c.budget;
    j["threads"] = c.threads;
    if (c.isd_iters > 0) j["isd_iters"] = c.isd_iters;
    if (!c.distance_route.empty()) j["distance_route"] = c.distance_route;
    return j;
}

Construction construction_from_json(const json& j) {
    Construction c;
    c.method = j.value("method", "");
    c.p = j.value("p", 0);
    c.m = j.value("m", 0);
    c.r = j.value("r", -1LL);
    c.w = j.value("w", -1LL);
    if (j.contains("columns")) c.columns = j["columns"].get<std::vector<std::uint64_t>>();
    c.seed = j.value("seed", 0ULL);
    c.budget = j.value("budget", "");
    c.threads = j.value("threads", 1);
    c.isd_iters = j.value("isd_iters", 0);
    c.distance_route = j.value("distance_route", "");
    return c;
}

json to_json(const CodeReport& r) {
    json j;
    j["p"] = r.p;
    j["n"] = big_str(r.n);
    j["k"] = big_str(r.k);
    if (r.d) {
        j["d"] = {{"value", big_str(*r.d)}, {"certainty", to_string(r.d_certainty)}};
    }
    if (r.gamma) j["gamma"] = *r.gamma;
    if (r.a_d) j["a_d"] = big_str(*r.a_d);
    if (r.rank_deficient) j["rank_deficient"] = true;
    j["provenance"] = to_json(r.construction);
    return j;
}

CodeReport report_from_json(const json& j) {
    CodeReport r;
    r.p = j.at("p").get<int>();
    r.n = big_parse(j.at("n").get<std::string>());
    r.k = big_parse(j.at("k").get<std::string>());
    if (j.contains("d")) {
        r.d = big_parse(j["d"].at("value").get<std::string>());
        r.d_certainty = certainty_from_string(j["d"].at("certainty").get<std::string>());
    }
    if (j.contains("gamma")) r.gamma = j["gamma"].get<double>();
    if (j.contains("a_d")) r.a_d = big_parse(j["a_d"].get<std::string>());
    r.rank_deficient = j.value("rank_deficient", false);
    if (j.contains("provenance")) r.construction = construction_from_json(j["provenance"]);
    return r;
}

}  // namespace prm
