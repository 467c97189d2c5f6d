#include "prm.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "core/asymptotics.hpp"
#include "core/distill.hpp"
#include "core/search.hpp"
#include "core/triortho.hpp"

using namespace prm;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
prm_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const DimensionError& e) {
        g_last_error = e.what();
        return PRM_ERR_USAGE;
    } catch (const DomainError& e) {
        g_last_error = e.what();
        return PRM_ERR_DOMAIN;
    } catch (const BudgetError& e) {
        g_last_error = e.what();
        return PRM_ERR_BUDGET;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return PRM_ERR_USAGE;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PRM_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PRM_ERR_INTERNAL;
    }
}

prm_status emit(const std::string& s, char** out) {
    if (!out) {
        g_last_error = "null output pointer";
        return PRM_ERR_USAGE;
    }
    *out = dup_string(s);
    if (!*out) {
        g_last_error = "out of memory";
        return PRM_ERR_INTERNAL;
    }
    return PRM_OK;
}

BigCount parse_budget(const char* budget_decimal) {
    if (!budget_decimal || !*budget_decimal) return BigCount(100000000);
    return big_parse(budget_decimal);
}

}  // namespace

struct prm_code {
    TriorthoPair pair;
    CodeReport report;
    bool analyzed{false};
    std::optional<WeightEnumerator> support_enum;
    std::optional<WeightEnumerator> stabilizer_enum;
};

namespace {

CodeReport current_report(const prm_code* code) {
    if (code->analyzed) return code->report;
    CodeReport r;
    r.p = code->pair.spec.p;
    r.n = code->pair.n;
    r.k = code->pair.k;
    r.rank_deficient = code->pair.rank_deficient;
    r.construction.method = "punctured-reed-muller";
    r.construction.p = code->pair.spec.p;
    r.construction.m = code->pair.spec.m;
    r.construction.r = code->pair.spec.r;
    r.construction.w = code->report.construction.w;
    r.construction.columns = code->pair.punctures.columns;
    return r;
}

void ensure_distill_enums(prm_code* code) {
    if (code->pair.k != 1) throw DomainError("exact suppression requires a k = 1 code");
    EnumOptions opts{BigCount(100000000), 2};
    if (!code->support_enum) code->support_enum = z_support_enumerator(code->pair, opts);
    if (!code->stabilizer_enum) code->stabilizer_enum = z_stabilizer_enumerator(code->pair, opts);
}

}  // namespace

extern "C" {

const char* prm_version(void) { return "0.1.0"; }

const char* prm_last_error(void) { return g_last_error.c_str(); }

void prm_string_free(char* s) { std::free(s); }

prm_status prm_pnomial(long long m, long long s, int p, char** out) {
    return guarded([&] { return emit(big_str(pnomial(m, s, p)), out); });
}

prm_status prm_pnomial_cum(long long m, long long s, int p, int greater, char** out) {
    return guarded([&] {
        return emit(big_str(greater ? pnomial_gt(m, s, p) : pnomial_le(m, s, p)), out);
    });
}

prm_status prm_weight_count(long long m, long long k, int weight_kind, int p, char** out) {
    return guarded([&] {
        WeightFunction w;
        switch (weight_kind) {
            case 0: w = WeightFunction::hamming(p); break;
            case 1: w = WeightFunction::lee(p); break;
            case 2: w = WeightFunction::manhattan(p); break;
            default: throw DomainError("unknown weight kind");
        }
        return emit(big_str(weight_count(m, k, w, p)), out);
    });
}

prm_status prm_delta_distance(long long m, long long r, long long w, int p, char** out) {
    return guarded([&] { return emit(big_str(delta_distance(m, r, w, p)), out); });
}

prm_status prm_rm_distance(int p, int m, long long r, char** out) {
    return guarded([&] { return emit(big_str(rm_distance(RmSpec{p, m, r})), out); });
}

prm_status prm_dual_degree(int p, int m, long long r, long long* out) {
    return guarded([&] {
        if (!out) throw DimensionError("null output pointer");
        *out = dual_degree(RmSpec{p, m, r});
        return PRM_OK;
    });
}

prm_status prm_pnomial_log_p(long long m, long long s, int p, double* out) {
    return guarded([&] {
        if (!out) throw DimensionError("null output pointer");
        const BigCount v = pnomial(m, s, p);
        if (v == 0) throw DomainError("log of zero coefficient");
        *out = big_log2(v) / std::log2(static_cast<double>(p));
        return PRM_OK;
    });
}

prm_status prm_code_build(int p, int m, long long r, const uint64_t* columns, size_t ncols,
                          prm_code** out) {
    return guarded([&] {
        if (!out) throw DimensionError("null output pointer");
        if (ncols > 0 && !columns) throw DimensionError("null column array");
        RmSpec spec{p, m, r < 0 ? triortho_max_degree(p, m) : r};
        PunctureSet s{p, m, std::vector<std::uint64_t>(columns, columns + ncols)};
        auto code = std::make_unique<prm_code>();
        code->pair = build_code(spec, s);
        *out = code.release();
        return PRM_OK;
    });
}

prm_status prm_code_build_ball(int p, int m, long long r, long long w, prm_code** out) {
    return guarded([&] {
        if (!out) throw DimensionError("null output pointer");
        RmSpec spec{p, m, r < 0 ? triortho_max_degree(p, m) : r};
        PunctureSet s = manhattan_set(p, m, w);
        auto code = std::make_unique<prm_code>();
        code->pair = build_code(spec, s);
        code->report.construction.w = w;
        *out = code.release();
        return PRM_OK;
    });
}

void prm_code_free(prm_code* code) { delete code; }

long long prm_code_n(const prm_code* code) {
    return code ? static_cast<long long>(code->pair.n) : -1;
}

long long prm_code_k(const prm_code* code) {
    return code ? static_cast<long long>(code->pair.k) : -1;
}

int prm_code_p(const prm_code* code) { return code ? code->pair.spec.p : 0; }

prm_status prm_code_check_triorthogonal(const prm_code* code, int* ok) {
    return guarded([&] {
        if (!code || !ok) throw DimensionError("null argument");
        *ok = check_triorthogonal(rm_generator(code->pair.spec)) ? 1 : 0;
        return PRM_OK;
    });
}

prm_status prm_code_analyze(prm_code* code, const char* budget_decimal, uint64_t seed,
                            int threads, int isd_iters) {
    return guarded([&] {
        if (!code) throw DimensionError("null code handle");
        AnalysisOptions opts;
        opts.budget = parse_budget(budget_decimal);
        opts.seed = seed;
        opts.threads = threads > 0 ? threads : 1;
        if (isd_iters > 0) opts.isd_iters = isd_iters;
        const long long w_tag = code->report.construction.w;
        code->report = analyze(code->pair, opts);
        code->report.construction.w = w_tag;
        code->analyzed = true;
        return PRM_OK;
    });
}

prm_status prm_code_report_json(const prm_code* code, char** json) {
    return guarded([&] {
        if (!code) throw DimensionError("null code handle");
        return emit(to_json(current_report(code)).dump(), json);
    });
}

prm_status prm_code_enumerator_json(prm_code* code, int space, const char* budget_decimal,
                                    int threads, char** json) {
    return guarded([&] {
        if (!code) throw DimensionError("null code handle");
        EnumOptions opts{parse_budget(budget_decimal), threads > 0 ? threads : 1};
        const WeightEnumerator w = (space == 0) ? z_support_enumerator(code->pair, opts)
                                                : z_stabilizer_enumerator(code->pair, opts);
        if (space == 0)
            code->support_enum = w;
        else
            code->stabilizer_enum = w;
        return emit(to_json(w).dump(), json);
    });
}

prm_status prm_code_distill_exact(prm_code* code, double delta_in, double* delta_out,
                                  double* accept_prob, double* cost) {
    return guarded([&] {
        if (!code || !delta_out || !accept_prob || !cost)
            throw DimensionError("null argument");
        ensure_distill_enums(code);
        const DistillOutcome o = suppression_exact(*code->support_enum, *code->stabilizer_enum,
                                                   NoiseModel{code->pair.spec.p, delta_in});
        *delta_out = o.delta_out;
        *accept_prob = o.accept_prob;
        *cost = o.cost;
        return PRM_OK;
    });
}

prm_status prm_code_threshold(prm_code* code, double lo, double hi, double tol,
                              double* fixed_point) {
    return guarded([&] {
        if (!code || !fixed_point) throw DimensionError("null argument");
        ensure_distill_enums(code);
        const int p = code->pair.spec.p;
        const double frac = (p - 1.0) / p;  // error probability per unit of delta
        auto curve = [&](double err_prob) {
            const DistillOutcome o = suppression_exact(*code->support_enum, *code->stabilizer_enum,
                                                       NoiseModel{p, err_prob / frac});
            return frac * o.delta_out;
        };
        const auto fp = threshold(curve, lo, hi, tol);
        if (!fp) {
            g_last_error = "suppression curve does not cross the diagonal in (lo, hi)";
            return PRM_ERR_VERIFY;
        }
        *fixed_point = *fp;
        return PRM_OK;
    });
}

prm_status prm_one_two_puncture_report(int p, int m, int punctures, char** json) {
    return guarded([&] { return emit(to_json(one_two_puncture_params(p, m, punctures)).dump(), json); });
}

prm_status prm_suppression_estimate(int p, long long n, long long k, long long d,
                                    const char* a_d_decimal, double delta_in, double* delta_out,
                                    double* accept_prob, double* cost) {
    return guarded([&] {
        if (!delta_out || !accept_prob || !cost || !a_d_decimal)
            throw DimensionError("null argument");
        const DistillOutcome o = suppression_estimate(p, BigCount(n), BigCount(k), BigCount(d),
                                                      big_parse(a_d_decimal), delta_in);
        *delta_out = o.delta_out;
        *accept_prob = o.accept_prob;
        *cost = o.cost;
        return PRM_OK;
    });
}

prm_status prm_concatenated_overhead(long long n, long long k, int rounds, char** json) {
    return guarded([&] {
        const OverheadRatio r = concatenated_overhead(BigCount(n), BigCount(k), rounds);
        nlohmann::json j{{"numerator", big_str(r.numerator)},
                         {"denominator", big_str(r.denominator)},
                         {"value", r.value}};
        return emit(j.dump(), json);
    });
}

prm_status prm_solve_xi(int p, double theta, double tol, double* xi) {
    return guarded([&] {
        if (!xi) throw DimensionError("null output pointer");
        *xi = solve_xi(p, theta, tol > 0 ? tol : 1e-13);
        return PRM_OK;
    });
}

prm_status prm_entropy(int p, double theta, double* h) {
    return guarded([&] {
        if (!h) throw DimensionError("null output pointer");
        *h = entropy_h(p, theta);
        return PRM_OK;
    });
}

prm_status prm_gamma0(int p, double theta, double* out) {
    return guarded([&] {
        if (!out) throw DimensionError("null output pointer");
        *out = gamma0(p, theta);
        return PRM_OK;
    });
}

prm_status prm_optimize_gamma0(int p, double tol, double* gamma0_min, double* t0) {
    return guarded([&] {
        if (!gamma0_min || !t0) throw DimensionError("null output pointer");
        const auto [g, t] = optimize_gamma0(p, tol > 0 ? tol : 1e-12);
        *gamma0_min = g;
        *t0 = t;
        return PRM_OK;
    });
}

prm_status prm_solve_xi1(double t, double tol, double* xi1) {
    return guarded([&] {
        if (!xi1) throw DimensionError("null output pointer");
        *xi1 = solve_xi1(t, tol > 0 ? tol : 1e-13);
        return PRM_OK;
    });
}

prm_status prm_large_p_constant(double* c) {
    return guarded([&] {
        if (!c) throw DimensionError("null output pointer");
        *c = large_p_limit_constant();
        return PRM_OK;
    });
}

prm_status prm_gamma_large_p(int p, double* out) {
    return guarded([&] {
        if (!out) throw DimensionError("null output pointer");
        *out = gamma_large_p(p);
        return PRM_OK;
    });
}

prm_status prm_smallest_code_scan(int p, const char* n_limit_decimal, char** report_json) {
    return guarded([&] {
        const BigCount limit = (n_limit_decimal && *n_limit_decimal)
                                   ? big_parse(n_limit_decimal)
                                   : big_pow(10, 30);
        return emit(to_json(smallest_code_scan(p, limit)).dump(), report_json);
    });
}

prm_status prm_random_search(const char* config_json, char** result_json) {
    return guarded([&] {
        if (!config_json) throw DimensionError("null config");
        const SearchConfig cfg = search_config_from_json(nlohmann::json::parse(config_json));
        return emit(to_json(random_search(cfg)).dump(), result_json);
    });
}

prm_status prm_replay(const char* puncture_set_json, const char* budget_decimal, uint64_t seed,
                      int threads, int isd_iters, char** report_json) {
    return guarded([&] {
        if (!puncture_set_json) throw DimensionError("null puncture set");
        const PunctureSet s = puncture_set_from_json(nlohmann::json::parse(puncture_set_json));
        AnalysisOptions opts;
        opts.budget = parse_budget(budget_decimal);
        opts.seed = seed;
        opts.threads = threads > 0 ? threads : 1;
        if (isd_iters > 0) opts.isd_iters = isd_iters;
        return emit(to_json(replay(s.p, s.m, s.columns, opts)).dump(), report_json);
    });
}

prm_status prm_decode_column(long long c, int p, int m, long long* coords) {
    return guarded([&] {
        if (!coords) throw DimensionError("null output pointer");
        if (c < 1) throw DomainError("column must be >= 1");
        const auto x = point_of_column(static_cast<std::uint64_t>(c), p, m);
        for (int i = 0; i < m; ++i) coords[i] = x[static_cast<std::size_t>(i)];
        return PRM_OK;
    });
}

prm_status prm_yield_gamma(const char* n_decimal, const char* k_decimal, const char* d_decimal,
                           double* gamma) {
    return guarded([&] {
        if (!n_decimal || !k_decimal || !d_decimal || !gamma)
            throw DimensionError("null argument");
        *gamma = yield_gamma(big_parse(n_decimal), big_parse(k_decimal), big_parse(d_decimal));
        return PRM_OK;
    });
}

}  // extern "C"
