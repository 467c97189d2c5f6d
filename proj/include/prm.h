/*
 * prm -- punctured Reed-Muller triorthogonal codes over prime fields.
 *
 * C interface to the shared library. All functions return a prm_status;
 * output strings are heap-allocated and must be released with
 * prm_string_free(). Big integers cross this boundary as decimal strings.
 * On failure, prm_last_error() describes the most recent error on the
 * calling thread.
 */

#ifndef PRM_H
#define PRM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum prm_status {
    PRM_OK = 0,
    PRM_ERR_USAGE = 1,    /* bad arguments / malformed input */
    PRM_ERR_DOMAIN = 2,   /* mathematically out of range */
    PRM_ERR_BUDGET = 3,   /* exact computation exceeds the budget */
    PRM_ERR_VERIFY = 4,   /* verification mismatch */
    PRM_ERR_INTERNAL = 5
} prm_status;

const char* prm_version(void);
const char* prm_last_error(void);
void prm_string_free(char* s);

/* ---- exact combinatorics (decimal-string results) ---- */

/* Coefficient of x^s in (1 + x + ... + x^{p-1})^m. */
prm_status prm_pnomial(long long m, long long s, int p, char** out);
/* Partial row sum; greater != 0 sums indices > s, else <= s. */
prm_status prm_pnomial_cum(long long m, long long s, int p, int greater, char** out);
/* weight_kind: 0 Hamming, 1 Lee, 2 coordinate-sum. */
prm_status prm_weight_count(long long m, long long k, int weight_kind, int p, char** out);
/* Minimum punctured support of a degree <= r polynomial outside the
 * coordinate-sum ball of radius w. */
prm_status prm_delta_distance(long long m, long long r, long long w, int p, char** out);
/* Minimum weight of the degree-r evaluation code. */
prm_status prm_rm_distance(int p, int m, long long r, char** out);
prm_status prm_dual_degree(int p, int m, long long r, long long* out);
/* log_p of the coordinate-sum coefficient, for curve data. */
prm_status prm_pnomial_log_p(long long m, long long s, int p, double* out);

/* ---- code handles ---- */

typedef struct prm_code prm_code;

/* columns are 1-based indices into the p^m evaluation points
 * (c - 1 = x1 + x2 p + x3 p^2 + ...). Pass r < 0 for the maximal
 * triorthogonal degree. */
prm_status prm_code_build(int p, int m, long long r, const uint64_t* columns, size_t ncols,
                          prm_code** out);
/* Punctures every point with coordinate sum <= w. */
prm_status prm_code_build_ball(int p, int m, long long r, long long w, prm_code** out);
void prm_code_free(prm_code* code);

long long prm_code_n(const prm_code* code);
long long prm_code_k(const prm_code* code);
int prm_code_p(const prm_code* code);
prm_status prm_code_check_triorthogonal(const prm_code* code, int* ok);

/* Computes distance (exact within budget, closed form for 0-2 punctures,
 * otherwise an upper bound from a seeded information-set search) and the
 * weight-d logical-operator count when exactly reachable. */
prm_status prm_code_analyze(prm_code* code, const char* budget_decimal, uint64_t seed,
                            int threads, int isd_iters);
prm_status prm_code_report_json(const prm_code* code, char** json);

/* space: 0 = support space of logical Z representatives (dual of the
 * X checks), 1 = Z-stabilizer span. */
prm_status prm_code_enumerator_json(prm_code* code, int space, const char* budget_decimal,
                                    int threads, char** json);

/* Exact one-round suppression map of a k=1 code (requires both enumerators
 * within budget). */
prm_status prm_code_distill_exact(prm_code* code, double delta_in, double* delta_out,
                                  double* accept_prob, double* cost);
/* Fixed point of the exact suppression map on (lo, hi), stated in per-qudit
 * error probability units ((p-1) delta / p); divide by (p-1)/p for the
 * depolarizing parameter. PRM_ERR_VERIFY when the curve does not cross the
 * diagonal inside the bracket. */
prm_status prm_code_threshold(prm_code* code, double lo, double hi, double tol, double* fixed_point);

/* Location-independent parameters after 1 or 2 punctures of the
 * maximal-degree space. */
prm_status prm_one_two_puncture_report(int p, int m, int punctures, char** json);

/* Leading-order estimate from block parameters alone. */
prm_status prm_suppression_estimate(int p, long long n, long long k, long long d,
                                    const char* a_d_decimal, double delta_in, double* delta_out,
                                    double* accept_prob, double* cost);
/* Exact n^rounds / k^(rounds-1) as {"numerator","denominator","value"}. */
prm_status prm_concatenated_overhead(long long n, long long k, int rounds, char** json);

/* ---- asymptotics ---- */

prm_status prm_solve_xi(int p, double theta, double tol, double* xi);
prm_status prm_entropy(int p, double theta, double* h);
prm_status prm_gamma0(int p, double theta, double* out);
prm_status prm_optimize_gamma0(int p, double tol, double* gamma0_min, double* t0);
prm_status prm_solve_xi1(double t, double tol, double* xi1);
prm_status prm_large_p_constant(double* c);
prm_status prm_gamma_large_p(int p, double* out);
/* Smallest block length at maximal degree with yield parameter below 1. */
prm_status prm_smallest_code_scan(int p, const char* n_limit_decimal, char** report_json);

/* ---- search and replay ---- */

prm_status prm_random_search(const char* config_json, char** result_json);
prm_status prm_replay(const char* puncture_set_json, const char* budget_decimal, uint64_t seed,
                      int threads, int isd_iters, char** report_json);
prm_status prm_decode_column(long long c, int p, int m, long long* coords /* length m */);
prm_status prm_yield_gamma(const char* n_decimal, const char* k_decimal, const char* d_decimal,
                           double* gamma);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PRM_H */
