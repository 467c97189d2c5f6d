// Acceptance suite. Each test case covers one release criterion, pins its
// tolerances in code, and prints a single PASS/FAIL line.

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "core/asymptotics.hpp"
#include "core/distill.hpp"
#include "core/search.hpp"
#include "core/triortho.hpp"

using namespace prm;

namespace {

struct Criterion {
    int number;
    std::string title;
    int failures = 0;

    Criterion(int n, std::string t) : number(n), title(std::move(t)) {}
    ~Criterion() {
        std::printf("[criterion %02d] %s: %s\n", number, title.c_str(),
                    failures == 0 ? "PASS" : "FAIL");
        std::fflush(stdout);
    }
};

#define ACC_CHECK(crit, cond)       \
    do {                            \
        const bool acc_ok_ = (cond); \
        CHECK(acc_ok_);             \
        if (!acc_ok_) ++(crit).failures; \
    } while (0)

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

nlohmann::json load_set(const std::string& name) {
    std::ifstream f(std::string(PRM_DATA_DIR) + "/" + name);
    REQUIRE(f.good());
    nlohmann::json j;
    f >> j;
    return j;
}

}  // namespace

TEST_CASE("criterion 01: smallest sublogarithmic blocks per prime") {
    Criterion crit(1, "smallest sublogarithmic blocks per prime");
    struct Row {
        int p, m;
        long long w;
        const char *n, *k, *d;
    };
    const std::vector<Row> rows = {
        {2, 58, 14, "288215893050995568", "14483100716176", "21700"},
        {3, 32, 16, "1852445880782154", "574308069687", "3510"},
        {5, 16, 16, "152186472515", "401418110", "429"},
        {7, 13, 20, "96448935471", "440074936", "231"},
        {11, 7, 19, "18874416", "612755", "35"},
        {13, 7, 23, "60848853", "1899664", "35"},
        {17, 4, 17, "77540", "5981", "15"},
        {19, 4, 19, "121470", "8851", "15"},
        {23, 1, 5, "17", "6", "3"},
    };
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& row : rows) {
        const CodeReport rep = smallest_code_scan(row.p, big_pow(10, 30));
        ACC_CHECK(crit, rep.construction.m == row.m);
        ACC_CHECK(crit, rep.construction.w == row.w);
        ACC_CHECK(crit, rep.n == big_parse(row.n));
        ACC_CHECK(crit, rep.k == big_parse(row.k));
        ACC_CHECK(crit, rep.d.has_value() && *rep.d == big_parse(row.d));
        ACC_CHECK(crit, rep.gamma.has_value() && *rep.gamma < 1.0);
    }
    const double wall = seconds_since(t0);
    ACC_CHECK(crit, wall < 10.0);
}

TEST_CASE("criterion 02: asymptotic yield optima per prime") {
    Criterion crit(2, "asymptotic yield optima per prime");
    const std::vector<std::tuple<int, double, double>> rows = {
        {2, 0.67799, 0.27063},  {3, 0.63215, 0.27369},  {5, 0.55914, 0.27868},
        {7, 0.50786, 0.28230},  {11, 0.44108, 0.28720}, {13, 0.41785, 0.28896},
        {17, 0.38273, 0.29169}, {19, 0.36901, 0.29278}, {23, 0.34663, 0.29459},
    };
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& [p, g_ref, t_ref] : rows) {
        const auto [g, t] = optimize_gamma0(p);
        ACC_CHECK(crit, std::abs(g - g_ref) <= 1e-4);
        ACC_CHECK(crit, std::abs(t - t_ref) <= 1e-4);
    }
    ACC_CHECK(crit, seconds_since(t0) < 10.0);
}

TEST_CASE("criterion 03: single- and double-puncture closed forms") {
    Criterion crit(3, "single- and double-puncture closed forms");
    struct Entry {
        int p, m;
        long long n, d;
    };
    // single puncture (k = 1)
    const std::vector<Entry> singles = {
        {3, 2, 8, 2},     {3, 3, 26, 2},    {3, 4, 80, 5},   {3, 5, 242, 8},
        {3, 6, 728, 8},   {3, 7, 2186, 17}, {3, 8, 6560, 26},
        {5, 1, 4, 2},     {5, 2, 24, 3},    {5, 3, 124, 4},  {5, 4, 624, 14},
        {7, 1, 6, 2},     {7, 2, 48, 4},    {7, 3, 342, 6},
        {11, 1, 10, 4},   {11, 2, 120, 7},
    };
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& e : singles) {
        const CodeReport rep = one_two_puncture_params(e.p, e.m, 1);
        ACC_CHECK(crit, rep.n == e.n);
        ACC_CHECK(crit, rep.k == 1);
        ACC_CHECK(crit, rep.d.has_value() && *rep.d == e.d);
        ACC_CHECK(crit, rep.d_certainty == Certainty::exact);
        // the two-puncture variant drops one more unit of distance and length
        const CodeReport two = one_two_puncture_params(e.p, e.m, 2);
        ACC_CHECK(crit, two.n == e.n - 1);
        ACC_CHECK(crit, two.k == 2);
        ACC_CHECK(crit, *two.d == e.d - 1);
    }
    ACC_CHECK(crit, seconds_since(t0) < 1.0);
}

TEST_CASE("criterion 04: exact certification of the 80-qutrit code") {
    Criterion crit(4, "exact certification of the 80-qutrit code");
    const TriorthoPair pair = build_code(RmSpec{3, 4, 2}, PunctureSet{3, 4, {1}});
    AnalysisOptions opts;
    opts.threads = 2;
    const DistanceResult dr = quantum_distance(pair, opts);
    ACC_CHECK(crit, dr.d == 5);
    ACC_CHECK(crit, dr.certainty == Certainty::exact);
    ACC_CHECK(crit, dr.route == "dual-enumeration");
    ACC_CHECK(crit, logical_z_count(pair, 5, opts) == 2080);
}

TEST_CASE("criterion 05: depolarizing threshold of the 80-qutrit code") {
    Criterion crit(5, "depolarizing threshold of the 80-qutrit code");
    const TriorthoPair pair = build_code(RmSpec{3, 4, 2}, PunctureSet{3, 4, {1}});
    EnumOptions eo;
    eo.threads = 2;
    const WeightEnumerator support = z_support_enumerator(pair, eo);
    const WeightEnumerator stab = z_stabilizer_enumerator(pair, eo);

    // fixed point of the suppression map, in per-qudit error probability
    // units epsilon = (p-1) delta / p
    const double frac = 2.0 / 3.0;
    auto err_curve = [&](double eps) {
        return frac *
               suppression_exact(support, stab, NoiseModel{3, eps / frac}).delta_out;
    };
    const auto fp = threshold(err_curve, 1e-4, frac * 0.999, 1e-8);
    ACC_CHECK(crit, fp.has_value());
    ACC_CHECK(crit, fp && std::abs(*fp - 0.16) <= 0.01);

    // strictly below the diagonal everywhere under the fixed point
    if (fp) {
        for (double eps = 0.005; eps < *fp - 1e-6; eps += 0.005)
            ACC_CHECK(crit, err_curve(eps) < eps);
    }
}

TEST_CASE("criterion 06: stored puncture sets reproduce the searched codes") {
    Criterion crit(6, "stored puncture sets reproduce the searched codes");
    // budget-feasible exactly; the stored distance and count must match
    const std::vector<std::string> exact_files = {
        "p3_n72_k9_d3.json",  "p3_n200_k43_d3.json", "p3_n206_k37_d4.json",
        "p3_n667_k62_d4.json", "p5_n20_k5_d2.json",   "p5_n112_k13_d3.json",
    };
    // witness-only: a seeded search must exhibit a word of the stored weight
    const std::vector<std::string> witness_files = {
        "p3_n230_k13_d6.json", "p3_n215_k28_d5.json", "p3_n690_k39_d5.json",
        "p5_n519_k106_d5.json",
    };

    AnalysisOptions opts;
    opts.threads = 2;
    opts.seed = 2024;
    opts.isd_iters = 48;

    for (const auto& name : exact_files) {
        const auto j = load_set(name);
        const PunctureSet s = puncture_set_from_json(j);
        ACC_CHECK(crit, check_triorthogonal(rm_generator(RmSpec{s.p, s.m, triortho_max_degree(s.p, s.m)})));
        const CodeReport rep = replay(s.p, s.m, s.columns, opts);
        ACC_CHECK(crit, big_str(rep.n) == j["expect"]["n"].get<std::string>());
        ACC_CHECK(crit, big_str(rep.k) == j["expect"]["k"].get<std::string>());
        ACC_CHECK(crit, rep.d_certainty == Certainty::exact);
        ACC_CHECK(crit, rep.d && big_str(*rep.d) == j["expect"]["d"].get<std::string>());
        ACC_CHECK(crit, rep.a_d && big_str(*rep.a_d) == j["expect"]["a_d"].get<std::string>());
    }

    // the two small-puncture codes of the same table, exactly
    {
        const CodeReport two = replay(3, 4, {1, 2}, opts);
        ACC_CHECK(crit, two.n == 79);
        ACC_CHECK(crit, two.k == 2);
        ACC_CHECK(crit, two.d && *two.d == 4 && two.d_certainty == Certainty::exact);
        ACC_CHECK(crit, two.a_d && *two.a_d == 130);
        const CodeReport one = replay(5, 2, {1}, opts);
        ACC_CHECK(crit, one.n == 24);
        ACC_CHECK(crit, one.k == 1);
        ACC_CHECK(crit, one.d && *one.d == 3 && one.d_certainty == Certainty::exact);
        ACC_CHECK(crit, one.a_d && *one.a_d == 96);
    }

    for (const auto& name : witness_files) {
        const auto j = load_set(name);
        const PunctureSet s = puncture_set_from_json(j);
        ACC_CHECK(crit, check_triorthogonal(rm_generator(RmSpec{s.p, s.m, triortho_max_degree(s.p, s.m)})));
        const auto t0 = std::chrono::steady_clock::now();
        const CodeReport rep = replay(s.p, s.m, s.columns, opts);
        ACC_CHECK(crit, big_str(rep.n) == j["expect"]["n"].get<std::string>());
        ACC_CHECK(crit, big_str(rep.k) == j["expect"]["k"].get<std::string>());
        ACC_CHECK(crit, rep.d_certainty == Certainty::upper_bound);
        // the witness matches the stored weight, certifying d <= recorded d
        ACC_CHECK(crit, rep.d && big_str(*rep.d) == j["expect"]["d"].get<std::string>());
        ACC_CHECK(crit, seconds_since(t0) < 1800.0);
    }
}

TEST_CASE("criterion 07: punctured-distance formula against brute force") {
    Criterion crit(7, "punctured-distance formula against brute force");

    // exhaustive codeword walks; formula touches nothing here
    const std::vector<std::pair<int, int>> grids = {{2, 1}, {2, 2}, {2, 3}, {2, 4},
                                                    {3, 1}, {3, 2}, {3, 3},
                                                    {5, 1}, {5, 2}};
    for (const auto& [p, m] : grids) {
        const long long top = static_cast<long long>(m) * (p - 1);
        for (long long r = 0; r <= top; ++r) {
            const FpMatrix g = rm_generator(RmSpec{p, m, r});
            if (big_pow(static_cast<std::uint64_t>(p), g.n_rows()) > 600000) continue;  // dim > 12-ish
            if (g.n_rows() > 12) continue;

            // shell index of every column (coordinate sum of the point)
            const std::size_t npts = g.cols;
            std::vector<int> shell(npts);
            for (std::uint64_t c = 1; c <= npts; ++c) {
                const auto x = point_of_column(c, p, m);
                int wsum = 0;
                for (Fp xi : x) wsum += xi;
                shell[c - 1] = wsum;
            }

            // minimum, over nonzero codewords, of the support beyond every w
            std::vector<long long> min_beyond(static_cast<std::size_t>(top) + 1, 1LL << 60);
            std::size_t total = 1;
            for (std::size_t i = 0; i < g.n_rows(); ++i) total *= static_cast<std::size_t>(p);
            std::vector<Fp> coeff(g.n_rows(), 0);
            std::vector<Fp> word(npts, 0);
            std::vector<long long> cnt(static_cast<std::size_t>(top) + 1, 0);
            for (std::size_t t = 1; t < total; ++t) {
                std::size_t j = 0;
                std::size_t q = t;
                while (q % static_cast<std::size_t>(p) == 0) {
                    q /= static_cast<std::size_t>(p);
                    ++j;
                }
                for (std::size_t c = 0; c < npts; ++c) {
                    const Fp add = g.rows[j][c];
                    if (add == 0) continue;
                    const Fp before = word[c];
                    Fp after = static_cast<Fp>(before + add);
                    if (after >= p) after = static_cast<Fp>(after - p);
                    word[c] = after;
                    cnt[static_cast<std::size_t>(shell[c])] += (after != 0) - (before != 0);
                }
                long long beyond = 0;
                for (long long w = top; w >= 0; --w) {
                    if (w < top) beyond += cnt[static_cast<std::size_t>(w + 1)];
                    // beyond == support strictly above w
                    if (beyond < min_beyond[static_cast<std::size_t>(w)])
                        min_beyond[static_cast<std::size_t>(w)] = beyond;
                }
            }

            for (long long w = 0; w <= top; ++w) {
                const BigCount delta = delta_distance(m, r, w, p);
                if (delta == 0) continue;  // formula silent, rank may drop
                ACC_CHECK(crit, BigCount(min_beyond[static_cast<std::size_t>(w)]) == delta);
            }
        }
    }

    // witness support equals the count wherever it is positive
    for (int p : {2, 3, 5}) {
        for (int m = 1; m <= 4; ++m) {
            const long long top = static_cast<long long>(m) * (p - 1);
            const std::uint64_t npts =
                pow_u64(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(m));
            std::vector<int> shell(npts);
            for (std::uint64_t c = 1; c <= npts; ++c) {
                const auto x = point_of_column(c, p, m);
                int wsum = 0;
                for (Fp xi : x) wsum += xi;
                shell[c - 1] = wsum;
            }
            for (long long r = 0; r <= top; ++r) {
                for (long long w = 0; w <= top; ++w) {
                    const BigCount delta = delta_distance(m, r, w, p);
                    if (delta == 0) continue;
                    const FpVector ev = extremal_witness(p, m, r, w);
                    BigCount outside = 0;
                    for (std::uint64_t c = 0; c < npts; ++c)
                        if (shell[c] > w && ev.v[c] != 0) ++outside;
                    ACC_CHECK(crit, outside == delta);
                }
            }
        }
    }
}

TEST_CASE("criterion 08: one-round estimate at the published working point") {
    Criterion crit(8, "one-round estimate at the published working point");
    const DistillOutcome o = suppression_estimate(5, 519, 106, 5, 2180, 1e-3);
    ACC_CHECK(crit, o.delta_out >= 6.5e-18);
    ACC_CHECK(crit, o.delta_out <= 9.5e-18);
    ACC_CHECK(crit, o.cost >= 7.0);
    ACC_CHECK(crit, o.cost <= 7.8);
}

TEST_CASE("criterion 09: large-p limit of the yield parameter") {
    Criterion crit(9, "large-p limit of the yield parameter");
    const double c = large_p_limit_constant();
    ACC_CHECK(crit, std::abs(c - 2.38309) <= 1e-4);

    // first 100 primes: the scaled exact value closes in monotonically
    std::vector<int> primes;
    for (int q = 2; static_cast<int>(primes.size()) < 100; ++q) {
        if (is_prime(static_cast<std::uint32_t>(q))) primes.push_back(q);
    }
    double prev_gap = 1e300;
    for (int p : primes) {
        const double scaled = gamma0(p, (p - 1) / 6.0) * std::log(static_cast<double>(p));
        const double gap = std::abs(scaled - c) / c;
        ACC_CHECK(crit, gap < prev_gap);
        prev_gap = gap;
    }
    ACC_CHECK(crit, prev_gap < 0.10);  // at the 100th prime (541)
}

TEST_CASE("criterion 10: property suites") {
    Criterion crit(10, "property suites");

    // transform involution on sampled codes
    {
        std::mt19937 rng(31);
        for (int p : {2, 3, 5}) {
            for (int trial = 0; trial < 6; ++trial) {
                const std::size_t n = 6 + rng() % 7, dim = 1 + rng() % 4;
                FpMatrix m(static_cast<Fp>(p), dim, n);
                for (auto& row : m.rows)
                    for (auto& x : row) x = static_cast<Fp>(rng() % p);
                const RrefResult red = rref(m);
                const WeightEnumerator w = enumerate_rowspace(red.mat, 1);
                const WeightEnumerator twice = macwilliams_transform(
                    macwilliams_transform(w, p, red.mat.n_rows()), p, n - red.mat.n_rows());
                ACC_CHECK(crit, twice.coeff == w.coeff);
            }
        }
    }

    // dual-degree orthogonality across the small grid
    for (int p : {2, 3, 5}) {
        for (int m = 1; m <= 3; ++m) {
            const long long top = static_cast<long long>(m) * (p - 1);
            for (long long r = 0; r < top; ++r) {
                const FpMatrix a = rm_generator(RmSpec{p, m, r});
                const FpMatrix b = rm_generator(RmSpec{p, m, dual_degree(RmSpec{p, m, r})});
                bool all_zero = true;
                for (const auto& u : a.rows) {
                    for (const auto& v : b.rows) {
                        std::uint32_t dot = 0;
                        for (std::size_t i = 0; i < a.cols; ++i) dot += u[i] * v[i];
                        if (dot % static_cast<std::uint32_t>(p) != 0) all_zero = false;
                    }
                }
                ACC_CHECK(crit, all_zero);
            }
        }
    }

    // coefficient rows: total mass, symmetry, recurrence vs expansion
    for (int p : {2, 3, 5, 7}) {
        for (int m = 0; m <= 10; ++m) {
            const long long top = static_cast<long long>(m) * (p - 1);
            BigCount sum = 0;
            bool symmetric = true;
            for (long long s = 0; s <= top; ++s) {
                sum += pnomial(m, s, p);
                if (pnomial(m, s, p) != pnomial(m, top - s, p)) symmetric = false;
            }
            ACC_CHECK(crit, sum == big_pow(static_cast<std::uint64_t>(p),
                                           static_cast<std::uint64_t>(m)));
            ACC_CHECK(crit, symmetric);
            if (m <= 9) {
                const auto row = pnomial_row_by_expansion(m, p);
                bool match = true;
                for (std::size_t s = 0; s < row.size(); ++s)
                    if (pnomial(m, static_cast<long long>(s), p) != row[s]) match = false;
                ACC_CHECK(crit, match);
            }
        }
    }

    // shifted-sum comparison over the full grid
    for (int p : {2, 3, 5}) {
        for (int m = 1; m <= 6; ++m) {
            const long long top = static_cast<long long>(m) * (p - 1);
            bool all_hold = true;
            for (long long r = 0; r <= top; ++r)
                for (long long w = 0; w <= top; ++w)
                    for (int a = 0; a <= p - 1 && a <= r; ++a)
                        if (!delta_sum_bound_holds(m, r, w, a, p)) all_hold = false;
            ACC_CHECK(crit, all_hold);
        }
    }

    // search determinism under a fixed seed
    {
        SearchConfig cfg;
        cfg.p = 3;
        cfg.m = 4;
        cfg.k_min = 1;
        cfg.k_max = 3;
        cfg.seed = 424242;
        cfg.iterations = 25;
        cfg.distance_budget = 50000;
        cfg.isd_iters = 4;
        const SearchResult a = random_search(cfg);
        const SearchResult b = random_search(cfg);
        ACC_CHECK(crit, to_json(a).dump() == to_json(b).dump());
    }
}
