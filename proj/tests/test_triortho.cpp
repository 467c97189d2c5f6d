#include <doctest.h>

#include <random>

#include "core/search.hpp"
#include "core/triortho.hpp"

using namespace prm;

namespace {

FpMatrix random_code(int p, std::size_t dim, std::size_t n, std::mt19937& rng) {
    FpMatrix m(static_cast<Fp>(p), dim, n);
    for (auto& row : m.rows)
        for (auto& x : row) x = static_cast<Fp>(rng() % p);
    return m;
}

}  // namespace

TEST_CASE("triorthogonality check") {
    CHECK(check_triorthogonal(rm_generator(RmSpec{3, 4, 2})));
    CHECK_FALSE(check_triorthogonal(rm_generator(RmSpec{3, 4, 3})));
    for (int p : {2, 3, 5}) {
        FpMatrix ones(static_cast<Fp>(p), 1, static_cast<std::size_t>(p));
        for (auto& x : ones.rows[0]) x = 1;
        CHECK(check_triorthogonal(ones));
    }
}

TEST_CASE("code assembly") {
    const TriorthoPair a = build_code(RmSpec{3, 4, 2}, PunctureSet{3, 4, {1}});
    CHECK(a.n == 80);
    CHECK(a.k == 1);
    CHECK_FALSE(a.rank_deficient);
    CHECK(a.g_shortened.n_rows() == 14);
    CHECK(a.g_punctured.n_rows() == 15);
    // shortened rows sit at the bottom of the punctured stack
    for (std::size_t i = 0; i < 14; ++i)
        CHECK(a.g_punctured.rows[i + 1] == a.g_shortened.rows[i]);
    // pair and triple coordinate sums of the shortened generator stay zero
    for (const auto& u : a.g_shortened.rows) {
        for (const auto& v : a.g_shortened.rows) {
            std::uint64_t s2 = 0;
            for (std::size_t c = 0; c < a.g_shortened.cols; ++c) s2 += u[c] * v[c];
            CHECK(s2 % 3 == 0);
        }
    }

    const TriorthoPair b = build_code(RmSpec{3, 4, 2}, PunctureSet{3, 4, {}});
    CHECK(b.n == 81);
    CHECK(b.k == 0);

    CHECK_THROWS_AS(build_code(RmSpec{3, 4, 3}, PunctureSet{3, 4, {1}}), DomainError);
    CHECK_THROWS_AS(build_code(RmSpec{3, 4, 2}, PunctureSet{5, 4, {1}}), DimensionError);
}

TEST_CASE("weight enumerator basics") {
    // repetition code {00, 11} over F_2 is its own transform image
    FpMatrix rep(2, 1, 2);
    rep.rows[0] = {1, 1};
    const WeightEnumerator w = enumerate_rowspace(rep, 1);
    CHECK(w.coeff == std::vector<BigCount>{1, 0, 1});
    const WeightEnumerator t = macwilliams_transform(w, 2, 1);
    CHECK(t.coeff == w.coeff);

    // zero code: single word of weight zero
    FpMatrix zero(3, 0, 5);
    zero.cols = 5;
    const WeightEnumerator wz = weight_enumerator_exact(zero, EnumOptions{});
    CHECK(wz.coeff[0] == 1);
    CHECK(wz.total() == 1);
    CHECK(wz.min_positive_weight() == -1);
}

TEST_CASE("transform involution and dual agreement") {
    std::mt19937 rng(11);
    for (int p : {2, 3, 5}) {
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t n = 6 + rng() % 7;
            const std::size_t dim = 1 + rng() % 4;
            const FpMatrix c = random_code(p, dim, n, rng);
            const RrefResult red = rref(c);
            const FpMatrix dual = nullspace_basis(red.mat);

            const WeightEnumerator wc = enumerate_rowspace(red.mat, 1);
            const WeightEnumerator wd = enumerate_rowspace(dual, 1);
            // transform of the dual's distribution reproduces the code's
            const WeightEnumerator back = macwilliams_transform(wd, p, dual.n_rows());
            CHECK(back.coeff == wc.coeff);
            // and applying it twice returns the original
            const WeightEnumerator twice =
                macwilliams_transform(macwilliams_transform(wc, p, red.mat.n_rows()), p,
                                      n - red.mat.n_rows());
            CHECK(twice.coeff == wc.coeff);
        }
    }
}

TEST_CASE("character-sum route agrees with the walk") {
    std::mt19937 rng(5);
    const FpMatrix c = random_code(3, 13, 40, rng);
    const RrefResult red = rref(c);
    REQUIRE(red.mat.n_rows() == 13);
    const WeightEnumerator walk = enumerate_rowspace(red.mat, 2);
    const WeightEnumerator charsum = enumerate_rowspace_charsum3(red.mat, 2);
    CHECK(walk.coeff == charsum.coeff);
}

TEST_CASE("budget routing") {
    const TriorthoPair pair = build_code(RmSpec{3, 4, 2}, PunctureSet{3, 4, {1}});
    // dual dimension is 14, so a budget below 3^14 must refuse
    CHECK_THROWS_AS(z_support_enumerator(pair, EnumOptions{BigCount(1000), 1}), BudgetError);
}

TEST_CASE("distance routes") {
    AnalysisOptions opts;
    opts.threads = 2;

    // exact by dual enumeration: 9-point set, dual dimension 6
    const TriorthoPair nine =
        build_code(RmSpec{3, 4, 2}, PunctureSet{3, 4, {12, 29, 34, 36, 53, 57, 63, 67, 75}});
    const DistanceResult dr = quantum_distance(nine, opts);
    CHECK(dr.d == 3);
    CHECK(dr.certainty == Certainty::exact);
    CHECK(dr.route == "dual-enumeration");

    // closed form when enumeration is out of budget but punctures <= 2
    const TriorthoPair single = build_code(RmSpec{5, 3, 3}, PunctureSet{5, 3, {1}});
    const DistanceResult ds = quantum_distance(single, opts);
    CHECK(ds.d == 4);
    CHECK(ds.certainty == Certainty::exact);
    CHECK(ds.route == "closed-form");

    // upper bound by information-set search otherwise
    AnalysisOptions tight;
    tight.budget = 100;
    tight.isd_iters = 12;
    tight.seed = 99;
    const DistanceResult db = quantum_distance(nine, tight);
    CHECK(db.certainty == Certainty::upper_bound);
    CHECK(db.route == "info-set-search");
    CHECK(db.d >= 3);  // an upper bound can not undercut the true distance
    REQUIRE(db.witness.has_value());
    // witness lies in the dual of the shortened generator
    const FpMatrix g0 = nine.g_shortened;
    for (const auto& row : g0.rows) {
        std::uint64_t dot = 0;
        for (std::size_t c = 0; c < g0.cols; ++c) dot += row[c] * db.witness->v[c];
        CHECK(dot % 3 == 0);
    }
}

TEST_CASE("logical operator counts") {
    AnalysisOptions opts;
    opts.threads = 2;

    const TriorthoPair small = build_code(RmSpec{5, 2, 2}, PunctureSet{5, 2, {1}});
    CHECK(quantum_distance(small, opts).d == 3);
    CHECK(logical_z_count(small, 3, opts) == 96);

    // no punctures, no logical operators
    const TriorthoPair none = build_code(RmSpec{3, 4, 2}, PunctureSet{3, 4, {}});
    const DistanceResult d0 = quantum_distance(none, opts);
    CHECK(logical_z_count(none, d0.d.convert_to<long long>(), opts) == 0);
}

TEST_CASE("upper-bound search behavior") {
    FpMatrix g(3, 2, 6);
    g.rows[0] = {0, 0, 1, 0, 0, 0};  // weight-1 row is found immediately
    g.rows[1] = {1, 1, 1, 1, 1, 1};
    const LowWeightWord lw = min_weight_upper_bound(g, 0, 4, 4);
    CHECK(lw.weight == 1);

    // determinism under a fixed seed
    const FpMatrix big = puncture(rm_generator(RmSpec{3, 4, 5}), PunctureSet{3, 4, {1}});
    const LowWeightWord a = min_weight_upper_bound(big, 0, 123, 10);
    const LowWeightWord b = min_weight_upper_bound(big, 0, 123, 10);
    CHECK(a.weight == b.weight);
    CHECK(a.word.v == b.word.v);
}

TEST_CASE("yield parameter") {
    CHECK(yield_gamma(15, 1, 3) == doctest::Approx(2.46497).epsilon(1e-4));
    CHECK(yield_gamma(519, 106, 5) == doctest::Approx(0.986976).epsilon(1e-5));
    CHECK(yield_gamma(100, 100, 7) == doctest::Approx(0.0));
    CHECK_THROWS_AS(yield_gamma(10, 0, 3), DomainError);
    CHECK_THROWS_AS(yield_gamma(10, 1, 1), DomainError);
}

TEST_CASE("minimum-weight words exist outside the stabilizer span") {
    AnalysisOptions opts;
    opts.threads = 2;
    const std::vector<std::pair<RmSpec, PunctureSet>> cases = {
        {{3, 4, 2}, {3, 4, {12, 29, 34, 36, 53, 57, 63, 67, 75}}},
        {{5, 2, 2}, {5, 2, {1}}},
        {{5, 2, 2}, {5, 2, {3, 6, 12, 16, 23}}},
    };
    for (const auto& [spec, s] : cases) {
        const TriorthoPair pair = build_code(spec, s);
        const DistanceResult dr = quantum_distance(pair, opts);
        REQUIRE(dr.certainty == Certainty::exact);
        CHECK(logical_z_count(pair, dr.d.convert_to<long long>(), opts) >= 1);
    }
}

TEST_CASE("distance is invariant under joint affine relabeling") {
    // map x -> Mx + b applied to the puncture points; the evaluation space is
    // invariant, so the code parameters must not move
    const std::vector<std::uint64_t> cols{12, 29, 34, 36, 53, 57, 63, 67, 75};
    AnalysisOptions opts;
    opts.threads = 2;
    const CodeReport base = replay(3, 4, cols, opts);

    std::mt19937 rng(17);
    FpMatrix mat(3, 4, 4);
    do {
        for (auto& row : mat.rows)
            for (auto& x : row) x = static_cast<Fp>(rng() % 3);
    } while (rank(mat) != 4);
    std::vector<Fp> shift{1, 2, 0, 1};

    std::vector<std::uint64_t> mapped;
    for (std::uint64_t c : cols) {
        const auto x = point_of_column(c, 3, 4);
        std::vector<Fp> y(4);
        for (int i = 0; i < 4; ++i) {
            std::uint32_t acc = shift[static_cast<std::size_t>(i)];
            for (int j = 0; j < 4; ++j)
                acc += mat.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                       x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = static_cast<Fp>(acc % 3);
        }
        mapped.push_back(column_of_point(y, 3));
    }
    const CodeReport moved = replay(3, 4, mapped, opts);
    CHECK(base.n == moved.n);
    CHECK(base.k == moved.k);
    CHECK(*base.d == *moved.d);
    CHECK(*base.a_d == *moved.a_d);
}
