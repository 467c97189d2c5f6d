#include "triortho.hpp"

#include <string>

namespace prm {

bool check_triorthogonal(const FpMatrix& g) {
    const int p = g.p;
    const std::size_t rws = g.n_rows();
    const std::size_t n = g.cols;

    std::vector<std::vector<Fp>> pair_prod(rws * rws);
    for (std::size_t i = 0; i < rws; ++i) {
        for (std::size_t j = i; j < rws; ++j) {
            std::vector<Fp> prod(n);
            std::uint64_t s = 0;
            for (std::size_t c = 0; c < n; ++c) {
                prod[c] = static_cast<Fp>((static_cast<std::uint32_t>(g.rows[i][c]) * g.rows[j][c]) % p);
                s += prod[c];
            }
            if (s % static_cast<std::uint64_t>(p) != 0) return false;
            pair_prod[i * rws + j] = std::move(prod);
        }
    }
    for (std::size_t i = 0; i < rws; ++i) {
        for (std::size_t j = i; j < rws; ++j) {
            const auto& prod = pair_prod[i * rws + j];
            for (std::size_t l = j; l < rws; ++l) {
                std::uint64_t s = 0;
                for (std::size_t c = 0; c < n; ++c)
                    s += static_cast<std::uint32_t>(prod[c]) * g.rows[l][c];
                if (s % static_cast<std::uint64_t>(p) != 0) return false;
            }
        }
    }
    return true;
}

TriorthoPair build_code(const RmSpec& spec, const PunctureSet& s) {
    spec.validate();
    s.validate();
    if (s.p != spec.p || s.m != spec.m)
        throw DimensionError("build_code: puncture set and code live on different point sets");
    if (3 * spec.r >= static_cast<long long>(spec.m) * (spec.p - 1))
        throw DomainError("build_code: 3r must stay below m(p-1) for a triorthogonal space");

    const FpMatrix g = rm_generator(spec);
    SplitResult split = split_on_columns(g, s);

    TriorthoPair pair;
    pair.spec = spec;
    pair.punctures = s;
    pair.n = pow_u64(static_cast<std::uint64_t>(spec.p), static_cast<std::uint64_t>(spec.m)) -
             s.columns.size();
    pair.k = split.s_rank;
    pair.rank_deficient = split.s_rank < s.columns.size();

    pair.g_punctured = FpMatrix(static_cast<Fp>(spec.p), 0, split.pivot_rows.cols);
    pair.g_punctured.cols = split.pivot_rows.cols;
    for (auto& r : split.pivot_rows.rows) pair.g_punctured.rows.push_back(r);
    for (auto& r : split.zero_rows.rows) pair.g_punctured.rows.push_back(r);
    pair.g_shortened = std::move(split.zero_rows);
    return pair;
}

namespace {

FpMatrix z_support_generator(const TriorthoPair& pair) {
    RmSpec dual{pair.spec.p, pair.spec.m, dual_degree(pair.spec)};
    return puncture(rm_generator(dual), pair.punctures);
}

FpMatrix z_stabilizer_generator(const TriorthoPair& pair) {
    RmSpec dual{pair.spec.p, pair.spec.m, dual_degree(pair.spec)};
    return shorten(rm_generator(dual), pair.punctures);
}

}  // namespace

WeightEnumerator z_support_enumerator(const TriorthoPair& pair, const EnumOptions& opts) {
    return weight_enumerator_exact(z_support_generator(pair), opts);
}

WeightEnumerator z_stabilizer_enumerator(const TriorthoPair& pair, const EnumOptions& opts) {
    return weight_enumerator_exact(z_stabilizer_generator(pair), opts);
}

DistanceResult quantum_distance(const TriorthoPair& pair, const AnalysisOptions& opts) {
    DistanceResult res;
    try {
        const WeightEnumerator w =
            z_support_enumerator(pair, EnumOptions{opts.budget, opts.threads});
        const long long d = w.min_positive_weight();
        res.d = (d < 0) ? 0 : d;
        res.certainty = Certainty::exact;
        res.route = "dual-enumeration";
        return res;
    } catch (const BudgetError&) {
    }

    if (pair.punctures.size() <= 2 && !pair.rank_deficient) {
        RmSpec dual{pair.spec.p, pair.spec.m, dual_degree(pair.spec)};
        const BigCount d_rm = rm_distance(dual);
        if (d_rm >= 2) {
            res.d = d_rm - static_cast<long long>(pair.punctures.size());
            res.certainty = Certainty::exact;
            res.route = "closed-form";
            return res;
        }
    }

    const LowWeightWord lw =
        min_weight_upper_bound(z_support_generator(pair), 0, opts.seed, opts.isd_iters);
    if (lw.weight < 0) {
        res.d = 0;
        res.route = "info-set-search";
        return res;
    }
    res.d = lw.weight;
    res.certainty = Certainty::upper_bound;
    res.route = "info-set-search";
    res.witness = lw.word;
    return res;
}

BigCount logical_z_count(const TriorthoPair& pair, long long d, const AnalysisOptions& opts) {
    if (d <= 0) throw DomainError("logical_z_count: d must be positive");
    const EnumOptions eopts{opts.budget, opts.threads};
    const WeightEnumerator support = z_support_enumerator(pair, eopts);
    if (static_cast<std::size_t>(d) >= support.coeff.size()) return 0;
    const BigCount in_support = support.coeff[static_cast<std::size_t>(d)];

    // Words of the stabilizer span are words of the parent evaluation code
    // that vanish on the removed points, so their punctured weight equals
    // their full weight; below the parent code's minimum weight the count
    // is zero without any enumeration.
    RmSpec dual{pair.spec.p, pair.spec.m, dual_degree(pair.spec)};
    if (BigCount(d) < rm_distance(dual)) return in_support;

    const WeightEnumerator stab = z_stabilizer_enumerator(pair, eopts);
    return in_support - stab.coeff[static_cast<std::size_t>(d)];
}

CodeReport analyze(const TriorthoPair& pair, const AnalysisOptions& opts) {
    CodeReport rep;
    rep.p = pair.spec.p;
    rep.n = pair.n;
    rep.k = pair.k;
    rep.rank_deficient = pair.rank_deficient;
    rep.construction.method = "punctured-reed-muller";
    rep.construction.p = pair.spec.p;
    rep.construction.m = pair.spec.m;
    rep.construction.r = pair.spec.r;
    rep.construction.columns = pair.punctures.columns;
    rep.construction.seed = opts.seed;
    rep.construction.budget = big_str(opts.budget);
    rep.construction.threads = opts.threads;
    rep.construction.isd_iters = opts.isd_iters;

    const DistanceResult dist = quantum_distance(pair, opts);
    if (dist.d > 0) {
        rep.d = dist.d;
        rep.d_certainty = dist.certainty;
        rep.construction.distance_route = dist.route;
        if (rep.k >= 1 && *rep.d >= 2) rep.gamma = yield_gamma(rep.n, rep.k, *rep.d);
        if (opts.want_a_d && dist.certainty == Certainty::exact) {
            try {
                rep.a_d = logical_z_count(pair, rep.d->convert_to<long long>(), opts);
            } catch (const BudgetError&) {
            }
        }
    }
    return rep;
}

}  // namespace prm
