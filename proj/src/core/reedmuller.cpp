#include "reedmuller.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace prm {

using nlohmann::json;

void RmSpec::validate() const {
    require_prime(static_cast<std::uint32_t>(p));
    if (m < 1) throw DomainError("RmSpec: m must be >= 1");
    if (r < 0 || r > max_degree())
        throw DomainError("RmSpec: degree out of range 0..m(p-1)");
}

long long triortho_max_degree(int p, int m) {
    return (static_cast<long long>(m) * (p - 1) - 1) / 3;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > (std::uint64_t{1} << 62) / base)
            throw DomainError("p^m exceeds supported range");
        r *= base;
    }
    return r;
}

void PunctureSet::validate() const {
    require_prime(static_cast<std::uint32_t>(p));
    if (m < 1) throw DomainError("PunctureSet: m must be >= 1");
    const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(m));
    std::set<std::uint64_t> seen;
    for (std::uint64_t c : columns) {
        if (c < 1 || c > total)
            throw DomainError("puncture column out of range: " + std::to_string(c));
        if (!seen.insert(c).second)
            throw DomainError("duplicate puncture column: " + std::to_string(c));
    }
}

json to_json(const PunctureSet& s) {
    return json{{"p", s.p}, {"m", s.m}, {"columns", s.columns}};
}

PunctureSet puncture_set_from_json(const json& j) {
    PunctureSet s;
    s.p = j.at("p").get<int>();
    s.m = j.at("m").get<int>();
    s.columns = j.at("columns").get<std::vector<std::uint64_t>>();
    s.validate();
    return s;
}

std::vector<Fp> point_of_column(std::uint64_t c, int p, int m) {
    const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(m));
    if (c < 1 || c > total) throw DomainError("column out of range");
    std::vector<Fp> x(static_cast<std::size_t>(m));
    std::uint64_t v = c - 1;
    for (int i = 0; i < m; ++i) {
        x[static_cast<std::size_t>(i)] = static_cast<Fp>(v % static_cast<std::uint64_t>(p));
        v /= static_cast<std::uint64_t>(p);
    }
    return x;
}

std::uint64_t column_of_point(const std::vector<Fp>& x, int p) {
    std::uint64_t c = 0;
    for (std::size_t i = x.size(); i-- > 0;) c = c * static_cast<std::uint64_t>(p) + x[i];
    return c + 1;
}

std::vector<std::vector<Fp>> monomial_basis(const RmSpec& spec) {
    spec.validate();
    std::vector<std::vector<Fp>> basis;
    std::vector<Fp> cur(static_cast<std::size_t>(spec.m), 0);
    // Degree-major order, lexicographic (x1 most significant) within a degree.
    for (long long deg = 0; deg <= spec.r; ++deg) {
        auto rec = [&](auto&& self, int pos, long long remaining) -> void {
            if (pos == spec.m) {
                if (remaining == 0) basis.push_back(cur);
                return;
            }
            const long long limit = std::min<long long>(spec.p - 1, remaining);
            for (long long e = 0; e <= limit; ++e) {
                cur[static_cast<std::size_t>(pos)] = static_cast<Fp>(e);
                self(self, pos + 1, remaining - e);
            }
            cur[static_cast<std::size_t>(pos)] = 0;
        };
        rec(rec, 0, deg);
    }
    return basis;
}

FpMatrix rm_generator(const RmSpec& spec) {
    spec.validate();
    const int p = spec.p;
    const std::uint64_t n_points =
        pow_u64(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(spec.m));
    const auto basis = monomial_basis(spec);

    // pow_tab[b][e] = b^e mod p, with 0^0 = 1
    std::vector<std::vector<Fp>> pow_tab(static_cast<std::size_t>(p),
                                         std::vector<Fp>(static_cast<std::size_t>(p), 1));
    for (int b = 0; b < p; ++b)
        for (int e = 1; e < p; ++e)
            pow_tab[static_cast<std::size_t>(b)][static_cast<std::size_t>(e)] = static_cast<Fp>(
                (pow_tab[static_cast<std::size_t>(b)][static_cast<std::size_t>(e - 1)] * b) % p);

    FpMatrix g(static_cast<Fp>(p), basis.size(), static_cast<std::size_t>(n_points));
    std::vector<Fp> point(static_cast<std::size_t>(spec.m), 0);
    for (std::uint64_t col = 0; col < n_points; ++col) {
        for (std::size_t row = 0; row < basis.size(); ++row) {
            std::uint32_t val = 1;
            for (int i = 0; i < spec.m; ++i) {
                const Fp e = basis[row][static_cast<std::size_t>(i)];
                if (e != 0) val = (val * pow_tab[point[static_cast<std::size_t>(i)]][e]) % static_cast<std::uint32_t>(p);
            }
            g.rows[row][static_cast<std::size_t>(col)] = static_cast<Fp>(val);
        }
        // advance base-p odometer (x1 least significant, matching column order)
        for (int i = 0; i < spec.m; ++i) {
            if (++point[static_cast<std::size_t>(i)] < p) break;
            point[static_cast<std::size_t>(i)] = 0;
        }
    }
    return g;
}

long long dual_degree(const RmSpec& spec) {
    spec.validate();
    if (spec.r == spec.max_degree())
        throw DomainError("dual_degree: full-degree code has no evaluation-code dual degree");
    return spec.max_degree() - spec.r - 1;
}

BigCount rm_distance(const RmSpec& spec) {
    spec.validate();
    const long long q = spec.r / (spec.p - 1);
    const long long rem = spec.r % (spec.p - 1);
    BigCount d = big_pow(static_cast<std::uint64_t>(spec.p), static_cast<std::uint64_t>(spec.m - q));
    d -= big_pow(static_cast<std::uint64_t>(spec.p), static_cast<std::uint64_t>(spec.m - q - 1)) * rem;
    return d;
}

PunctureSet manhattan_set(int p, int m, long long w) {
    if (w < 0) throw DomainError("manhattan_set: w must be >= 0");
    PunctureSet s;
    s.p = p;
    s.m = m;
    const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(m));
    std::vector<Fp> point(static_cast<std::size_t>(m), 0);
    long long wt = 0;
    for (std::uint64_t col = 0; col < total; ++col) {
        if (wt <= w) s.columns.push_back(col + 1);
        for (int i = 0; i < m; ++i) {
            auto& x = point[static_cast<std::size_t>(i)];
            if (++x < p) {
                ++wt;
                break;
            }
            wt -= (p - 1);
            x = 0;
        }
    }
    return s;
}

namespace {

std::vector<std::size_t> zero_based_sorted(const PunctureSet& s) {
    std::vector<std::size_t> idx;
    idx.reserve(s.columns.size());
    for (std::uint64_t c : s.columns) idx.push_back(static_cast<std::size_t>(c - 1));
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::vector<Fp> drop_columns(const std::vector<Fp>& row, const std::vector<std::size_t>& sorted_idx) {
    std::vector<Fp> out;
    out.reserve(row.size() - sorted_idx.size());
    std::size_t next = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (next < sorted_idx.size() && sorted_idx[next] == j) {
            ++next;
            continue;
        }
        out.push_back(row[j]);
    }
    return out;
}

}  // namespace

FpMatrix puncture(const FpMatrix& m, const PunctureSet& s) {
    s.validate();
    for (std::uint64_t c : s.columns)
        if (c > m.cols) throw DomainError("puncture: column index beyond matrix width");
    const auto idx = zero_based_sorted(s);
    FpMatrix out(m.p, 0, m.cols - idx.size());
    out.cols = m.cols - idx.size();
    for (const auto& row : m.rows) out.rows.push_back(drop_columns(row, idx));
    return out;
}

SplitResult split_on_columns(const FpMatrix& m, const PunctureSet& s) {
    s.validate();
    for (std::uint64_t c : s.columns)
        if (c > m.cols) throw DomainError("shorten: column index beyond matrix width");
    const Fp p = m.p;
    std::vector<std::vector<Fp>> a = m.rows;
    std::vector<bool> is_pivot_row(a.size(), false);
    std::vector<std::size_t> pivot_order;

    // Eliminate on the removed columns so every non-pivot row vanishes there.
    for (std::uint64_t c1 : s.columns) {
        const std::size_t col = static_cast<std::size_t>(c1 - 1);
        std::size_t sel = a.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!is_pivot_row[i] && a[i][col] != 0) {
                sel = i;
                break;
            }
        }
        if (sel == a.size()) continue;  // column already zero on the remaining rows
        const Fp inv = inv_mod(a[sel][col], p);
        for (auto& x : a[sel]) x = static_cast<Fp>((static_cast<std::uint32_t>(x) * inv) % p);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == sel || a[i][col] == 0) continue;
            add_scaled(a[i], a[sel], static_cast<Fp>(p - a[i][col]), p);
        }
        is_pivot_row[sel] = true;
        pivot_order.push_back(sel);
    }

    const auto idx = zero_based_sorted(s);
    SplitResult res;
    res.s_rank = pivot_order.size();
    res.pivot_rows = FpMatrix(p, 0, m.cols - idx.size());
    res.pivot_rows.cols = m.cols - idx.size();
    res.zero_rows = FpMatrix(p, 0, m.cols - idx.size());
    res.zero_rows.cols = m.cols - idx.size();
    for (std::size_t i : pivot_order) res.pivot_rows.rows.push_back(drop_columns(a[i], idx));
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_pivot_row[i]) res.zero_rows.rows.push_back(drop_columns(a[i], idx));
    return res;
}

FpMatrix shorten(const FpMatrix& m, const PunctureSet& s) {
    return split_on_columns(m, s).zero_rows;
}

FpVector extremal_witness(int p, int m, long long r, long long w) {
    if (delta_distance(m, r, w, p) == 0)
        throw DomainError("extremal_witness: count is zero, no witness exists");
    const long long alpha = r / (p - 1);
    const long long beta = r % (p - 1);
    const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(m));

    // Product of (1 - x_i^{p-1}) over the first alpha variables, times a
    // degree-beta factor in x_{alpha+1} whose roots are {p-beta, ..., p-1}.
    FpVector ev(static_cast<Fp>(p), static_cast<std::size_t>(total));
    std::vector<Fp> point(static_cast<std::size_t>(m), 0);
    for (std::uint64_t col = 0; col < total; ++col) {
        std::uint32_t val = 1;
        for (long long i = 0; i < alpha && val != 0; ++i)
            if (point[static_cast<std::size_t>(i)] != 0) val = 0;
        if (val != 0 && beta > 0) {
            const Fp x = point[static_cast<std::size_t>(alpha)];
            for (long long j = 0; j < beta && val != 0; ++j) {
                const long long factor = ((p - 1 - j - x) % p + p) % p;
                val = (val * static_cast<std::uint32_t>(factor)) % static_cast<std::uint32_t>(p);
            }
        }
        ev.v[static_cast<std::size_t>(col)] = static_cast<Fp>(val);
        for (int i = 0; i < m; ++i) {
            if (++point[static_cast<std::size_t>(i)] < p) break;
            point[static_cast<std::size_t>(i)] = 0;
        }
    }
    return ev;
}

CodeReport one_two_puncture_params(int p, int m, int punctures) {
    if (punctures < 1 || punctures > 2)
        throw DomainError("one_two_puncture_params: puncture count must be 1 or 2");
    RmSpec spec{p, m, triortho_max_degree(p, m)};
    spec.validate();
    RmSpec dual{p, m, dual_degree(spec)};
    const BigCount d_rm = rm_distance(dual);
    if (d_rm < 2)
        throw DomainError("one_two_puncture_params: dual code distance below 2");

    CodeReport rep;
    rep.p = p;
    rep.n = big_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(m)) - punctures;
    rep.k = punctures;
    rep.d = d_rm - punctures;
    rep.d_certainty = Certainty::exact;
    if (*rep.d >= 2) rep.gamma = yield_gamma(rep.n, rep.k, *rep.d);
    rep.construction.method = "small-puncture-closed-form";
    rep.construction.p = p;
    rep.construction.m = m;
    rep.construction.r = spec.r;
    rep.construction.distance_route = "closed-form";
    for (int i = 1; i <= punctures; ++i) rep.construction.columns.push_back(static_cast<std::uint64_t>(i));
    return rep;
}

}  // namespace prm
