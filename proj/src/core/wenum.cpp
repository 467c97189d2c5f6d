#include "wenum.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "errors.hpp"

namespace prm {

using nlohmann::json;

BigCount WeightEnumerator::total() const {
    BigCount t = 0;
    for (const auto& c : coeff) t += c;
    return t;
}

long long WeightEnumerator::min_positive_weight() const {
    for (std::size_t w = 1; w < coeff.size(); ++w)
        if (coeff[w] != 0) return static_cast<long long>(w);
    return -1;
}

json to_json(const WeightEnumerator& w) {
    json arr = json::array();
    for (const auto& c : w.coeff) arr.push_back(big_str(c));
    return json{{"length", w.length}, {"coefficients", arr}};
}

WeightEnumerator enumerator_from_json(const json& j) {
    WeightEnumerator w;
    w.length = j.at("length").get<std::size_t>();
    for (const auto& s : j.at("coefficients")) w.coeff.push_back(big_parse(s.get<std::string>()));
    return w;
}

namespace {

struct SparseRow {
    std::vector<std::pair<std::uint32_t, Fp>> entries;
};

// Coefficient vector reached after `t` single-row steps of the base-p walk:
// digit j equals (floor(t/p^j) - floor(t/p^{j+1})) mod p.
std::vector<Fp> walk_state(std::uint64_t t, int p, std::size_t dim) {
    std::vector<Fp> c(dim);
    std::uint64_t q = t;
    for (std::size_t j = 0; j < dim; ++j) {
        const std::uint64_t next = q / static_cast<std::uint64_t>(p);
        c[j] = static_cast<Fp>((q - next) % static_cast<std::uint64_t>(p));
        q = next;
    }
    return c;
}

void tally_range(const std::vector<SparseRow>& rows, int p, std::size_t n, std::uint64_t begin,
                 std::uint64_t end, std::vector<std::uint64_t>& tally) {
    const std::size_t dim = rows.size();
    std::vector<Fp> word(n, 0);
    std::size_t weight = 0;

    const std::vector<Fp> coeffs = walk_state(begin, p, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        if (coeffs[j] == 0) continue;
        for (const auto& [pos, val] : rows[j].entries) {
            Fp& cell = word[pos];
            const Fp before = cell;
            cell = static_cast<Fp>((cell + static_cast<std::uint32_t>(val) * coeffs[j]) % p);
            weight += (cell != 0) - (before != 0);
        }
    }
    ++tally[weight];

    for (std::uint64_t t = begin + 1; t < end; ++t) {
        std::uint64_t q = t;
        std::size_t j = 0;
        while (q % static_cast<std::uint64_t>(p) == 0) {
            q /= static_cast<std::uint64_t>(p);
            ++j;
        }
        for (const auto& [pos, val] : rows[j].entries) {
            Fp& cell = word[pos];
            const Fp before = cell;
            Fp after = static_cast<Fp>(cell + val);
            if (after >= p) after = static_cast<Fp>(after - p);
            cell = after;
            weight += (after != 0) - (before != 0);
        }
        ++tally[weight];
    }
}

}  // namespace

WeightEnumerator enumerate_rowspace(const FpMatrix& basis, int threads) {
    const int p = basis.p;
    const std::size_t dim = basis.n_rows();
    const std::size_t n = basis.cols;
    if (dim > 62 / std::max(1.0, std::log2(static_cast<double>(p))))
        throw BudgetError("enumerate_rowspace: word count exceeds 2^62");

    // Rows with the smallest support go on the fastest-changing digits.
    std::vector<SparseRow> rows(dim);
    std::vector<std::size_t> order(dim);
    for (std::size_t i = 0; i < dim; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        std::size_t wa = 0, wb = 0;
        for (Fp x : basis.rows[a]) wa += (x != 0);
        for (Fp x : basis.rows[b]) wb += (x != 0);
        return wa < wb;
    });
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t pos = 0; pos < n; ++pos) {
            const Fp v = basis.rows[order[j]][pos];
            if (v != 0) rows[j].entries.emplace_back(static_cast<std::uint32_t>(pos), v);
        }
    }

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= static_cast<std::uint64_t>(p);

    const int t_count = std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::uint64_t>(total, 64))));
    std::vector<std::vector<std::uint64_t>> tallies(
        static_cast<std::size_t>(t_count), std::vector<std::uint64_t>(n + 1, 0));

    if (t_count == 1) {
        tally_range(rows, p, n, 0, total, tallies[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = total / static_cast<std::uint64_t>(t_count);
        for (int i = 0; i < t_count; ++i) {
            const std::uint64_t begin = chunk * static_cast<std::uint64_t>(i);
            const std::uint64_t end = (i == t_count - 1) ? total : begin + chunk;
            pool.emplace_back(tally_range, std::cref(rows), p, n, begin, end,
                              std::ref(tallies[static_cast<std::size_t>(i)]));
        }
        for (auto& th : pool) th.join();
    }

    WeightEnumerator w;
    w.length = n;
    w.coeff.assign(n + 1, BigCount(0));
    for (const auto& t : tallies)
        for (std::size_t i = 0; i <= n; ++i) w.coeff[i] += t[i];
    return w;
}

namespace {

// One radix-3 butterfly layer over a stride, on values a + b*w with w a
// primitive cube root of unity (w^2 = -1 - w):
//   out0 = A + B + C
//   out1 = A + wB + w^2 C
//   out2 = A + w^2 B + wC
void charsum3_pass(std::int32_t* re, std::int32_t* im, std::uint64_t total, std::uint64_t stride,
                   std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t block = 3 * stride;
    for (std::uint64_t base = lo; base < hi; base += block) {
        for (std::uint64_t off = 0; off < stride; ++off) {
            const std::uint64_t i0 = base + off, i1 = i0 + stride, i2 = i1 + stride;
            const std::int32_t a0 = re[i0], a1 = im[i0];
            const std::int32_t b0 = re[i1], b1 = im[i1];
            const std::int32_t c0 = re[i2], c1 = im[i2];
            re[i0] = a0 + b0 + c0;
            im[i0] = a1 + b1 + c1;
            // wB = -b1 + (b0-b1)w ; w^2 C = (c1-c0) - c0 w
            re[i1] = a0 - b1 + c1 - c0;
            im[i1] = a1 + b0 - b1 - c0;
            // w^2 B = (b1-b0) - b0 w ; wC = -c1 + (c0-c1)w
            re[i2] = a0 + b1 - b0 - c1;
            im[i2] = a1 - b0 + c0 - c1;
        }
    }
    (void)total;
}

}  // namespace

WeightEnumerator enumerate_rowspace_charsum3(const FpMatrix& basis, int threads) {
    if (basis.p != 3) throw DomainError("enumerate_rowspace_charsum3: p must be 3");
    const std::size_t dim = basis.n_rows();
    const std::size_t n = basis.cols;
    if (dim > 18) throw BudgetError("enumerate_rowspace_charsum3: dimension too large");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= 3;

    // Column multiplicities over F_3^dim, then F(x) = sum_v g(v) w^{x.v} by a
    // radix-3 transform; the words orthogonal to x count
    // n0(x) = (n + 2 Re - Im)/3 and the codeword x.B has weight n - n0(x).
    std::vector<std::int32_t> re(total, 0), im(total, 0);
    for (std::size_t c = 0; c < n; ++c) {
        std::uint64_t v = 0;
        for (std::size_t j = dim; j-- > 0;) v = v * 3 + basis.rows[j][c];
        ++re[v];
    }

    const int t_count = std::max(1, std::min(threads, 8));
    std::uint64_t stride = 1;
    for (std::size_t pass = 0; pass < dim; ++pass) {
        const std::uint64_t block = 3 * stride;
        const std::uint64_t blocks = total / block;
        if (t_count == 1 || blocks < 2) {
            charsum3_pass(re.data(), im.data(), total, stride, 0, total);
        } else {
            std::vector<std::thread> pool;
            const std::uint64_t per = (blocks / static_cast<std::uint64_t>(t_count)) * block;
            std::uint64_t lo = 0;
            for (int t = 0; t < t_count; ++t) {
                const std::uint64_t hi = (t == t_count - 1) ? total : lo + per;
                pool.emplace_back(charsum3_pass, re.data(), im.data(), total, stride, lo, hi);
                lo = hi;
            }
            for (auto& th : pool) th.join();
        }
        stride = block;
    }

    std::vector<std::uint64_t> tally(n + 1, 0);
    for (std::uint64_t x = 0; x < total; ++x) {
        const std::int32_t n0_times3 = static_cast<std::int32_t>(n) + 2 * re[x] - im[x];
        const std::size_t w = n - static_cast<std::size_t>(n0_times3 / 3);
        ++tally[w];
    }

    WeightEnumerator w;
    w.length = n;
    w.coeff.assign(n + 1, BigCount(0));
    for (std::size_t i = 0; i <= n; ++i) w.coeff[i] = tally[i];
    return w;
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& dual_enum, int p,
                                       std::size_t dual_dim) {
    const std::size_t n = dual_enum.length;

    std::vector<std::vector<BigCount>> binom(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i].assign(i + 1, BigCount(1));
        for (std::size_t j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
    }
    std::vector<BigCount> pm1_pow(n + 1);
    pm1_pow[0] = 1;
    for (std::size_t t = 1; t <= n; ++t) pm1_pow[t] = pm1_pow[t - 1] * (p - 1);

    std::vector<BigCount> out(n + 1, BigCount(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (dual_enum.coeff[i] == 0) continue;
        // coefficient of y^j in (x + (p-1)y)^{n-i} (x - y)^i
        for (std::size_t s = 0; s <= i; ++s) {
            const BigCount gs = (s % 2 == 0) ? binom[i][s] : -binom[i][s];
            for (std::size_t t = 0; t <= n - i; ++t) {
                out[s + t] += dual_enum.coeff[i] * gs * binom[n - i][t] * pm1_pow[t];
            }
        }
    }

    const BigCount denom = big_pow(static_cast<std::uint64_t>(p), dual_dim);
    WeightEnumerator w;
    w.length = n;
    w.coeff.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        BigCount q, r;
        boost::multiprecision::divide_qr(out[j], denom, q, r);
        if (r != 0) throw DomainError("macwilliams_transform: non-integral coefficient");
        if (q < 0) throw DomainError("macwilliams_transform: negative coefficient");
        w.coeff[j] = q;
    }
    return w;
}

WeightEnumerator weight_enumerator_exact(const FpMatrix& generator, const EnumOptions& opts) {
    const RrefResult red = rref(generator);
    const std::size_t dim = red.mat.n_rows();
    const std::size_t n = generator.cols;
    const int p = generator.p;

    auto enumerate = [&](const FpMatrix& b) {
        if (b.p == 3 && b.n_rows() >= 12) return enumerate_rowspace_charsum3(b, opts.threads);
        return enumerate_rowspace(b, opts.threads);
    };

    if (big_pow(static_cast<std::uint64_t>(p), dim) <= opts.budget) return enumerate(red.mat);

    const std::size_t dual_dim = n - dim;
    if (big_pow(static_cast<std::uint64_t>(p), dual_dim) <= opts.budget) {
        const FpMatrix dual = nullspace_basis(red.mat);
        const WeightEnumerator dw = enumerate(dual);
        return macwilliams_transform(dw, p, dual_dim);
    }
    throw BudgetError("weight_enumerator_exact: both the code and its dual exceed the budget");
}

std::uint64_t bounded_u64(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

LowWeightWord min_weight_upper_bound(const FpMatrix& generator, long long target_weight,
                                     std::uint64_t seed, int iterations) {
    const RrefResult red = rref(generator);
    const std::size_t k = red.mat.n_rows();
    const std::size_t n = generator.cols;
    const int p = generator.p;

    LowWeightWord best;
    if (k == 0) return best;

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(n);
    std::vector<std::vector<Fp>> a;
    using Entry = std::pair<std::uint32_t, Fp>;
    std::vector<std::vector<Entry>> sparse(k);

    auto record = [&](const std::vector<Entry>& entries) {
        std::size_t w = 0;
        for (const auto& [pos, val] : entries) w += (val != 0);
        if (w == 0) return;
        if (best.weight < 0 || static_cast<long long>(w) < best.weight) {
            best.weight = static_cast<long long>(w);
            best.word = FpVector(static_cast<Fp>(p), n);
            for (const auto& [pos, val] : entries)
                if (val != 0) best.word.v[perm[pos]] = val;
        }
    };

    for (int it = 0; it < iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        for (std::size_t i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[bounded_u64(rng, static_cast<std::uint64_t>(i + 1))]);

        a.assign(k, std::vector<Fp>(n));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = 0; c < n; ++c) a[i][c] = red.mat.rows[i][perm[c]];

        // reduced echelon form on the permuted columns
        std::size_t row = 0;
        for (std::size_t col = 0; col < n && row < k; ++col) {
            std::size_t sel = row;
            while (sel < k && a[sel][col] == 0) ++sel;
            if (sel == k) continue;
            std::swap(a[row], a[sel]);
            const Fp inv = inv_mod(a[row][col], static_cast<Fp>(p));
            for (auto& x : a[row]) x = static_cast<Fp>((static_cast<std::uint32_t>(x) * inv) % p);
            for (std::size_t i = 0; i < k; ++i) {
                if (i == row || a[i][col] == 0) continue;
                add_scaled(a[i], a[row], static_cast<Fp>(p - a[i][col]), static_cast<Fp>(p));
            }
            ++row;
        }

        for (std::size_t i = 0; i < k; ++i) {
            sparse[i].clear();
            for (std::size_t c = 0; c < n; ++c)
                if (a[i][c] != 0) sparse[i].emplace_back(static_cast<std::uint32_t>(c), a[i][c]);
            record(sparse[i]);
        }

        // Row pairs. The candidate row_i + lam*row_j is supported on the union
        // of the two supports; within the intersection exactly one lam kills
        // each position, so all p-1 weights come from one merge pass.
        std::vector<std::size_t> kill(static_cast<std::size_t>(p), 0);
        std::vector<Entry> merged;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                const auto& si = sparse[i];
                const auto& sj = sparse[j];
                std::fill(kill.begin(), kill.end(), 0);
                std::size_t shared = 0;
                std::size_t ii = 0, jj = 0;
                while (ii < si.size() && jj < sj.size()) {
                    if (si[ii].first < sj[jj].first) {
                        ++ii;
                    } else if (si[ii].first > sj[jj].first) {
                        ++jj;
                    } else {
                        ++shared;
                        const Fp lam_kill = static_cast<Fp>(
                            (static_cast<std::uint32_t>(p - si[ii].second) *
                             inv_mod(sj[jj].second, static_cast<Fp>(p))) %
                            p);
                        ++kill[lam_kill];
                        ++ii;
                        ++jj;
                    }
                }
                const std::size_t base = si.size() + sj.size() - shared;
                for (Fp lam = 1; lam < p; ++lam) {
                    const std::size_t w = base - kill[lam];
                    if (best.weight >= 0 && static_cast<long long>(w) >= best.weight) continue;
                    merged.clear();
                    std::size_t x = 0, y = 0;
                    while (x < si.size() || y < sj.size()) {
                        if (y == sj.size() || (x < si.size() && si[x].first < sj[y].first)) {
                            merged.emplace_back(si[x].first, si[x].second);
                            ++x;
                        } else if (x == si.size() || sj[y].first < si[x].first) {
                            merged.emplace_back(
                                sj[y].first,
                                static_cast<Fp>((static_cast<std::uint32_t>(lam) * sj[y].second) % p));
                            ++y;
                        } else {
                            merged.emplace_back(
                                si[x].first,
                                static_cast<Fp>((si[x].second +
                                                 static_cast<std::uint32_t>(lam) * sj[y].second) %
                                                p));
                            ++x;
                            ++y;
                        }
                    }
                    record(merged);
                }
            }
        }

        if (target_weight > 0 && best.weight > 0 && best.weight <= target_weight) break;
    }
    return best;
}

}  // namespace prm
