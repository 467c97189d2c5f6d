#include "pnomial.hpp"

#include <map>
#include <string>

#include "fp.hpp"

namespace prm {

WeightFunction WeightFunction::hamming(int p) {
    WeightFunction w;
    w.kind = WeightKind::hamming;
    w.table.assign(static_cast<std::size_t>(p), 1);
    w.table[0] = 0;
    return w;
}

WeightFunction WeightFunction::lee(int p) {
    WeightFunction w;
    w.kind = WeightKind::lee;
    w.table.resize(static_cast<std::size_t>(p));
    for (int a = 0; a < p; ++a) w.table[static_cast<std::size_t>(a)] = std::min(a, p - a);
    return w;
}

WeightFunction WeightFunction::manhattan(int p) {
    WeightFunction w;
    w.kind = WeightKind::manhattan;
    w.table.resize(static_cast<std::size_t>(p));
    for (int a = 0; a < p; ++a) w.table[static_cast<std::size_t>(a)] = a;
    return w;
}

namespace {

// Rows of coordinate-sum counts and their prefix sums for one modulus.
// Rows up to kCacheRows are kept; larger rows are rolled up on demand.
class Rows {
  public:
    explicit Rows(int p) : p_(p) {
        rows_.push_back({BigCount(1)});
        prefix_.push_back({BigCount(1)});
    }

    static constexpr long long kCacheRows = 160;

    const std::vector<BigCount>& row(long long m) {
        if (m <= kCacheRows) {
            while (static_cast<long long>(rows_.size()) <= m) grow();
            return rows_[static_cast<std::size_t>(m)];
        }
        if (m != tall_m_) {
            tall_m_ = m;
            tall_row_ = roll_to(m);
            tall_prefix_ = make_prefix(tall_row_);
        }
        return tall_row_;
    }

    const std::vector<BigCount>& prefix(long long m) {
        row(m);
        if (m <= kCacheRows) return prefix_[static_cast<std::size_t>(m)];
        return tall_prefix_;
    }

  private:
    static std::vector<BigCount> make_prefix(const std::vector<BigCount>& r) {
        std::vector<BigCount> pre(r.size());
        BigCount acc = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            acc += r[i];
            pre[i] = acc;
        }
        return pre;
    }

    std::vector<BigCount> next_row(const std::vector<BigCount>& cur) const {
        // Sliding-window form of the generalized Pascal rule:
        // next[s] = next[s-1] + cur[s] - cur[s-p].
        const std::size_t len = cur.size() + static_cast<std::size_t>(p_ - 1);
        std::vector<BigCount> next(len);
        BigCount window = 0;
        for (std::size_t s = 0; s < len; ++s) {
            if (s < cur.size()) window += cur[s];
            if (s >= static_cast<std::size_t>(p_) && s - static_cast<std::size_t>(p_) < cur.size())
                window -= cur[s - static_cast<std::size_t>(p_)];
            next[s] = window;
        }
        return next;
    }

    void grow() {
        rows_.push_back(next_row(rows_.back()));
        prefix_.push_back(make_prefix(rows_.back()));
    }

    std::vector<BigCount> roll_to(long long m) const {
        std::vector<BigCount> cur = rows_[static_cast<std::size_t>(std::min<long long>(m, kCacheRows))];
        for (long long i = std::min<long long>(m, kCacheRows); i < m; ++i) cur = next_row(cur);
        return cur;
    }

    int p_;
    std::vector<std::vector<BigCount>> rows_;
    std::vector<std::vector<BigCount>> prefix_;
    long long tall_m_ = -1;
    std::vector<BigCount> tall_row_;
    std::vector<BigCount> tall_prefix_;
};

Rows& rows_for(int p) {
    require_prime(static_cast<std::uint32_t>(p));
    thread_local std::map<int, Rows> cache;
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, Rows(p)).first;
    return it->second;
}

}  // namespace

BigCount pnomial(long long m, long long s, int p) {
    if (m < 0) throw DomainError("pnomial: m must be >= 0");
    if (s < 0 || s > m * (p - 1)) return 0;
    return rows_for(p).row(m)[static_cast<std::size_t>(s)];
}

BigCount pnomial_le(long long m, long long s, int p) {
    if (m < 0) throw DomainError("pnomial: m must be >= 0");
    if (s < 0) return 0;
    const long long top = m * (p - 1);
    if (s >= top) return big_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(m));
    return rows_for(p).prefix(m)[static_cast<std::size_t>(s)];
}

BigCount pnomial_gt(long long m, long long s, int p) {
    return big_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(m)) - pnomial_le(m, s, p);
}

std::vector<BigCount> pnomial_row_by_expansion(long long m, int p) {
    std::vector<BigCount> acc{BigCount(1)};
    const std::vector<BigCount> base(static_cast<std::size_t>(p), BigCount(1));
    for (long long i = 0; i < m; ++i) {
        std::vector<BigCount> next(acc.size() + base.size() - 1, BigCount(0));
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::size_t b = 0; b < base.size(); ++b) next[a + b] += acc[a] * base[b];
        acc = std::move(next);
    }
    return acc;
}

BigCount weight_count(long long m, long long k, const WeightFunction& w, int p) {
    if (m < 0) throw DomainError("weight_count: m must be >= 0");
    if (static_cast<int>(w.table.size()) != p) throw DomainError("weight table size != p");
    if (w.table[0] != 0) throw DomainError("weight table must satisfy W(0) = 0");
    if (k < 0) return 0;
    if (w.kind == WeightKind::manhattan) return pnomial(m, k, p);

    long long max_w = 0;
    for (long long t : w.table) max_w = std::max(max_w, t);
    if (k > m * max_w) return 0;

    std::vector<BigCount> base(static_cast<std::size_t>(max_w) + 1, BigCount(0));
    for (long long t : w.table) base[static_cast<std::size_t>(t)] += 1;

    std::vector<BigCount> acc{BigCount(1)};
    for (long long i = 0; i < m; ++i) {
        std::vector<BigCount> next(std::min<std::size_t>(acc.size() + base.size() - 1,
                                                         static_cast<std::size_t>(k) + 1),
                                   BigCount(0));
        for (std::size_t a = 0; a < acc.size(); ++a) {
            if (acc[a] == 0) continue;
            for (std::size_t b = 0; b < base.size() && a + b < next.size(); ++b)
                next[a + b] += acc[a] * base[b];
        }
        acc = std::move(next);
    }
    if (static_cast<std::size_t>(k) >= acc.size()) return 0;
    return acc[static_cast<std::size_t>(k)];
}

BigCount delta_distance(long long m, long long r, long long w, int p) {
    if (m < 0) throw DomainError("delta_distance: m must be >= 0");
    if (r < 0 || r > m * (p - 1))
        throw DomainError("delta_distance: degree out of range 0..m(p-1)");
    const long long alpha = r / (p - 1);
    const long long beta = r % (p - 1);
    if (alpha >= m) {
        // r = m(p-1): the remaining product over zero variables leaves a single
        // point, which lies outside the ball only for negative radius.
        return (w < 0) ? 1 : 0;
    }
    BigCount total = 0;
    for (long long j = 0; j <= p - beta - 1; ++j) total += pnomial_gt(m - alpha - 1, w - j, p);
    return total;
}

bool delta_sum_bound_holds(long long m, long long r, long long w, int a, int p) {
    if (a < 0 || a > p - 1) throw DomainError("delta_sum_bound_holds: A out of range");
    if (r - a < 0) throw DomainError("delta_sum_bound_holds: r - A negative");
    BigCount lhs = 0, rhs = 0;
    for (long long i = 0; i <= p - 1 - a; ++i) lhs += delta_distance(m, r - a, w - i, p);
    for (long long i = 0; i <= p - 1; ++i) rhs += delta_distance(m, r, w - i, p);
    if (a == 0) return lhs == rhs;
    return lhs >= rhs;
}

}  // namespace prm
