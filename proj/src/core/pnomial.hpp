#ifndef PRM_CORE_PNOMIAL_HPP
#define PRM_CORE_PNOMIAL_HPP

#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace prm {

// Per-symbol weight function W : F_p -> Z>=0 with W(0) = 0.
enum class WeightKind { hamming, lee, manhattan };

struct WeightFunction {
    WeightKind kind{WeightKind::manhattan};
    std::vector<long long> table;  // size p

    static WeightFunction hamming(int p);
    static WeightFunction lee(int p);
    static WeightFunction manhattan(int p);
};

// Coefficient of x^s in (1 + x + ... + x^{p-1})^m: the number of vectors in
// F_p^m whose coordinates, read as integers, sum to s. Zero outside
// 0 <= s <= m(p-1); that convention lets the recurrences index off-range
// without special cases.
BigCount pnomial(long long m, long long s, int p);

// Partial row sums: sum_{i<=s} and sum_{i>s}. Together they always add to p^m.
BigCount pnomial_le(long long m, long long s, int p);
BigCount pnomial_gt(long long m, long long s, int p);

// Number of vectors in F_p^m of W-weight exactly k, via the generating
// function (sum_j x^{W(j)})^m.
BigCount weight_count(long long m, long long k, const WeightFunction& w, int p);

// Minimum support, outside the coordinate-sum ball of radius w, of a nonzero
// m-variable polynomial of total degree <= r over F_p (exact count).
// A result of 0 means the formula's positivity hypothesis fails and the value
// does not determine a code distance.
BigCount delta_distance(long long m, long long r, long long w, int p);

// Checks sum_{i=0}^{p-1-A} delta(m, r-A, w-i) >= sum_{i=0}^{p-1} delta(m, r, w-i),
// with equality required when A = 0.
bool delta_sum_bound_holds(long long m, long long r, long long w, int a, int p);

// Direct expansion of (1 + x + ... + x^{p-1})^m by repeated polynomial
// multiplication. Slower than the recurrence; kept as an independent route
// for cross-checks.
std::vector<BigCount> pnomial_row_by_expansion(long long m, int p);

}  // namespace prm

#endif
