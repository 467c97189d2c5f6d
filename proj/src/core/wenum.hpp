#ifndef PRM_CORE_WENUM_HPP
#define PRM_CORE_WENUM_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "fp.hpp"

namespace prm {

// Exact Hamming weight distribution A_0..A_n of a linear code.
struct WeightEnumerator {
    std::size_t length{0};
    std::vector<BigCount> coeff;  // size length + 1

    BigCount total() const;
    long long min_positive_weight() const;  // -1 when the code is {0}
};

nlohmann::json to_json(const WeightEnumerator& w);
WeightEnumerator enumerator_from_json(const nlohmann::json& j);

// Walks every word of the row space of `basis` (rows must be linearly
// independent) and tallies weights. Each step updates the running word by a
// single generator row, so the cost per word is the support of one row.
// Deterministic for any thread count.
WeightEnumerator enumerate_rowspace(const FpMatrix& basis, int threads);

// Same result as enumerate_rowspace for p = 3, via an exact character-sum
// transform over column multiplicities instead of a codeword walk; much
// faster for dimensions around 12..17 at the cost of 8 * 3^dim bytes.
WeightEnumerator enumerate_rowspace_charsum3(const FpMatrix& basis, int threads);

// Transform the weight distribution of the dual code into the distribution of
// the code itself: W_C(x,y) = |C_dual|^{-1} W_dual(x + (p-1)y, x - y).
WeightEnumerator macwilliams_transform(const WeightEnumerator& dual_enum, int p,
                                       std::size_t dual_dim);

struct EnumOptions {
    BigCount budget{100000000};  // max words to walk on either side
    int threads{1};
};

// Exact enumerator of the row space of `generator` (rows need not be
// independent). Enumerates whichever of the code and its dual fits the
// budget; throws BudgetError when neither does.
WeightEnumerator weight_enumerator_exact(const FpMatrix& generator, const EnumOptions& opts);

struct LowWeightWord {
    long long weight{-1};
    FpVector word;
};

// Portable bounded draw; std::uniform_int_distribution is not reproducible
// across standard libraries.
std::uint64_t bounded_u64(std::mt19937_64& rng, std::uint64_t n);

// Randomized information-set search for a low-weight word of the row space.
// Repeatedly row-reduces on a random column order, then scans rows and row
// pairs. Deterministic given the seed. target_weight 0 means run all
// iterations; otherwise stop as soon as a word at or below the target shows.
LowWeightWord min_weight_upper_bound(const FpMatrix& generator, long long target_weight,
                                     std::uint64_t seed, int iterations);

}  // namespace prm

#endif
