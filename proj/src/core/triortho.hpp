#ifndef PRM_CORE_TRIORTHO_HPP
#define PRM_CORE_TRIORTHO_HPP

#include <cstdint>
#include <optional>

#include "reedmuller.hpp"
#include "report.hpp"
#include "wenum.hpp"

namespace prm {

// Punctured/shortened generator pair over one evaluation space.
// g_punctured stacks the rows carrying the removed coordinates (top) over the
// shortened generator g_shortened (bottom); the quantum code takes its X
// checks from g_shortened and its Z checks from the dual of g_punctured.
struct TriorthoPair {
    RmSpec spec;
    PunctureSet punctures;
    FpMatrix g_punctured;  // [pivot rows; shortened rows], removed columns dropped
    FpMatrix g_shortened;
    std::uint64_t n{0};
    std::uint64_t k{0};    // rank of the removed-column submatrix
    bool rank_deficient{false};
};

// True iff every pair and triple of rows (with repetition) has vanishing
// coordinate sum of the componentwise product. Checking generator rows
// suffices: both forms are multilinear.
bool check_triorthogonal(const FpMatrix& g);

TriorthoPair build_code(const RmSpec& spec, const PunctureSet& s);

struct AnalysisOptions {
    BigCount budget{100000000};
    std::uint64_t seed{1};
    int threads{1};
    int isd_iters{48};
    bool want_a_d{true};
};

struct DistanceResult {
    BigCount d{0};
    Certainty certainty{Certainty::exact};
    std::string route;  // "dual-enumeration" | "closed-form" | "info-set-search"
    std::optional<FpVector> witness;
};

// Minimum weight of the space dual to the shortened generator. Exact when
// enumerable within budget, else (for 0-2 punctures) by the location-free
// closed form, else the best upper bound the information-set search finds.
DistanceResult quantum_distance(const TriorthoPair& pair, const AnalysisOptions& opts);

// Enumerator of the dual of the shortened generator: the space supporting
// logical-Z representatives together with Z stabilizers.
WeightEnumerator z_support_enumerator(const TriorthoPair& pair, const EnumOptions& opts);

// Enumerator of the Z-stabilizer span (dual of the punctured generator).
WeightEnumerator z_stabilizer_enumerator(const TriorthoPair& pair, const EnumOptions& opts);

// Number of weight-d words supporting a logical Z: weight-d count of the
// Z-support space minus the weight-d count of the Z-stabilizer span.
BigCount logical_z_count(const TriorthoPair& pair, long long d, const AnalysisOptions& opts);

// Full report: parameters, distance (with certainty), gamma, and the
// logical-operator count when exactly computable within budget.
CodeReport analyze(const TriorthoPair& pair, const AnalysisOptions& opts);

}  // namespace prm

#endif
