#ifndef PRM_CORE_DISTILL_HPP
#define PRM_CORE_DISTILL_HPP

#include <functional>
#include <optional>

#include "bigint.hpp"
#include "wenum.hpp"

namespace prm {

// Depolarizing input noise: each qudit independently mixes toward uniform
// with weight delta, i.e. picks up a nonzero Z power with probability
// (p-1) delta / p, all p-1 powers equally likely.
struct NoiseModel {
    int p{3};
    double delta{0.0};
};

struct DistillOutcome {
    double delta_out{0.0};
    double accept_prob{1.0};
    double cost{0.0};
};

// One round through a k=1 code, exactly: acceptance is the probability the
// error lands in the Z-support space, a benign pass is a landing in the
// Z-stabilizer span, and the output depolarizing parameter rescales the
// conditional logical-error probability.
DistillOutcome suppression_exact(const WeightEnumerator& z_support,
                                 const WeightEnumerator& z_stabilizer, const NoiseModel& noise);

// Leading-order estimate for k >= 1 from block parameters and the weight-d
// logical-operator count alone, plus the expected cost n / (expected outputs).
DistillOutcome suppression_estimate(int p, const BigCount& n, const BigCount& k,
                                    const BigCount& d, const BigCount& a_d, double delta_in);

// Fixed point of the suppression map on (lo, hi); nullopt when the map stays
// on one side of the diagonal over the whole bracket.
std::optional<double> threshold(const std::function<double(double)>& delta_out, double lo,
                                double hi, double tol = 1e-6);

struct OverheadRatio {
    BigCount numerator;    // n^z
    BigCount denominator;  // k^{z-1}, reduced
    double value;
};

// Input states needed for z concatenated rounds: n^z / k^{z-1}, exact.
OverheadRatio concatenated_overhead(const BigCount& n, const BigCount& k, int rounds);

}  // namespace prm

#endif
