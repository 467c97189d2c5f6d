#ifndef PRM_CORE_REEDMULLER_HPP
#define PRM_CORE_REEDMULLER_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "fp.hpp"
#include "pnomial.hpp"
#include "report.hpp"

namespace prm {

// Evaluation code of m-variable polynomials of total degree <= r over F_p.
struct RmSpec {
    int p{3};
    int m{1};
    long long r{0};

    void validate() const;
    long long max_degree() const { return static_cast<long long>(m) * (p - 1); }
};

// Largest r with 3r < m(p-1); the maximal degree whose evaluation space is
// closed under coordinate-sum orthogonality of pairs and triples.
long long triortho_max_degree(int p, int m);

// Ordered set of points of F_p^m to remove, carried as 1-based column
// numbers c with c-1 = x1 + x2 p + x3 p^2 + ...
struct PunctureSet {
    int p{3};
    int m{1};
    std::vector<std::uint64_t> columns;

    void validate() const;
    std::size_t size() const { return columns.size(); }
};

nlohmann::json to_json(const PunctureSet& s);
PunctureSet puncture_set_from_json(const nlohmann::json& j);

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp);  // throws on overflow past 2^62

std::vector<Fp> point_of_column(std::uint64_t c, int p, int m);
std::uint64_t column_of_point(const std::vector<Fp>& x, int p);

// Exponent vectors a in {0..p-1}^m with sum <= r, graded (degree-major) and
// lexicographic within a degree. One basis monomial per generator row.
std::vector<std::vector<Fp>> monomial_basis(const RmSpec& spec);

// One row per basis monomial, one column per point of F_p^m in base-p column
// order. Full row rank by construction.
FpMatrix rm_generator(const RmSpec& spec);

// Degree of the dual evaluation code: m(p-1) - r - 1.
long long dual_degree(const RmSpec& spec);

// Minimum weight of the evaluation code (polynomial-zero-counting bound,
// which is tight for these codes).
BigCount rm_distance(const RmSpec& spec);

// All points with coordinate sum <= w, as a puncture set in column order.
PunctureSet manhattan_set(int p, int m, long long w);

FpMatrix puncture(const FpMatrix& m, const PunctureSet& s);

// Generator of the subcode vanishing on the punctured coordinates, with those
// coordinates removed. Optionally also returns the complementary pivot rows
// (the punctured rows that carry the removed coordinates).
FpMatrix shorten(const FpMatrix& m, const PunctureSet& s);

struct SplitResult {
    FpMatrix pivot_rows;   // rows with pivots on the removed columns, restricted off them
    FpMatrix zero_rows;    // rows vanishing on the removed columns, restricted off them
    std::size_t s_rank{};  // rank of the removed-column submatrix
};
SplitResult split_on_columns(const FpMatrix& m, const PunctureSet& s);

// Evaluation vector of the degree-r product polynomial whose support outside
// the radius-w coordinate-sum ball meets the delta_distance count exactly.
FpVector extremal_witness(int p, int m, long long r, long long w);

// Parameters of the code obtained by puncturing the maximal-degree space at
// 1 or 2 arbitrary points; location-independent closed form.
CodeReport one_two_puncture_params(int p, int m, int punctures);

}  // namespace prm

#endif
