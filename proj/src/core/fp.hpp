#ifndef PRM_CORE_FP_HPP
#define PRM_CORE_FP_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace prm {

// Field element storage. Moduli are small primes (p <= 23 in every instance
// we care about), but anything below 2^15 is supported.
using Fp = std::uint16_t;

bool is_prime(std::uint32_t n);
void require_prime(std::uint32_t p);

Fp inv_mod(Fp a, Fp p);

// Dense vector over F_p. The modulus is carried once at container level;
// entries are kept reduced into [0, p).
struct FpVector {
    Fp p{2};
    std::vector<Fp> v;

    FpVector() = default;
    FpVector(Fp modulus, std::size_t n);
    FpVector(Fp modulus, std::vector<Fp> vals);

    std::size_t size() const { return v.size(); }
    std::size_t hamming_weight() const;
};

// Dense row matrix over F_p. Rectangular; all rows share the modulus.
struct FpMatrix {
    Fp p{2};
    std::size_t cols{0};
    std::vector<std::vector<Fp>> rows;

    FpMatrix() = default;
    FpMatrix(Fp modulus, std::size_t n_rows, std::size_t n_cols);

    std::size_t n_rows() const { return rows.size(); }
    void append_row(std::vector<Fp> row);
};

FpVector star_product(const FpVector& a, const FpVector& b);
Fp coordinate_sum(const FpVector& a);
FpVector vector_add(const FpVector& a, const FpVector& b);
FpVector vector_scale(const FpVector& a, Fp c);

// dst += c * src (mod p), both length n.
void add_scaled(std::vector<Fp>& dst, const std::vector<Fp>& src, Fp c, Fp p);

struct RrefResult {
    FpMatrix mat;                      // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column per kept row, increasing
};

// Reduced row echelon form with deterministic leftmost-pivot selection, so
// reduced forms are reproducible across runs and platforms.
RrefResult rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

// Basis of { x : M x = 0 }; returned rows are linearly independent and each
// is orthogonal to every row of m. rank(result) == cols - rank(m).
FpMatrix nullspace_basis(const FpMatrix& m);

}  // namespace prm

#endif
