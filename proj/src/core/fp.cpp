#include "fp.hpp"

#include <algorithm>
#include <string>

namespace prm {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

void require_prime(std::uint32_t p) {
    if (p >= (1u << 15))
        throw DomainError("modulus too large: " + std::to_string(p));
    if (!is_prime(p))
        throw DomainError("modulus is not prime: " + std::to_string(p));
}

Fp inv_mod(Fp a, Fp p) {
    if (a % p == 0) throw DomainError("inverse of zero");
    // extended Euclid
    long long t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<Fp>(t);
}

FpVector::FpVector(Fp modulus, std::size_t n) : p(modulus), v(n, 0) { require_prime(modulus); }

FpVector::FpVector(Fp modulus, std::vector<Fp> vals) : p(modulus), v(std::move(vals)) {
    require_prime(modulus);
    for (auto& x : v) x = static_cast<Fp>(x % p);
}

std::size_t FpVector::hamming_weight() const {
    std::size_t w = 0;
    for (Fp x : v) w += (x != 0);
    return w;
}

FpMatrix::FpMatrix(Fp modulus, std::size_t n_rows, std::size_t n_cols)
    : p(modulus), cols(n_cols), rows(n_rows, std::vector<Fp>(n_cols, 0)) {
    require_prime(modulus);
}

void FpMatrix::append_row(std::vector<Fp> row) {
    if (rows.empty() && cols == 0) cols = row.size();
    if (row.size() != cols) throw DimensionError("row length mismatch");
    for (auto& x : row) x = static_cast<Fp>(x % p);
    rows.push_back(std::move(row));
}

FpVector star_product(const FpVector& a, const FpVector& b) {
    if (a.p != b.p) throw DimensionError("modulus mismatch in star product");
    if (a.size() != b.size()) throw DimensionError("length mismatch in star product");
    FpVector r(a.p, a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r.v[i] = static_cast<Fp>((static_cast<std::uint32_t>(a.v[i]) * b.v[i]) % a.p);
    return r;
}

Fp coordinate_sum(const FpVector& a) {
    std::uint64_t s = 0;
    for (Fp x : a.v) s += x;
    return static_cast<Fp>(s % a.p);
}

FpVector vector_add(const FpVector& a, const FpVector& b) {
    if (a.p != b.p || a.size() != b.size()) throw DimensionError("vector add mismatch");
    FpVector r(a.p, a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r.v[i] = static_cast<Fp>((a.v[i] + b.v[i]) % a.p);
    return r;
}

FpVector vector_scale(const FpVector& a, Fp c) {
    FpVector r(a.p, a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r.v[i] = static_cast<Fp>((static_cast<std::uint32_t>(a.v[i]) * c) % a.p);
    return r;
}

void add_scaled(std::vector<Fp>& dst, const std::vector<Fp>& src, Fp c, Fp p) {
    if (c == 0) return;
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] = static_cast<Fp>((dst[i] + static_cast<std::uint32_t>(src[i]) * c) % p);
}

RrefResult rref(const FpMatrix& m) {
    const Fp p = m.p;
    std::vector<std::vector<Fp>> a = m.rows;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < a.size(); ++col) {
        std::size_t sel = row;
        while (sel < a.size() && a[sel][col] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[row], a[sel]);
        const Fp inv = inv_mod(a[row][col], p);
        for (auto& x : a[row]) x = static_cast<Fp>((static_cast<std::uint32_t>(x) * inv) % p);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Fp c = static_cast<Fp>(p - a[i][col]);
            add_scaled(a[i], a[row], c, p);
        }
        pivots.push_back(col);
        ++row;
    }
    RrefResult r;
    r.mat.p = p;
    r.mat.cols = m.cols;
    r.mat.rows.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(row));
    r.pivots = std::move(pivots);
    return r;
}

std::size_t rank(const FpMatrix& m) { return rref(m).mat.n_rows(); }

FpMatrix nullspace_basis(const FpMatrix& m) {
    const RrefResult r = rref(m);
    const Fp p = m.p;
    const std::size_t n = m.cols;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;

    FpMatrix basis(p, 0, n);
    basis.cols = n;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Fp> vec(n, 0);
        vec[free_col] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            const Fp val = r.mat.rows[i][free_col];
            if (val != 0) vec[r.pivots[i]] = static_cast<Fp>(p - val);
        }
        basis.rows.push_back(std::move(vec));
    }
    return basis;
}

}  // namespace prm
