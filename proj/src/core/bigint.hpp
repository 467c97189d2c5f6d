#ifndef PRM_CORE_BIGINT_HPP
#define PRM_CORE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace prm {

// Exact count type used throughout the combinatorics; values reach well past
// 2^64 (e.g. block lengths ~2^58 and enumerator coefficients ~p^dim).
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_pow(std::uint64_t base, std::uint64_t exp) {
    BigCount r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// log2 of a positive BigCount, accurate to double precision regardless of size.
inline double big_log2(const BigCount& x) {
    if (x <= 0) return -std::numeric_limits<double>::infinity();
    const std::size_t bits = boost::multiprecision::msb(x);  // floor(log2 x)
    if (bits <= 62) return std::log2(x.convert_to<double>());
    const BigCount top = x >> (bits - 62);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 62);
}

inline double big_ln(const BigCount& x) { return big_log2(x) * std::log(2.0); }

inline std::string big_str(const BigCount& x) { return x.str(); }

inline BigCount big_parse(const std::string& s) { return BigCount(s); }

}  // namespace prm

#endif
