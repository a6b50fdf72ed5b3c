#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "frieze/error.hpp"

namespace frieze {

// All coefficient arithmetic in the library goes through these helpers so a
// 64-bit overflow surfaces as an exception instead of silent wraparound.
namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw FriezeError(ErrorKind::Overflow, "64-bit add overflow");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw FriezeError(ErrorKind::Overflow, "64-bit subtract overflow");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw FriezeError(ErrorKind::Overflow, "64-bit multiply overflow");
    return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// C(n, k) by the multiplicative formula; every intermediate quotient is an
/// integer, and overflow is detected rather than wrapped.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // Widened accumulator: the partial products C(n-k+i, i) are monotonically
    // increasing, so clamping each one to int64 range traps exactly when the
    // final coefficient itself would overflow.
    unsigned __int128 c = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        c = c * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (c > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
            throw FriezeError(ErrorKind::Overflow, "binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::int64_t>(c);
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    return std::lcm(a, b);
}

}  // namespace frieze
