#pragma once

#include <cstdint>
#include <numeric>

#include "selfcup/errors.hpp"

namespace selfcup::zmod {

// Scalar arithmetic mod m for the supported coefficient rings m in {2,3,4,5}.

inline void check_modulus(int m) {
    if (m < 2 || m > 5) throw ValidationError("modulus must lie in {2,3,4,5}");
}

inline uint8_t reduce(int m, long long v) {
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<uint8_t>(r);
}

inline uint8_t add(int m, uint8_t a, uint8_t b) {
    int s = a + b;
    return static_cast<uint8_t>(s >= m ? s - m : s);
}

inline uint8_t sub(int m, uint8_t a, uint8_t b) {
    int s = a - b;
    return static_cast<uint8_t>(s < 0 ? s + m : s);
}

inline uint8_t neg(int m, uint8_t a) { return a == 0 ? 0 : static_cast<uint8_t>(m - a); }

inline uint8_t mul(int m, uint8_t a, uint8_t b) { return static_cast<uint8_t>((a * b) % m); }

inline bool is_unit(int m, uint8_t a) { return std::gcd(static_cast<int>(a), m) == 1; }

/// Multiplicative inverse of a unit; throws for non-units.
inline uint8_t inv(int m, uint8_t a) {
    for (int u = 1; u < m; ++u)
        if ((u * a) % m == 1) return static_cast<uint8_t>(u);
    throw ValidationError("not a unit mod " + std::to_string(m));
}

}  // namespace selfcup::zmod
