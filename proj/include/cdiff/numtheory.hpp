// numtheory.hpp -- small integer number-theory helpers (trial division scale).
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "cdiff/errors.hpp"

namespace cdiff {

inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t f = 3; f * f <= v; f += 2)
        if (v % f == 0) return false;
    return true;
}

/// p^e with overflow detection; throws on overflow past 2^63.
inline std::uint64_t ipow(std::uint64_t p, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > (std::uint64_t{1} << 63) / p)
            throw Error("integer power overflows 64 bits");
        r *= p;
    }
    return r;
}

/// Distinct prime factors, ascending. Trial division; fine for v <= 2^48.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= v; f += (f == 2 ? 1 : 2)) {
        if (v % f == 0) {
            out.push_back(f);
            while (v % f == 0) v /= f;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace cdiff
