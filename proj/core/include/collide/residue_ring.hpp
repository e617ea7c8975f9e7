#pragma once

#include <cstdint>
#include <vector>

namespace collide {

inline constexpr int64_t kDefaultModulusBound = 10'000'000;

// The unit group (Z/mZ)^x at m = b^(lag+1), fully enumerated. Immutable once
// built; safe to share across threads.
struct UnitsGroup {
    int64_t base = 0;
    int64_t lag = 0;
    int64_t modulus = 0;
    int64_t phi = 0;
    std::vector<int64_t> units;       // ascending, duplicate-free
    std::vector<int32_t> unit_index;  // residue -> position in units, -1 for non-units

    bool is_unit(int64_t a) const {
        return a >= 0 && a < modulus && unit_index[static_cast<size_t>(a)] >= 0;
    }
    // position of residue a in the unit list, -1 if a is not a unit
    int32_t index_of(int64_t a) const {
        int64_t r = a % modulus;
        if (r < 0) r += modulus;
        return unit_index[static_cast<size_t>(r)];
    }
};

// Enumerates the units of m = base^(lag+1). Throws ConfigError when base < 2
// or lag < 1, and when the modulus would exceed `modulus_bound` (or 64-bit
// range).
UnitsGroup build_units_group(int64_t base, int64_t lag,
                             int64_t modulus_bound = kDefaultModulusBound);

// The reflection a -> m - a. An involution on units with no fixed point.
// Throws ConfigError if a is not a unit.
int64_t reflect(const UnitsGroup& group, int64_t a);

// Spectral class R(a) = (a - 1) mod base, in [0, base-1). Satisfies
// R(a) + R(m - a) = base - 2 on units. Throws ConfigError if a is not a unit.
int64_t spectral_class(const UnitsGroup& group, int64_t a);

}  // namespace collide
