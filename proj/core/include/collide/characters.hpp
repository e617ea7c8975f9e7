#pragma once

#include "collide/residue_ring.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace collide {

inline constexpr int64_t kDefaultCharBound = 4096;

struct CyclicComponent {
    int64_t prime_power = 0;  // the p^k this component lives at
    int64_t order = 0;
    int64_t generator = 0;  // as a residue mod m (1 at all other prime powers)
};

// (Z/mZ)^x as a direct product of cyclic groups, with a discrete-log table
// per component. Odd prime powers get a primitive root; 2^k (k >= 3) splits
// into the {-1, 5} pair.
struct CyclicDecomposition {
    std::vector<CyclicComponent> components;
    // dlog[k][unit position] = exponent of that unit in component k
    std::vector<std::vector<int32_t>> dlog;
};

CyclicDecomposition decompose_units_group(const UnitsGroup& group);

// All phi(m) Dirichlet characters mod m with precomputed value tables.
// Characters are indexed lexicographically by exponent tuple, so chi0 is
// index 0 and every emitted table is reproducible.
struct CharacterTable {
    const UnitsGroup* group = nullptr;
    CyclicDecomposition decomposition;
    std::vector<std::vector<int32_t>> exponents;              // [chi][component]
    std::vector<std::vector<std::complex<double>>> values;    // [chi][unit position]
    std::vector<int> parity;                                  // chi(-1), +1 or -1
    int trivial_index = 0;

    int num_characters() const { return static_cast<int>(exponents.size()); }
    bool is_odd(int chi) const { return parity[static_cast<size_t>(chi)] < 0; }
    const std::vector<int>& odd_indices() const { return odd_indices_; }

    // index of the conjugate character (negated exponent tuple)
    int conjugate_index(int chi) const;
    // index of the product character (componentwise exponent sum)
    int product_index(int chi_a, int chi_b) const;

    std::vector<int> odd_indices_;  // filled by build_character_table
};

// Builds every character of the group. Throws ConfigError when phi(m)
// exceeds `char_bound` (the value table is phi^2 complex numbers).
CharacterTable build_character_table(const UnitsGroup& group,
                                     int64_t char_bound = kDefaultCharBound);

// chi(n mod m); 0 when gcd(n, m) > 1. Completely multiplicative.
std::complex<double> char_value(const CharacterTable& table, int chi, int64_t n);

// chi(-1) snapped to +/-1. Throws CheckError if the table value is not
// within 1e-9 of a sign (internal consistency).
int char_parity(const CharacterTable& table, int chi);

}  // namespace collide
