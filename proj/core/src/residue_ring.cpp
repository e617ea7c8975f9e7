#include "collide/residue_ring.hpp"

#include "collide/errors.hpp"

#include <numeric>
#include <string>

namespace collide {

namespace {

int64_t checked_modulus(int64_t base, int64_t lag, int64_t bound) {
    int64_t m = 1;
    for (int64_t i = 0; i < lag + 1; ++i) {
        if (m > bound / base)
            throw ConfigError("modulus " + std::to_string(base) + "^" + std::to_string(lag + 1) +
                              " exceeds the configured bound " + std::to_string(bound));
        m *= base;
    }
    return m;
}

void require_unit(const UnitsGroup& g, int64_t a, const char* op) {
    if (a < 0 || a >= g.modulus || !g.is_unit(a))
        throw ConfigError(std::string(op) + ": " + std::to_string(a) +
                          " is not a unit modulo " + std::to_string(g.modulus));
}

}  // namespace

UnitsGroup build_units_group(int64_t base, int64_t lag, int64_t modulus_bound) {
    if (base < 2) throw ConfigError("base must be >= 2, got " + std::to_string(base));
    if (lag < 1) throw ConfigError("lag must be >= 1, got " + std::to_string(lag));
    if (modulus_bound < 4) throw ConfigError("modulus bound too small");

    UnitsGroup g;
    g.base = base;
    g.lag = lag;
    g.modulus = checked_modulus(base, lag, modulus_bound);
    g.unit_index.assign(static_cast<size_t>(g.modulus), -1);
    for (int64_t a = 1; a < g.modulus; ++a) {
        if (std::gcd(a, g.modulus) == 1) {
            g.unit_index[static_cast<size_t>(a)] = static_cast<int32_t>(g.units.size());
            g.units.push_back(a);
        }
    }
    g.phi = static_cast<int64_t>(g.units.size());
    return g;
}

int64_t reflect(const UnitsGroup& group, int64_t a) {
    require_unit(group, a, "reflect");
    return group.modulus - a;
}

int64_t spectral_class(const UnitsGroup& group, int64_t a) {
    require_unit(group, a, "spectral_class");
    return (a - 1) % group.base;
}

}  // namespace collide
