#pragma once

#include <complex>

namespace collide {

// Compensated (Kahan) accumulator. Works for double and std::complex<double>;
// compensation is componentwise for complex. Keeps long prime sums accurate
// to a few ulps of the running value, which the 1e-12 identity checks need.
template <class T>
struct KahanSum {
    T sum{};
    T carry{};

    void add(const T& x) {
        const T y = x - carry;
        const T t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }

    T value() const { return sum; }

    KahanSum& operator+=(const T& x) {
        add(x);
        return *this;
    }
};

}  // namespace collide
