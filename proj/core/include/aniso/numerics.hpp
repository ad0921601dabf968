#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace aniso {

/// Compensated (Kahan) accumulator.  All enumeration sums in the library go
/// through this with a fixed iteration order, so results are bit-stable and
/// accurate enough for 1e-12 comparisons even over millions of terms.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// artanh(x) = 0.5 * ln((1+x)/(1-x)), defined for |x| < 1.
/// Out-of-domain arguments are a programming error here, not a numeric one.
inline double artanh(double x) {
    if (!(x > -1.0 && x < 1.0))
        throw std::domain_error("artanh: argument must lie in (-1, 1)");
    return 0.5 * std::log((1.0 + x) / (1.0 - x));
}

/// Relative deviation |a-b| / max(|a|,|b|,1) used by the identity checks.
inline double rel_err(double a, double b) {
    double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
    return std::fabs(a - b) / scale;
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace aniso
