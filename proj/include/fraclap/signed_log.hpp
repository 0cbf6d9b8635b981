#pragma once

#include <cmath>
#include <limits>

namespace fraclap {

/// A real number stored as sign and natural log of its magnitude.
///
/// Keeps products and ratios of gamma functions finite far beyond the
/// range of double. sign == 0 represents an exact zero; the stored
/// log magnitude is then meaningless.
struct SignedLogValue {
    int sign = 0;                 // -1, 0, +1
    double log_magnitude = -std::numeric_limits<double>::infinity();

    static SignedLogValue zero() { return {0, -std::numeric_limits<double>::infinity()}; }

    static SignedLogValue from_value(double v) {
        if (v == 0.0) return zero();
        return {v > 0.0 ? 1 : -1, std::log(std::fabs(v))};
    }

    bool is_zero() const { return sign == 0; }

    /// Collapse to double; overflows to +-inf, underflows to 0.
    double value() const {
        if (sign == 0) return 0.0;
        return static_cast<double>(sign) * std::exp(log_magnitude);
    }

    friend SignedLogValue operator*(const SignedLogValue& a, const SignedLogValue& b) {
        if (a.sign == 0 || b.sign == 0) return zero();
        return {a.sign * b.sign, a.log_magnitude + b.log_magnitude};
    }

    friend SignedLogValue operator/(const SignedLogValue& a, const SignedLogValue& b) {
        if (a.sign == 0) return zero();
        return {a.sign * b.sign, a.log_magnitude - b.log_magnitude};
    }
};

} // namespace fraclap
