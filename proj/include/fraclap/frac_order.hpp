#pragma once

#include <cmath>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap {

/// Validated fractional exponent alpha > 0 of the power-law operator.
///
/// Carries the derived quantities used everywhere: alpha/2, the smallest
/// integer p0 >= alpha/2, and whether alpha/2 is an integer (within
/// tol_int, in which case the order snaps to the exact integer branch and
/// the operator is local).
class FracOrder {
public:
    static constexpr double tol_int = 1e-9;
    static constexpr double tol_pole = 1e-9;

    explicit FracOrder(double alpha) : alpha_(alpha) {
        if (!(alpha > 0.0))
            throw DomainError("FracOrder: alpha must be positive, got " + std::to_string(alpha));
        half_ = alpha / 2.0;
        const double nearest = std::round(half_);
        is_integer_half_ = std::fabs(half_ - nearest) < tol_int;
        if (is_integer_half_) {
            half_int_ = static_cast<long>(nearest);
            p0_ = half_int_;
        } else {
            half_int_ = -1;
            p0_ = static_cast<long>(std::ceil(half_));
        }
    }

    double alpha() const { return alpha_; }
    double half() const { return half_; }
    long p0() const { return p0_; }
    bool is_integer_half() const { return is_integer_half_; }

    /// alpha/2 as an integer; only meaningful when is_integer_half().
    long half_integer() const { return half_int_; }

private:
    double alpha_;
    double half_;
    long p0_;
    long half_int_;
    bool is_integer_half_;
};

} // namespace fraclap
