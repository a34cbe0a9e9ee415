#ifndef ICHAIN_LOG_WEIGHT_HPP
#define ICHAIN_LOG_WEIGHT_HPP

#include <algorithm>
#include <cmath>
#include <limits>

namespace ichain {

/// Nonnegative weight stored as its natural logarithm. -inf is weight zero.
class LogWeight {
public:
    constexpr LogWeight() noexcept = default;  // zero
    static constexpr LogWeight from_log(double log_value) noexcept { return LogWeight(log_value); }
    static LogWeight from_linear(double w) { return LogWeight(std::log(w)); }
    static constexpr LogWeight zero() noexcept { return LogWeight(); }
    static constexpr LogWeight one() noexcept { return LogWeight(0.0); }

    constexpr double log() const noexcept { return log_; }
    double linear() const noexcept { return std::exp(log_); }
    constexpr bool is_zero() const noexcept {
        return log_ == -std::numeric_limits<double>::infinity();
    }

    /// Weight sum, max + log1p(exp(min - max)). Symmetric bit for bit in its
    /// arguments.
    friend LogWeight operator+(LogWeight a, LogWeight b) noexcept {
        const double hi = std::max(a.log_, b.log_);
        const double lo = std::min(a.log_, b.log_);
        if (lo == -std::numeric_limits<double>::infinity()) return LogWeight(hi);
        return LogWeight(hi + std::log1p(std::exp(lo - hi)));
    }
    LogWeight& operator+=(LogWeight o) noexcept { return *this = *this + o; }

    /// Weight product.
    friend constexpr LogWeight operator*(LogWeight a, LogWeight b) noexcept {
        return LogWeight(a.log_ + b.log_);
    }
    LogWeight& operator*=(LogWeight o) noexcept { return *this = *this * o; }

    /// Weight ratio a / b as a plain number.
    friend double ratio(LogWeight a, LogWeight b) noexcept {
        if (a.is_zero()) return 0.0;
        return std::exp(a.log_ - b.log_);
    }

private:
    constexpr explicit LogWeight(double l) noexcept : log_(l) {}
    double log_ = -std::numeric_limits<double>::infinity();
};

/// exp(-cost) as a LogWeight.
constexpr LogWeight boltzmann(double cost) noexcept { return LogWeight::from_log(-cost); }

}  // namespace ichain

#endif  // ICHAIN_LOG_WEIGHT_HPP
