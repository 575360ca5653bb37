#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fairclust {

// Nonnegative extended real: a finite value >= 0 or +infinity.
// Infinity absorbs addition and dominates every finite value; comparisons
// are total. Division with a zero denominator is only defined when the
// numerator is positive (0/0 and inf/inf are rejected here; fairness code
// applies its own conventions for those, see audit.hpp).
class ExtReal {
  public:
    constexpr ExtReal() = default;

    static ExtReal finite(double v) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("ExtReal::finite: value must be finite and >= 0");
        return ExtReal(v);
    }

    static constexpr ExtReal inf() {
        return ExtReal(std::numeric_limits<double>::infinity());
    }

    // Accepts any nonnegative double, +inf included. NaN and negatives are rejected.
    static ExtReal from_raw(double v) {
        if (std::isnan(v) || v < 0.0)
            throw std::invalid_argument("ExtReal::from_raw: value must be >= 0 or +inf");
        return ExtReal(v);
    }

    constexpr bool is_inf() const { return std::isinf(v_); }
    constexpr bool is_zero() const { return v_ == 0.0; }

    // Underlying double; +inf when infinite. Safe for arithmetic that relies
    // on IEEE absorption (sums, max, comparisons).
    constexpr double raw() const { return v_; }

    double finite_value() const {
        if (is_inf()) throw std::logic_error("ExtReal::finite_value called on inf");
        return v_;
    }

    friend constexpr bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

    friend constexpr ExtReal operator+(ExtReal a, ExtReal b) { return ExtReal(a.v_ + b.v_); }
    ExtReal& operator+=(ExtReal o) {
        v_ += o.v_;
        return *this;
    }

    // Scale by a strictly positive factor; inf stays inf.
    ExtReal scaled(double c) const {
        if (!(c > 0.0) || std::isnan(c))
            throw std::invalid_argument("ExtReal::scaled: factor must be > 0");
        return ExtReal(v_ * c);
    }

    // Mean helper: divide by a positive count; inf stays inf.
    ExtReal divided_by(int count) const {
        if (count <= 0) throw std::invalid_argument("ExtReal::divided_by: count must be > 0");
        return ExtReal(v_ / static_cast<double>(count));
    }

    // a/b with b = 0 allowed only when a > 0 (result inf). 0/0 and inf/inf
    // are ambiguous and rejected.
    static ExtReal ratio(ExtReal a, ExtReal b) {
        if (b.is_zero()) {
            if (a.is_zero()) throw std::invalid_argument("ExtReal::ratio: 0/0 is undefined");
            return inf();
        }
        if (a.is_inf() && b.is_inf())
            throw std::invalid_argument("ExtReal::ratio: inf/inf is undefined");
        return ExtReal(a.v_ / b.v_);
    }

    std::string to_string() const;

    // Parses a nonnegative real or the token "inf".
    static ExtReal parse(const std::string& token);

  private:
    explicit constexpr ExtReal(double v) : v_(v) {}
    double v_ = 0.0;
};

inline ExtReal max(ExtReal a, ExtReal b) { return a < b ? b : a; }
inline ExtReal min(ExtReal a, ExtReal b) { return b < a ? b : a; }

}  // namespace fairclust
