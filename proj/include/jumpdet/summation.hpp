#pragma once

#include <cmath>

namespace jumpdet {

/// Neumaier's variant of Kahan summation. Adding in a fixed order gives a
/// deterministic result accurate to about one rounding of the final sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2. Enough for error-free
/// accumulation of a few thousand products before the final rounding.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  static DoubleDouble two_sum(double a, double b) noexcept {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
  }
  static DoubleDouble two_prod(double a, double b) noexcept {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
  }

  DoubleDouble& operator+=(const DoubleDouble& o) noexcept {
    DoubleDouble s = two_sum(hi, o.hi);
    s.lo += lo + o.lo;
    *this = two_sum(s.hi, s.lo);
    return *this;
  }
  DoubleDouble& operator+=(double x) noexcept { return *this += DoubleDouble{x, 0.0}; }

  friend DoubleDouble operator*(const DoubleDouble& a, double b) noexcept {
    DoubleDouble p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return two_sum(p.hi, p.lo);
  }
  friend DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) noexcept {
    DoubleDouble p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return two_sum(p.hi, p.lo);
  }
  friend DoubleDouble operator/(const DoubleDouble& a, double b) noexcept {
    const double q1 = a.hi / b;
    // remainder a - q1 * b, exactly enough for one correction step
    const DoubleDouble p = two_prod(q1, b);
    const double r = ((a.hi - p.hi) - p.lo + a.lo) / b;
    return two_sum(q1, r);
  }

  double value() const noexcept { return hi + lo; }
};

}  // namespace jumpdet
