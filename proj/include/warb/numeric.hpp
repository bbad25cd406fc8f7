// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <vector>

namespace warb {

/// Correctly rounded floating-point summation (Shewchuk's non-overlapping
/// partials, the same scheme as Python's math.fsum). The result does not
/// depend on the order in which terms are added, so densities are identical
/// under vertex relabeling and across platforms.
class ExactSum {
 public:
  void clear() noexcept { partials_.clear(); }

  void add(double x) {
    std::size_t i = 0;
    for (double y : partials_) {
      if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) partials_[i++] = lo;
      x = hi;
    }
    partials_.resize(i);
    partials_.push_back(x);
  }

  double value() const noexcept {
    std::size_t n = partials_.size();
    if (n == 0) return 0.0;
    double hi = partials_[--n];
    double lo = 0.0;
    while (n > 0) {
      const double x = hi;
      const double y = partials_[--n];
      hi = x + y;
      const double yr = hi - x;
      lo = y - yr;
      if (lo != 0.0) break;
    }
    // Round-half-even correction when the remaining partials push the
    // discarded tail exactly onto a tie.
    if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) || (lo > 0.0 && partials_[n - 1] > 0.0))) {
      const double y = lo * 2.0;
      const double x = hi + y;
      const double yr = x - hi;
      if (y == yr) hi = x;
    }
    return hi;
  }

 private:
  std::vector<double> partials_;
};

template <class Range>
double exact_sum(const Range& values) {
  ExactSum acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

/// Exact three-way comparison of a/b against c/d for finite doubles with
/// b, d > 0. Each cross product is split into rounded head + exact tail via
/// fma; rounding is monotone, so unequal heads already decide the order.
inline std::strong_ordering compare_ratio(double a, double b, double c, double d) noexcept {
  const double p1 = a * d;
  const double e1 = std::fma(a, d, -p1);
  const double p2 = c * b;
  const double e2 = std::fma(c, b, -p2);
  if (p1 < p2) return std::strong_ordering::less;
  if (p1 > p2) return std::strong_ordering::greater;
  if (e1 < e2) return std::strong_ordering::less;
  if (e1 > e2) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace warb
