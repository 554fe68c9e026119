#pragma once

#include <algorithm>
#include <cmath>

#include "folia/kernels.hpp"

namespace folia {

/// Closed interval with outward widening after every operation; each result
/// encloses the exact real result of the operation on the enclosed reals.
struct Interval {
  double lo = 0;
  double hi = 0;

  Interval() = default;
  Interval(double v) : lo(v), hi(v) {}  // NOLINT
  Interval(double l, double h) : lo(l), hi(h) {}

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool excludes_zero() const { return lo > 0 || hi < 0; }
  double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
  double mig() const { return contains_zero() ? 0.0 : std::min(std::fabs(lo), std::fabs(hi)); }
};

namespace interval_detail {

// Round-to-nearest result r is within 2^-53 |r| of the exact value, plus the
// smallest subnormal for underflow.
inline double down(double r) { return r - (std::fabs(r) * 0x1p-52 + 0x1p-1074); }
inline double up(double r) { return r + (std::fabs(r) * 0x1p-52 + 0x1p-1074); }

}  // namespace interval_detail

inline Interval operator+(const Interval& a, const Interval& b) {
  return {interval_detail::down(a.lo + b.lo), interval_detail::up(a.hi + b.hi)};
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return {interval_detail::down(a.lo - b.hi), interval_detail::up(a.hi - b.lo)};
}

inline Interval operator*(const Interval& a, const Interval& b) {
  double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {interval_detail::down(std::min({p1, p2, p3, p4})), interval_detail::up(std::max({p1, p2, p3, p4}))};
}

/// Enclosure of p over the box x, y. Coefficients are widened by one ulp
/// because their double form is truncated from the exact rational.
inline Interval eval_interval(const kernels::DensePoly2& p, const Interval& x, const Interval& y) {
  const int dy1 = p.dy + 1;
  Interval acc(0.0);
  for (int i = p.dx; i >= 0; --i) {
    Interval inner(0.0);
    for (int j = p.dy; j >= 0; --j) {
      inner = inner * y + Interval(p.c_lo[i * dy1 + j], p.c_hi[i * dy1 + j]);
    }
    acc = acc * x + inner;
  }
  return acc;
}

}  // namespace folia
