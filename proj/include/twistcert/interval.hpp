#pragma once

// Closed intervals over Real with outward rounding: each endpoint is computed
// round-to-nearest and then pushed one ulp outward, so the true result of the
// real operation on any members of the operands is always enclosed.

#include "twistcert/real.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace twistcert {

class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(int v) : lo_(v), hi_(v) {}
  Interval(const Real& point) : lo_(point), hi_(point) {}
  Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}
  /// Exact when |v| fits in the working mantissa, one ulp wide on each side otherwise.
  explicit Interval(const Integer& v) : lo_(v), hi_(v) {
    if (v != 0 && static_cast<long>(msb(abs(v))) >= working_precision()) {
      lo_ = next_below(lo_);
      hi_ = next_above(hi_);
    }
  }

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  Real width() const { return hi_ - lo_; }
  Real magnitude() const { return max(abs(lo_), abs(hi_)); }

  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool is_exact_zero() const { return lo_.is_zero() && hi_.is_zero(); }
  /// +1 / -1 when the whole interval has that sign, nothing when it straddles 0.
  std::optional<int> sign() const {
    if (lo_.sign() > 0) return 1;
    if (hi_.sign() < 0) return -1;
    return std::nullopt;
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    return {next_below(a.lo_ + b.lo_), next_above(a.hi_ + b.hi_)};
  }
  friend Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }
  friend Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return Interval(0);
    Real p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    Real lo = p[0], hi = p[0];
    for (const Real& v : p) {
      lo = min(lo, v);
      hi = max(hi, v);
    }
    return Interval(next_below(lo), next_above(hi));
  }
  /// Requires 0 outside b.
  friend Interval operator/(const Interval& a, const Interval& b) {
    const Interval inv{next_below(Real(1) / b.hi_), next_above(Real(1) / b.lo_)};
    return a * inv;
  }
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

 private:
  Real lo_, hi_;
};

/// Horner evaluation of sum c_i t^i over intervals.
inline Interval horner(const std::vector<Interval>& c, const Interval& t) {
  Interval acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace twistcert
