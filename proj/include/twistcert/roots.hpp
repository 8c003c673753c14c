#pragma once

// Real root isolation for univariate polynomials with interval coefficients.
//
// A Sturm chain is built in interval arithmetic; any step whose sign cannot be
// decided (a leading coefficient or an evaluated sign straddles zero) makes the
// whole computation inconclusive, and callers retry at higher precision.

#include "twistcert/interval.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace twistcert {

using IntervalPoly = std::vector<Interval>;  // ascending degree

enum class IsolationStatus { ok, inconclusive };

namespace detail {

inline std::optional<IntervalPoly> strip_leading_zeros(IntervalPoly p) {
  while (!p.empty() && p.back().is_exact_zero()) p.pop_back();
  if (!p.empty() && p.back().contains_zero()) return std::nullopt;
  return p;
}

inline IntervalPoly derivative(const IntervalPoly& p) {
  IntervalPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Interval(static_cast<int>(i)));
  return d;
}

/// Remainder of a / b; b's leading coefficient must exclude zero.
inline IntervalPoly remainder(IntervalPoly a, const IntervalPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const Interval q = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i < db; ++i) a[shift + i] -= q * b[i];
    a.pop_back();
  }
  return a;
}

}  // namespace detail

class SturmChain {
 public:
  /// Nothing when the chain cannot be built with certainty at this precision
  /// (which includes polynomials with repeated roots).
  static std::optional<SturmChain> build(const IntervalPoly& g) {
    auto p0 = detail::strip_leading_zeros(g);
    if (!p0 || p0->empty()) return std::nullopt;
    SturmChain chain;
    chain.polys_.push_back(*p0);
    if (p0->size() == 1) return chain;
    auto p1 = detail::strip_leading_zeros(detail::derivative(*p0));
    if (!p1 || p1->empty()) return std::nullopt;
    chain.polys_.push_back(*p1);
    while (chain.polys_.back().size() > 1) {
      const auto& a = chain.polys_[chain.polys_.size() - 2];
      const auto& b = chain.polys_.back();
      IntervalPoly r = detail::remainder(a, b);
      for (auto& c : r) c = -c;
      auto next = detail::strip_leading_zeros(std::move(r));
      // An empty remainder means gcd(g, g') is non-constant.
      if (!next || next->empty()) return std::nullopt;
      chain.polys_.push_back(std::move(*next));
    }
    return chain;
  }

  const std::vector<IntervalPoly>& polys() const { return polys_; }
  int degree() const { return static_cast<int>(polys_.front().size()) - 1; }

  /// Sign variations of the chain at t; nothing if some sign is undecided.
  std::optional<int> variations_at(const Real& t) const {
    std::vector<int> signs;
    for (const auto& p : polys_) {
      auto s = horner(p, Interval(t)).sign();
      if (!s) return std::nullopt;
      signs.push_back(*s);
    }
    return count_changes(signs);
  }
  int variations_at_infinity(bool positive) const {
    std::vector<int> signs;
    for (const auto& p : polys_) {
      int s = *p.back().sign();
      if (!positive && (p.size() - 1) % 2 == 1) s = -s;
      signs.push_back(s);
    }
    return count_changes(signs);
  }

 private:
  static int count_changes(const std::vector<int>& signs) {
    int changes = 0;
    for (std::size_t i = 1; i < signs.size(); ++i) changes += signs[i] != signs[i - 1];
    return changes;
  }
  std::vector<IntervalPoly> polys_;
};

/// Upper bound on |root|: 1 + max |c_i / c_d|.
inline Real cauchy_bound(const IntervalPoly& g) {
  const Interval& lead = g.back();
  Real lead_min = min(abs(lead.lo()), abs(lead.hi()));
  Real best(0);
  for (std::size_t i = 0; i + 1 < g.size(); ++i) best = max(best, g[i].magnitude());
  return next_above(Real(1) + next_above(best / lead_min));
}

struct IsolatedRoot {
  Real lo, hi;  // the root lies in (lo, hi]
  Real value;   // refined estimate
};

struct RootIsolation {
  IsolationStatus status = IsolationStatus::inconclusive;
  std::vector<IsolatedRoot> roots;  // ascending
  int total_real_roots = 0;
};

namespace detail {

/// Bisect (lo, hi] around a simple root until the bracket is at the working
/// precision or the sign of g can no longer be decided, then take one Newton
/// step if it stays inside the bracket.
inline std::optional<IsolatedRoot> refine_root(const IntervalPoly& g, Real lo, Real hi) {
  auto sign_at = [&g](const Real& t) { return horner(g, Interval(t)).sign(); };
  auto s_lo = sign_at(lo);
  auto s_hi = sign_at(hi);
  if (!s_lo || !s_hi || *s_lo == *s_hi) return std::nullopt;
  const Real tol = epsilon_bits(working_precision() - 4);
  for (int it = 0; it < 4 * working_precision(); ++it) {
    if (hi - lo <= tol * max(Real(1), max(abs(lo), abs(hi)))) break;
    Real mid = ldexp(lo + hi, -1);
    auto s = sign_at(mid);
    if (!s) break;
    if (*s == *s_lo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  Real mid = ldexp(lo + hi, -1);
  const IntervalPoly dg = derivative(g);
  const Interval f = horner(g, Interval(mid));
  const Interval df = horner(dg, Interval(mid));
  if (!df.contains_zero()) {
    Real step = ldexp(f.lo() + f.hi(), -1) / ldexp(df.lo() + df.hi(), -1);
    Real newton = mid - step;
    if (newton > lo && newton <= hi) mid = std::move(newton);
  }
  return IsolatedRoot{std::move(lo), std::move(hi), std::move(mid)};
}

inline bool isolate_rec(const SturmChain& chain, const Real& lo, int v_lo, const Real& hi, int v_hi,
                        std::vector<std::pair<Real, Real>>& out, int depth) {
  const int count = v_lo - v_hi;
  if (count == 0) return true;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return true;
  }
  if (depth > 4 * working_precision()) return false;
  // Nudge the split point off an undecidable spot.
  Real width = hi - lo;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Real mid = lo + width * Real(0.5 + 0.0625 * ((attempt + 1) / 2) * (attempt % 2 ? 1 : -1));
    if (auto v_mid = chain.variations_at(mid)) {
      return isolate_rec(chain, lo, v_lo, mid, *v_mid, out, depth + 1) &&
             isolate_rec(chain, mid, *v_mid, hi, v_hi, out, depth + 1);
    }
  }
  return false;
}

}  // namespace detail

/// Isolate and refine every real root of g in (lo, hi]. With lo/hi absent the
/// search covers the whole real line.
inline RootIsolation isolate_real_roots(const IntervalPoly& g, std::optional<Real> lo = std::nullopt,
                                        std::optional<Real> hi = std::nullopt) {
  RootIsolation result;
  auto chain = SturmChain::build(g);
  if (!chain) return result;
  const IntervalPoly& p = chain->polys().front();
  result.total_real_roots = chain->variations_at_infinity(false) - chain->variations_at_infinity(true);
  if (p.size() == 1) {
    result.status = IsolationStatus::ok;
    return result;
  }
  const Real bound = cauchy_bound(p);
  Real a = lo ? max(*lo, -bound) : -bound;
  Real b = hi ? min(*hi, bound) : bound;
  if (!(a < b)) {
    result.status = IsolationStatus::ok;
    return result;
  }
  auto v_a = chain->variations_at(a);
  auto v_b = chain->variations_at(b);
  if (!v_a || !v_b) return result;
  std::vector<std::pair<Real, Real>> brackets;
  if (!detail::isolate_rec(*chain, a, *v_a, b, *v_b, brackets, 0)) return result;
  for (auto& [l, h] : brackets) {
    auto root = detail::refine_root(p, l, h);
    if (!root) return result;
    result.roots.push_back(std::move(*root));
  }
  result.status = IsolationStatus::ok;
  return result;
}

}  // namespace twistcert
