#pragma once

// Sparse exact-integer bivariate polynomials.
//
// IntPolyXY is an ordinary polynomial in (x, y). LaurentBivar allows negative
// powers of its first variable s and is the ring the matrices of the knot group
// representation live in before x = s + 1/s is imposed.

#include "twistcert/real.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twistcert {

struct XYVars {
  static constexpr bool kLaurentFirst = false;
  static constexpr const char* kFirst = "x";
  static constexpr const char* kSecond = "y";
};

struct LaurentSYVars {
  static constexpr bool kLaurentFirst = true;
  static constexpr const char* kFirst = "s";
  static constexpr const char* kSecond = "y";
};

/// Sparse map (first exponent, second exponent) -> nonzero coefficient.
template <class Vars>
class Bivariate {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Integer>;

  Bivariate() = default;
  Bivariate(int c) : Bivariate(Integer(c)) {}
  Bivariate(Integer c) {
    if (c != 0) terms_.emplace(Exponents{0, 0}, std::move(c));
  }

  static Bivariate monomial(int e1, int e2, Integer c = 1) {
    check_exponents(e1, e2);
    Bivariate p;
    if (c != 0) p.terms_.emplace(Exponents{e1, e2}, std::move(c));
    return p;
  }
  static Bivariate first() { return monomial(1, 0); }
  static Bivariate second() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coeff(int e1, int e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  int degree_first() const {
    int d = 0;
    bool seen = false;
    for (const auto& [e, c] : terms_) {
      d = seen ? std::max(d, e.first) : e.first;
      seen = true;
    }
    return d;
  }
  /// Largest power of the second variable; -1 for the zero polynomial.
  int degree_second() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
  }

  /// Coefficient of second^d as a polynomial in the first variable alone.
  Bivariate leading_in_second() const {
    Bivariate out;
    int d = degree_second();
    for (const auto& [e, c] : terms_)
      if (e.second == d) out.terms_.emplace(Exponents{e.first, 0}, c);
    return out;
  }

  void add_term(int e1, int e2, const Integer& c) {
    if (c == 0) return;
    check_exponents(e1, e2);
    auto [it, inserted] = terms_.try_emplace(Exponents{e1, e2}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Bivariate& operator+=(const Bivariate& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  Bivariate& operator-=(const Bivariate& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }

  friend Bivariate operator+(Bivariate a, const Bivariate& b) { return a += b; }
  friend Bivariate operator-(Bivariate a, const Bivariate& b) { return a -= b; }
  friend Bivariate operator-(const Bivariate& a) {
    Bivariate r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Bivariate operator*(const Bivariate& a, const Bivariate& b) {
    Terms acc;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e{ea.first + eb.first, ea.second + eb.second};
        auto [it, inserted] = acc.try_emplace(e);
        it->second += ca * cb;
      }
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    Bivariate r;
    r.terms_ = std::move(acc);
    return r;
  }
  friend bool operator==(const Bivariate& a, const Bivariate& b) { return a.terms_ == b.terms_; }

  /// Terms ordered by descending second exponent, then descending first.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Integer>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
      if (l.first.second != r.first.second) return l.first.second > r.first.second;
      return l.first.first > r.first.first;
    });
    std::string out;
    for (const auto& [e, c] : sorted) {
      Integer mag = abs(c);
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      std::string mono;
      auto var = [&mono](const char* name, int p) {
        if (p == 0) return;
        if (!mono.empty()) mono += "*";
        mono += name;
        if (p != 1) mono += "^" + std::to_string(p);
      };
      var(Vars::kFirst, e.first);
      var(Vars::kSecond, e.second);
      if (mono.empty()) {
        out += mag.str();
      } else {
        out += (mag == 1 ? "" : mag.str() + "*") + mono;
      }
    }
    return out;
  }

 private:
  static void check_exponents(int e1, int e2) {
    if (e2 < 0 || (!Vars::kLaurentFirst && e1 < 0)) {
      throw std::invalid_argument("negative exponent in polynomial term");
    }
  }
  Terms terms_;
};

using IntPolyXY = Bivariate<XYVars>;
using LaurentBivar = Bivariate<LaurentSYVars>;

inline IntPolyXY poly_x() { return IntPolyXY::first(); }
inline IntPolyXY poly_y() { return IntPolyXY::second(); }
inline LaurentBivar laurent_s(int e = 1) { return LaurentBivar::monomial(e, 0); }
inline LaurentBivar laurent_y() { return LaurentBivar::second(); }

/// Image of p under x -> s + s^{-1}.
inline LaurentBivar substitute_x_eq_s_plus_sinv(const IntPolyXY& p) {
  LaurentBivar out;
  for (const auto& [e, c] : p.terms()) {
    const int i = e.first;
    Integer binom = 1;
    for (int t = 0; t <= i; ++t) {
      out.add_term(i - 2 * t, e.second, c * binom);
      binom = binom * (i - t) / (t + 1);
    }
  }
  return out;
}

/// p(x, q(x, y)), by Horner in y.
inline IntPolyXY substitute_y(const IntPolyXY& p, const IntPolyXY& q) {
  const int dy = p.degree_second();
  std::vector<IntPolyXY> by_y(static_cast<std::size_t>(std::max(dy, 0) + 1));
  for (const auto& [e, c] : p.terms()) by_y[static_cast<std::size_t>(e.second)].add_term(e.first, 0, c);
  IntPolyXY acc;
  for (int d = dy; d >= 0; --d) acc = acc * q + by_y[static_cast<std::size_t>(d)];
  return acc;
}

/// True iff every monomial has even power of the first variable.
template <class Vars>
bool even_in_first(const Bivariate<Vars>& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& kv) { return kv.first.first % 2 == 0; });
}

/// Evaluate p(x, y) with `precision` bits; intermediate work carries 64 guard bits.
inline Real eval_poly(const IntPolyXY& p, const Real& x, const Real& y, long precision) {
  if (precision < 53) throw std::invalid_argument("eval_poly: precision must be >= 53 bits");
  Real acc;
  {
    PrecisionScope guard(precision + 64);
    Real xs = x, ys = y;
    std::map<int, Real> xp, yp;
    auto power = [](std::map<int, Real>& cache, const Real& base, int e) -> const Real& {
      auto it = cache.find(e);
      if (it != cache.end()) return it->second;
      Real v(1);
      for (int i = 0; i < e; ++i) v = v * base;
      return cache.emplace(e, std::move(v)).first->second;
    };
    for (const auto& [e, c] : p.terms()) acc += Real(c) * power(xp, xs, e.first) * power(yp, ys, e.second);
  }
  PrecisionScope out(precision);
  return acc + Real(0);
}

/// Coefficients of p(x, .) as a polynomial in y, ascending degree, at the working precision.
inline std::vector<Real> coefficients_in_y(const IntPolyXY& p, const Real& x) {
  const int dy = p.degree_second();
  std::vector<Real> out(static_cast<std::size_t>(std::max(dy, 0) + 1), Real(0));
  for (const auto& [e, c] : p.terms()) {
    Real xp(1);
    for (int i = 0; i < e.first; ++i) xp = xp * x;
    out[static_cast<std::size_t>(e.second)] += Real(c) * xp;
  }
  return out;
}

}  // namespace twistcert
