#pragma once

// Chebyshev-type polynomials S_j(z): S_0 = 1, S_1 = z, S_{j+1} = z S_j - S_{j-1},
// extended to every integer j by running the recurrence backwards.

#include "twistcert/real.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace twistcert {

/// S_j(z) by the three-term recurrence. T needs construction from int and
/// ring operations (+, -, *); works for scalars and exact polynomial types.
template <class T>
T cheb_eval(long j, const T& z) {
  if (j == 0) return T(1);
  if (j > 0) {
    T prev(1);
    T cur = z;
    for (long i = 1; i < j; ++i) {
      T next = z * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // S_{i-1} = z S_i - S_{i+1}, starting from S_1 = z, S_0 = 1.
  T upper = z;
  T cur(1);
  for (long i = 0; i > j; --i) {
    T next = z * cur - upper;
    upper = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Dense exact univariate polynomial in z, coefficients by ascending degree.
class IntPoly1 {
 public:
  IntPoly1() = default;
  IntPoly1(int c) : IntPoly1(Integer(c)) {}
  IntPoly1(Integer c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit IntPoly1(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPoly1 z() { return IntPoly1(std::vector<Integer>{0, 1}); }

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Integer coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Integer(0); }

  template <class S>
  S evaluate(const S& z) const {
    S acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + S(*it);
    return acc;
  }

  friend IntPoly1 operator+(const IntPoly1& a, const IntPoly1& b) {
    std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly1(std::move(c));
  }
  friend IntPoly1 operator-(const IntPoly1& a, const IntPoly1& b) {
    std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly1(std::move(c));
  }
  friend IntPoly1 operator*(const IntPoly1& a, const IntPoly1& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[i + k] += a.coeffs_[i] * b.coeffs_[k];
    return IntPoly1(std::move(c));
  }
  friend bool operator==(const IntPoly1& a, const IntPoly1& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (long d = degree(); d >= 0; --d) {
      const Integer& c = coeffs_[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      Integer mag = abs(c);
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (mag != 1 || d == 0) out += mag.str();
      if (d > 0) out += (mag != 1 ? "*z" : "z") + (d > 1 ? "^" + std::to_string(d) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Integer> coeffs_;
};

inline IntPoly1 cheb_poly(long j) { return cheb_eval(j, IntPoly1::z()); }

/// Exact check of S_j^2 - z S_j S_{j-1} + S_{j-1}^2 = 1.
inline bool pell_identity_check(long j) {
  const IntPoly1 z = IntPoly1::z();
  const IntPoly1 sj = cheb_poly(j);
  const IntPoly1 sj1 = cheb_poly(j - 1);
  return sj * sj - z * sj * sj1 + sj1 * sj1 == IntPoly1(1);
}

}  // namespace twistcert
