#pragma once

// Riley polynomial of J(k, 2n) in closed form, and an independent derivation by
// exact expansion of the matrix word W^n A - B W^n over Z[s, 1/s, y].

#include "twistcert/chebyshev.hpp"
#include "twistcert/exactpoly.hpp"
#include "twistcert/knots.hpp"
#include "twistcert/mat2.hpp"

#include <stdexcept>

namespace twistcert {

struct RileyData {
  DoubleTwistKnot knot;
  IntPolyXY lambda_poly;
  IntPolyXY alpha_poly;
  IntPolyXY phi_poly;
};

namespace detail {
inline void require_riley_domain(const DoubleTwistKnot& K) {
  if (K.k <= 0 || K.n == 0) {
    throw std::invalid_argument("Riley polynomial needs k > 0 and n != 0, got " + K.name());
  }
}

/// y + 2 - x^2
inline IntPolyXY shifted_y() { return poly_y() + IntPolyXY(2) - poly_x() * poly_x(); }
}  // namespace detail

/// Trace of W = rho(w) as a polynomial in x = tr A and y.
inline IntPolyXY lambda_poly(const DoubleTwistKnot& K) {
  detail::require_riley_domain(K);
  const IntPolyXY x = poly_x(), y = poly_y(), u = detail::shifted_y();
  const int m = K.m();
  const IntPolyXY s_m1 = cheb_eval<IntPolyXY>(m - 1, y);
  if (K.even_k()) return IntPolyXY(2) + (y - IntPolyXY(2)) * u * s_m1 * s_m1;
  const IntPolyXY s_m = cheb_eval<IntPolyXY>(m, y);
  return x * x - y - (y - IntPolyXY(2)) * u * s_m * s_m1;
}

inline IntPolyXY alpha_poly(const DoubleTwistKnot& K) {
  detail::require_riley_domain(K);
  const IntPolyXY y = poly_y(), u = detail::shifted_y();
  const int m = K.m();
  const IntPolyXY s_m1 = cheb_eval<IntPolyXY>(m - 1, y);
  if (K.even_k()) {
    const IntPolyXY s_m2 = cheb_eval<IntPolyXY>(m - 2, y);
    return IntPolyXY(1) - u * s_m1 * (s_m1 - s_m2);
  }
  const IntPolyXY s_m = cheb_eval<IntPolyXY>(m, y);
  return IntPolyXY(1) + u * s_m1 * (s_m - s_m1);
}

/// phi = S_{n-1}(lambda) alpha - S_{n-2}(lambda); negative n goes through
/// negative-index Chebyshev polynomials.
inline RileyData riley_poly(const DoubleTwistKnot& K) {
  RileyData r{K, lambda_poly(K), alpha_poly(K), {}};
  r.phi_poly = cheb_eval(K.n - 1, r.lambda_poly) * r.alpha_poly - cheb_eval(K.n - 2, r.lambda_poly);
  return r;
}

/// Degree of phi in y; (p - 1) / 2 for the Schubert form b(p, q).
inline int riley_degree(const RileyData& r) { return r.phi_poly.degree_second(); }

// ---------------------------------------------------------------------------
// Exact matrix-word oracle.

struct OracleResult {
  LaurentBivar entry11, entry12, entry21, entry22;
  LaurentBivar trace_w;
};

/// A = [[s, 1], [0, 1/s]] and B = [[s, 0], [2 - y, 1/s]] over Z[s, 1/s, y].
inline std::pair<Mat2<LaurentBivar>, Mat2<LaurentBivar>> symbolic_generators() {
  const LaurentBivar s = laurent_s(1), sinv = laurent_s(-1);
  Mat2<LaurentBivar> A{s, LaurentBivar(1), LaurentBivar(0), sinv};
  Mat2<LaurentBivar> B{s, LaurentBivar(0), LaurentBivar(2) - laurent_y(), sinv};
  return {A, B};
}

/// rho(w) for w = (b a^-1)^m (b^-1 a)^m (k = 2m) or (b a^-1)^m b a (b^-1 a)^m (k = 2m+1).
template <class T>
Mat2<T> word_matrix(const DoubleTwistKnot& K, const Mat2<T>& A, const Mat2<T>& B) {
  const Mat2<T> left = B * A.adjugate();
  const Mat2<T> right = B.adjugate() * A;
  Mat2<T> W = Mat2<T>::identity();
  for (int i = 0; i < K.m(); ++i) W = W * left;
  if (!K.even_k()) W = W * B * A;
  for (int i = 0; i < K.m(); ++i) W = W * right;
  return W;
}

inline OracleResult riley_oracle(const DoubleTwistKnot& K) {
  detail::require_riley_domain(K);
  const auto [A, B] = symbolic_generators();
  const Mat2<LaurentBivar> W = word_matrix(K, A, B);
  const Mat2<LaurentBivar> step = K.n > 0 ? W : W.adjugate();
  // Repeated multiplication by the small factor keeps the products cheap.
  Mat2<LaurentBivar> Wn = Mat2<LaurentBivar>::identity();
  for (int i = 0; i < std::abs(K.n); ++i) Wn = Wn * step;
  const Mat2<LaurentBivar> R = Wn * A - B * Wn;
  return OracleResult{R.a, R.b, R.c, R.d, W.trace()};
}

/// Closed form and matrix-word expansion agree: entry12 = phi(s + 1/s, y),
/// entry21 = (y - 2) entry12, zero diagonal, tr W = lambda(s + 1/s, y).
inline bool oracle_agrees(const RileyData& r, const OracleResult& o) {
  const LaurentBivar phi = substitute_x_eq_s_plus_sinv(r.phi_poly);
  return o.entry11.is_zero() && o.entry22.is_zero() && o.entry12 == phi &&
         o.entry21 == (laurent_y() - LaurentBivar(2)) * o.entry12 &&
         o.trace_w == substitute_x_eq_s_plus_sinv(r.lambda_poly);
}

// ---------------------------------------------------------------------------
// Algebraic identities.

/// alpha^2 - alpha lambda + 1 equals
///   (y + 2 - x^2) S_{m-1}(y)^2 (lambda + 2 - x^2)      for k = 2m,
///   (1 + (y + 2 - x^2) S_{m-1}(y) S_m(y)) (2 - lambda)  for k = 2m + 1.
inline bool alpha_lambda_identity_check(const DoubleTwistKnot& K) {
  const IntPolyXY x = poly_x(), y = poly_y(), u = detail::shifted_y();
  const IntPolyXY lambda = lambda_poly(K), alpha = alpha_poly(K);
  const IntPolyXY lhs = alpha * alpha - alpha * lambda + IntPolyXY(1);
  const IntPolyXY s_m1 = cheb_eval<IntPolyXY>(K.m() - 1, y);
  IntPolyXY rhs;
  if (K.even_k()) {
    rhs = u * s_m1 * s_m1 * (lambda + IntPolyXY(2) - x * x);
  } else {
    const IntPolyXY s_m = cheb_eval<IntPolyXY>(K.m(), y);
    rhs = (IntPolyXY(1) + u * s_m1 * s_m) * (IntPolyXY(2) - lambda);
  }
  return lhs == rhs;
}

/// For odd k: phi(x, x^2 - 2) = 1 identically in x.
inline bool boundary_value_identity_check(const DoubleTwistKnot& K) {
  if (K.even_k()) throw std::invalid_argument("boundary identity holds for odd k only");
  const IntPolyXY x = poly_x();
  return substitute_y(riley_poly(K).phi_poly, x * x - IntPolyXY(2)) == IntPolyXY(1);
}

/// For n < 0 with l = -n: phi = S_l(lambda) - S_{l-1}(lambda) alpha.
inline bool negative_n_form_check(const DoubleTwistKnot& K) {
  if (K.n >= 0) throw std::invalid_argument("negative-n form needs n < 0");
  const RileyData r = riley_poly(K);
  const long l = -K.n;
  return r.phi_poly == cheb_eval(l, r.lambda_poly) - cheb_eval(l - 1, r.lambda_poly) * r.alpha_poly;
}

}  // namespace twistcert
