#pragma once

// Numerical non-abelian representations rho(a) = A, rho(b) = B of the knot
// group at a point (s, y), at the working precision.

#include "twistcert/knots.hpp"
#include "twistcert/mat2.hpp"
#include "twistcert/real.hpp"
#include "twistcert/riley.hpp"

#include <stdexcept>
#include <utility>

namespace twistcert {

using Mat2C = Mat2<Complex>;

struct ReprPoint {
  Complex s;
  Complex y;
};

/// Largest entry modulus.
inline Real max_abs(const Mat2C& m) { return max(max(abs(m.a), abs(m.b)), max(abs(m.c), abs(m.d))); }

/// s = e^{i pi / r}.
inline Complex meridian_eigenvalue(long r) { return Complex::polar_unit(pi() / Real(r)); }

/// A = [[s, 1], [0, 1/s]], B = [[s, 0], [2 - y, 1/s]].
inline std::pair<Mat2C, Mat2C> build_rep(const ReprPoint& pt) {
  if (pt.s.re.is_zero() && pt.s.im.is_zero()) throw std::invalid_argument("build_rep: s must be nonzero");
  const Complex sinv = Complex(1) / pt.s;
  Mat2C A{pt.s, Complex(1), Complex(0), sinv};
  Mat2C B{pt.s, Complex(0), Complex(2) - pt.y, sinv};
  return {A, B};
}

inline Mat2C eval_word(const DoubleTwistKnot& K, const Mat2C& A, const Mat2C& B) {
  return word_matrix(K, A, B);
}

/// max |entry| of W^n A - B W^n.
inline Real relation_residual(const DoubleTwistKnot& K, const ReprPoint& pt) {
  const auto [A, B] = build_rep(pt);
  const Mat2C Wn = unimodular_power(eval_word(K, A, B), K.n);
  return max_abs(Wn * A - B * Wn);
}

/// max |entry| of A B A^{-1} B^{-1} - I; zero exactly when A and B commute.
inline Real commutator_distance(const Mat2C& A, const Mat2C& B) {
  return max_abs(A * B * A.adjugate() * B.adjugate() - Mat2C::identity());
}

}  // namespace twistcert
