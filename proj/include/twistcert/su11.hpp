#pragma once

// Conjugating a real-character representation into SU(1,1).
//
// A pair (A, B) preserving a Hermitian form H of signature (1,1) is conjugate
// into SU(1,1): with H = P^* diag(1,-1) P, the matrices P M P^{-1} preserve
// diag(1,-1). H is found as the kernel of M^* H M - H = 0 for M in {A, B}.

#include "twistcert/reps.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

namespace twistcert {

struct HermitianForm {
  // H = [[h11, h12], [conj(h12), h22]]
  Real h11, h22;
  Complex h12;

  Mat2C matrix() const { return {Complex(h11), h12, conj(h12), Complex(h22)}; }
  Real frobenius() const { return sqrt(h11 * h11 + h22 * h22 + Real(2) * norm(h12)); }
};

enum class FormStatus { ok, degenerate };

struct InvariantFormResult {
  FormStatus status = FormStatus::degenerate;
  HermitianForm form;
  std::array<Real, 4> singular_values;  // ascending
  std::string message;
};

namespace detail {

inline Mat2C conj_transpose(const Mat2C& m) { return {conj(m.a), conj(m.c), conj(m.b), conj(m.d)}; }

/// Real coordinates (h11, h22, Re h12, Im h12) of a Hermitian matrix.
inline std::array<Real, 4> hermitian_coords(const Mat2C& h) { return {h.a.re, h.d.re, h.b.re, h.b.im}; }

inline Mat2C hermitian_basis(int i) {
  switch (i) {
    case 0: return {Complex(1), Complex(0), Complex(0), Complex(0)};
    case 1: return {Complex(0), Complex(0), Complex(0), Complex(1)};
    case 2: return {Complex(0), Complex(1), Complex(1), Complex(0)};
    default: return {Complex(0), Complex(Real(0), Real(1)), Complex(Real(0), Real(-1)), Complex(0)};
  }
}

using Sym4 = std::array<std::array<Real, 4>, 4>;

/// Cyclic Jacobi eigensolver for a symmetric 4x4 matrix; eigenvalues ascending,
/// eigenvectors as the matching columns of `vectors`.
inline std::pair<std::array<Real, 4>, Sym4> jacobi_eigen(Sym4 a) {
  Sym4 v;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v[i][j] = Real(i == j ? 1 : 0);
  Real scale(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) scale = max(scale, abs(a[i][j]));
  const Real tol = scale * epsilon_bits(working_precision() + 4);
  for (int sweep = 0; sweep < 64; ++sweep) {
    Real off(0);
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off = max(off, abs(a[p][q]));
    if (off <= tol) break;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (a[p][q].is_zero()) continue;
        const Real theta = (a[q][q] - a[p][p]) / (Real(2) * a[p][q]);
        const Real t = Real(theta.sign() >= 0 ? 1 : -1) / (abs(theta) + sqrt(theta * theta + Real(1)));
        const Real c = Real(1) / sqrt(t * t + Real(1));
        const Real s = t * c;
        for (int k = 0; k < 4; ++k) {
          const Real akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          const Real apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 4; ++k) {
          const Real vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&a](int i, int j) { return a[i][i] < a[j][j]; });
  std::array<Real, 4> values;
  Sym4 vectors;
  for (int c = 0; c < 4; ++c) {
    values[c] = a[order[c]][order[c]];
    for (int r = 0; r < 4; ++r) vectors[r][c] = v[r][order[c]];
  }
  return {values, vectors};
}

}  // namespace detail

/// Hermitian H (unit Frobenius norm) with M^* H M = H for M in {A, B}. The
/// kernel of the stacked 8x4 real system must be exactly one-dimensional:
/// smallest singular value < 1e-10 * largest, second smallest > 1e-6 * largest.
inline InvariantFormResult invariant_form(const Mat2C& A, const Mat2C& B) {
  using detail::Sym4;
  std::array<std::array<Real, 4>, 8> L;
  for (int col = 0; col < 4; ++col) {
    const Mat2C E = detail::hermitian_basis(col);
    int row = 0;
    for (const Mat2C* M : {&A, &B}) {
      const auto coords = detail::hermitian_coords(detail::conj_transpose(*M) * E * *M - E);
      for (const Real& c : coords) L[row++][col] = c;
    }
  }
  Sym4 normal;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Real acc(0);
      for (int r = 0; r < 8; ++r) acc += L[r][i] * L[r][j];
      normal[i][j] = acc;
    }
  }
  auto [values, vectors] = detail::jacobi_eigen(normal);
  InvariantFormResult out;
  for (int i = 0; i < 4; ++i) out.singular_values[i] = sqrt(max(values[i], Real(0)));
  const Real& largest = out.singular_values[3];
  if (largest.is_zero()) {
    out.message = "both generators preserve every Hermitian form";
    return out;
  }
  if (!(out.singular_values[0] < Real(1e-10) * largest)) {
    out.message = "no invariant Hermitian form";
    return out;
  }
  if (!(out.singular_values[1] > Real(1e-6) * largest)) {
    out.message = "invariant forms span more than one dimension (reducible representation)";
    return out;
  }
  HermitianForm h{vectors[0][0], vectors[1][0], Complex(vectors[2][0], vectors[3][0])};
  const Real f = h.frobenius();
  h.h11 /= f;
  h.h22 /= f;
  h.h12 = Complex(h.h12.re / f, h.h12.im / f);
  out.form = std::move(h);
  out.status = FormStatus::ok;
  return out;
}

struct Signature {
  int positive = 0;
  int negative = 0;
  bool conclusive = false;
  Real eigen_plus, eigen_minus;  // descending
};

/// Inertia of a 2x2 Hermitian matrix; eigenvalues within 1e-12 * ||H||_F of
/// zero make it inconclusive.
inline Signature signature(const HermitianForm& H) {
  Signature s;
  const Real mean = ldexp(H.h11 + H.h22, -1);
  const Real half_diff = ldexp(H.h11 - H.h22, -1);
  const Real radius = sqrt(half_diff * half_diff + norm(H.h12));
  s.eigen_plus = mean + radius;
  s.eigen_minus = mean - radius;
  const Real tol = Real(1e-12) * H.frobenius();
  if (abs(s.eigen_plus) <= tol || abs(s.eigen_minus) <= tol) return s;
  s.conclusive = true;
  s.positive = (s.eigen_plus.sign() > 0) + (s.eigen_minus.sign() > 0);
  s.negative = 2 - s.positive;
  return s;
}

enum class ConjugationStatus { ok, ill_conditioned, wrong_signature };

struct SU11Witness {
  ConjugationStatus status = ConjugationStatus::wrong_signature;
  Mat2C P;
  Mat2C A_image, B_image;
  Real residual;
};

/// Deviation of M = [[u, v], [w, z]] from z = conj(u), w = conj(v), |u|^2 - |v|^2 = 1.
inline Real su11_membership_residual(const Mat2C& m) {
  return max(max(abs(m.d - conj(m.a)), abs(m.c - conj(m.b))), abs(norm(m.a) - norm(m.b) - Real(1)));
}

inline SU11Witness conjugate_to_su11(const Mat2C& A, const Mat2C& B, const HermitianForm& H) {
  SU11Witness w;
  const Signature sig = signature(H);
  if (!sig.conclusive || sig.positive != 1 || sig.negative != 1) return w;
  const Real& lp = sig.eigen_plus;
  const Real& lm = sig.eigen_minus;
  if (abs(lp) / abs(lm) > Real(1e24) || abs(lm) / abs(lp) > Real(1e24)) {
    w.status = ConjugationStatus::ill_conditioned;
    return w;
  }
  // Unitary U with H = U diag(lp, lm) U^*.
  Mat2C U;
  if (H.h12.re.is_zero() && H.h12.im.is_zero()) {
    U = H.h11.sign() > 0 ? Mat2C::identity() : Mat2C{Complex(0), Complex(1), Complex(1), Complex(0)};
  } else {
    auto column = [&H](const Real& lambda) {
      Complex v1 = H.h12;
      Complex v2(lambda - H.h11);
      const Real len = sqrt(norm(v1) + norm(v2));
      return std::pair<Complex, Complex>{Complex(v1.re / len, v1.im / len), Complex(v2.re / len, v2.im / len)};
    };
    auto [p1, p2] = column(lp);
    auto [m1, m2] = column(lm);
    U = {p1, m1, p2, m2};
  }
  // P = diag(sqrt(lp), sqrt(|lm|)) U^*.
  const Mat2C Ustar = detail::conj_transpose(U);
  const Real sp = sqrt(lp), sm = sqrt(abs(lm));
  w.P = {Ustar.a * Complex(sp), Ustar.b * Complex(sp), Ustar.c * Complex(sm), Ustar.d * Complex(sm)};
  const Complex det = w.P.det();
  const Mat2C adj = w.P.adjugate();
  const Mat2C Pinv{adj.a / det, adj.b / det, adj.c / det, adj.d / det};
  w.A_image = w.P * A * Pinv;
  w.B_image = w.P * B * Pinv;
  w.residual = max(su11_membership_residual(w.A_image), su11_membership_residual(w.B_image));
  w.status = ConjugationStatus::ok;
  return w;
}

/// min(||A^r - I||, ||A^r + I||) in the max-entry norm.
inline Real meridian_power_check(const Mat2C& A, long r) {
  const Mat2C Ar = power(A, r);
  const Mat2C I = Mat2C::identity();
  return min(max_abs(Ar - I), max_abs(Ar + I));
}

}  // namespace twistcert
