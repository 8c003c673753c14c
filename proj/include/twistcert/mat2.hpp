#pragma once

#include <utility>

namespace twistcert {

/// 2x2 matrix over any commutative ring type constructible from int.
template <class T>
struct Mat2 {
  T a{0}, b{0};
  T c{0}, d{0};

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

  T trace() const { return a + d; }
  T det() const { return a * d - b * c; }
  /// Inverse of a unit-determinant matrix.
  Mat2 adjugate() const { return {d, -b, -c, a}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

/// M^e for e >= 0 by repeated squaring.
template <class T>
Mat2<T> power(Mat2<T> base, long e) {
  Mat2<T> acc = Mat2<T>::identity();
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

/// M^n for any integer n, using the adjugate for negative powers (det M = 1).
template <class T>
Mat2<T> unimodular_power(const Mat2<T>& m, long n) {
  return n >= 0 ? power(m, n) : power(m.adjugate(), -n);
}

}  // namespace twistcert
