#pragma once

// Arbitrary precision real and complex scalars on top of MPFR.
//
// Every value created (or produced by arithmetic) takes the calling thread's
// working precision, set with a PrecisionScope. Values are plain RAII types and
// can be copied across scopes; arithmetic always rounds to the current scope.

#include <mpfr.h>

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace twistcert {

using Integer = boost::multiprecision::mpz_int;

inline constexpr long kDefaultPrecisionBits = 128;
inline constexpr long kMaxPrecisionBits = 1024;

namespace detail {
inline mpfr_prec_t& thread_precision() {
  thread_local mpfr_prec_t bits = kDefaultPrecisionBits;
  return bits;
}
}  // namespace detail

inline long working_precision() { return static_cast<long>(detail::thread_precision()); }

class PrecisionScope {
 public:
  explicit PrecisionScope(long bits) : saved_(detail::thread_precision()) {
    if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
      throw std::invalid_argument("precision out of range: " + std::to_string(bits));
    }
    detail::thread_precision() = static_cast<mpfr_prec_t>(bits);
  }
  ~PrecisionScope() { detail::thread_precision() = saved_; }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

class Real {
 public:
  Real() {
    mpfr_init2(v_, detail::thread_precision());
    mpfr_set_zero(v_, 1);
  }
  Real(int v) : Real(static_cast<long>(v)) {}
  Real(long v) {
    mpfr_init2(v_, detail::thread_precision());
    mpfr_set_si(v_, v, MPFR_RNDN);
  }
  Real(double v) {
    mpfr_init2(v_, detail::thread_precision());
    mpfr_set_d(v_, v, MPFR_RNDN);
  }
  explicit Real(const Integer& v) {
    mpfr_init2(v_, detail::thread_precision());
    mpfr_set_z(v_, v.backend().data(), MPFR_RNDN);
  }
  explicit Real(std::string_view decimal) {
    mpfr_init2(v_, detail::thread_precision());
    std::string s(decimal);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      throw std::invalid_argument("not a decimal number: " + s);
    }
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }
  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  // Decimal rendering with `digits` significant digits (0 = enough to round-trip).
  std::string to_string(int digits = 0) const {
    if (digits <= 0) digits = static_cast<int>(mpfr_get_prec(v_) * 0.30103) + 2;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  template <class Op>
  static Real unary(const Real& a, Op op) {
    Real r;
    op(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  template <class Op>
  static Real binary(const Real& a, const Real& b, Op op) {
    Real r;
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }
  Real& operator/=(const Real& o) { return *this = *this / o; }

  friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }
  friend Real operator-(const Real& a) { return unary(a, mpfr_neg); }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend std::ostream& operator<<(std::ostream& os, const Real& a) { return os << a.to_string(); }

 private:
  mpfr_t v_;
};

inline Real sqrt(const Real& a) { return Real::unary(a, mpfr_sqrt); }
inline Real abs(const Real& a) { return Real::unary(a, mpfr_abs); }
inline Real cos(const Real& a) { return Real::unary(a, mpfr_cos); }
inline Real sin(const Real& a) { return Real::unary(a, mpfr_sin); }
inline Real acos(const Real& a) { return Real::unary(a, mpfr_acos); }
inline Real hypot(const Real& a, const Real& b) { return Real::binary(a, b, mpfr_hypot); }
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return b < a ? b : a; }

inline Real pi() {
  Real r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

inline Real floor(const Real& a) {
  Real r;
  mpfr_floor(r.get(), a.get());
  return r;
}

inline Real ldexp(const Real& a, long e) {
  Real r;
  mpfr_mul_2si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}

// Neighbouring representable values at the value's own precision.
inline Real next_below(Real a) {
  mpfr_nextbelow(a.get());
  return a;
}
inline Real next_above(Real a) {
  mpfr_nextabove(a.get());
  return a;
}

// 2^-(bits) as a relative tolerance.
inline Real epsilon_bits(long bits) { return ldexp(Real(1), -bits); }

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(int v) : re(v), im(0) {}
  Complex(long v) : re(v), im(0) {}
  Complex(double v) : re(v), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Complex polar_unit(const Real& theta) { return {cos(theta), sin(theta)}; }

  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }

inline std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << "(" << z.re << ", " << z.im << ")";
}

// Precision from the environment, falling back to the library default.
inline long precision_from_env(const char* var = "TWISTCERT_PRECISION") {
  if (const char* v = std::getenv(var)) {
    char* end = nullptr;
    long bits = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && bits >= 53) return bits;
  }
  return kDefaultPrecisionBits;
}

}  // namespace twistcert
