#pragma once

// Double twist knots J(k, 2n): normalization, Schubert form b(p, q) and the
// case split used when computing branched-cover thresholds.

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace twistcert {

struct DoubleTwistKnot {
  int k = 0;
  int n = 0;  // the knot is J(k, 2n)
  bool mirrored = false;
  bool swapped = false;
  bool rewritten = false;  // J(2m+1, 2) replaced by J(2m, -2)

  static DoubleTwistKnot raw(int k, int n) { return DoubleTwistKnot{k, n}; }

  int l() const { return 2 * n; }
  int m() const { return k / 2; }
  bool even_k() const { return k % 2 == 0; }
  /// J(k, 0), J(0, l) and J(1, 2) are unknots.
  bool is_trivial() const { return k == 0 || n == 0 || (k == 1 && n == 1); }

  std::string name() const { return "J(" + std::to_string(k) + "," + std::to_string(l()) + ")"; }

  friend bool operator==(const DoubleTwistKnot&, const DoubleTwistKnot&) = default;
};

struct TwoBridgeForm {
  long p = 0;
  long q = 0;  // 0 < q < p

  std::string name() const { return "b(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
  friend bool operator==(const TwoBridgeForm&, const TwoBridgeForm&) = default;
};

enum class KnotCase {
  EvenK_PosN,
  EvenK_NegN,
  OddK_PosN_EvenN,
  OddK_PosN_OddN,
  OddK_NegN_OddN,
  OddK_NegN_EvenN,
  Trivial,
};

inline const char* to_string(KnotCase c) {
  switch (c) {
    case KnotCase::EvenK_PosN: return "EvenK_PosN";
    case KnotCase::EvenK_NegN: return "EvenK_NegN";
    case KnotCase::OddK_PosN_EvenN: return "OddK_PosN_EvenN";
    case KnotCase::OddK_PosN_OddN: return "OddK_PosN_OddN";
    case KnotCase::OddK_NegN_OddN: return "OddK_NegN_OddN";
    case KnotCase::OddK_NegN_EvenN: return "OddK_NegN_EvenN";
    case KnotCase::Trivial: return "Trivial";
  }
  return "?";
}

inline KnotCase knot_case_from_string(const std::string& s) {
  for (KnotCase c : {KnotCase::EvenK_PosN, KnotCase::EvenK_NegN, KnotCase::OddK_PosN_EvenN,
                     KnotCase::OddK_PosN_OddN, KnotCase::OddK_NegN_OddN, KnotCase::OddK_NegN_EvenN,
                     KnotCase::Trivial}) {
    if (s == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown knot case: " + s);
}

struct KnotClass {
  KnotCase tag = KnotCase::Trivial;
  int m = 0;
  bool mirrored = false;
  DoubleTwistKnot knot;

  /// Cyclic branched covers of J(2m, -2n) are known to have non-left-orderable
  /// fundamental group for every r > 1 (a cited result, not computed here).
  bool known_non_orderable() const { return tag == KnotCase::EvenK_NegN; }
};

namespace detail {
inline DoubleTwistKnot normalize_impl(int k, int l, DoubleTwistKnot flags) {
  if ((k % 2 != 0) && (l % 2 != 0)) {
    throw std::invalid_argument("J(" + std::to_string(k) + "," + std::to_string(l) +
                                ") has k*l odd: it is a two-component link, not a knot");
  }
  if (k == 0 || l == 0) return DoubleTwistKnot{k, l / 2, flags.mirrored, flags.swapped, flags.rewritten};
  if (l % 2 != 0) {
    std::swap(k, l);
    flags.swapped = true;
  }
  if (k < 0) {
    k = -k;
    l = -l;
    flags.mirrored = !flags.mirrored;
  }
  if (k % 2 == 1 && k >= 3 && l == 2) {
    k -= 1;
    l = -2;
    flags.rewritten = true;
  }
  return DoubleTwistKnot{k, l / 2, flags.mirrored, flags.swapped, flags.rewritten};
}
}  // namespace detail

/// Canonical J(k, 2n) with k > 0: even entry moved to the second slot, mirror
/// applied when k < 0, and J(2m+1, 2) rewritten as J(2m, -2).
/// Throws std::invalid_argument when k*l is odd.
inline DoubleTwistKnot normalize(int k, int l) { return detail::normalize_impl(k, l, {}); }

/// Re-normalizes an existing knot, keeping its provenance flags.
inline DoubleTwistKnot normalize(const DoubleTwistKnot& K) { return detail::normalize_impl(K.k, K.l(), K); }

/// p = |2kn - 1| without reduction; 1 for J(1, 2).
inline long bridge_determinant(const DoubleTwistKnot& K) {
  return std::labs(2L * K.k * K.n - 1);
}

inline TwoBridgeForm schubert_form(const DoubleTwistKnot& K) {
  if (K.k <= 0) throw std::invalid_argument("schubert_form: expects k > 0, got " + K.name());
  if (K.is_trivial()) throw std::invalid_argument("schubert_form: " + K.name() + " is the trivial knot");
  const long p = K.n > 0 ? 2L * K.k * K.n - 1 : 1 - 2L * K.k * K.n;
  long q = K.n > 0 ? 2L * K.n : -2L * K.n;
  // Convention: the raw second parameter can exceed p for small k.
  q %= p;
  return TwoBridgeForm{p, q};
}

inline KnotClass classify(const DoubleTwistKnot& input) {
  const DoubleTwistKnot K = normalize(input);
  KnotClass c;
  c.knot = K;
  c.mirrored = K.mirrored;
  c.m = K.k > 0 ? K.k / 2 : 0;
  if (K.is_trivial() || K.k < 0) {
    c.tag = KnotCase::Trivial;
    return c;
  }
  const bool n_even = K.n % 2 == 0;
  if (K.even_k()) {
    c.tag = K.n > 0 ? KnotCase::EvenK_PosN : KnotCase::EvenK_NegN;
  } else if (K.n > 0) {
    c.tag = n_even ? KnotCase::OddK_PosN_EvenN : KnotCase::OddK_PosN_OddN;
  } else {
    c.tag = n_even ? KnotCase::OddK_NegN_EvenN : KnotCase::OddK_NegN_OddN;
  }
  return c;
}

}  // namespace twistcert
