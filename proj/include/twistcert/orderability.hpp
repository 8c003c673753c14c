#pragma once

// Branched-cover thresholds for J(k, 2n), real root selection and audits for
// the Riley polynomial, and certificates for the hypothesis of Hu's criterion:
// a non-abelian SU(1,1) representation with rho(meridian)^r = +-I.

#include "twistcert/knots.hpp"
#include "twistcert/riley.hpp"
#include "twistcert/roots.hpp"
#include "twistcert/su11.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistcert {

// Certificate gates.
inline constexpr double kPhiTolerance = 1e-10;
inline constexpr double kRelationTolerance = 1e-9;
inline constexpr double kSu11Tolerance = 1e-8;
inline constexpr double kMeridianTolerance = 1e-10;
inline constexpr double kNonAbelianMin = 1e-6;
inline constexpr double kIntegerThresholdSlack = 1e-9;
inline constexpr double kAuditMargin = 1e-9;

struct ThresholdReport {
  DoubleTwistKnot knot;  // normalized
  KnotCase tag = KnotCase::Trivial;
  int m = 0;
  std::string rule;                     // "arccos(4mn)", "arccos(q)", "max(arccos(q),4m+2)", "known_non_orderable"
  std::optional<double> q_or_4mn;
  std::optional<double> arccos_threshold;  // pi / arccos(sqrt(1 - 1/q))
  std::optional<double> threshold;         // after combining with 4m+2 where required
  std::optional<long> r_min;               // smallest integer strictly above threshold
  bool known_non_orderable = false;
  std::vector<std::string> notes;
};

namespace detail {
/// pi / arccos(sqrt(1 - 1/q)) at the working precision.
inline Real arccos_threshold(const Real& q) { return pi() / acos(sqrt(Real(1) - Real(1) / q)); }

inline Real odd_q(int m, int n_abs) {
  return Real(2L * n_abs * n_abs) + Real(2L * n_abs) * sqrt(Real(4L * m * (m + 1) + 1L * n_abs * n_abs));
}
}  // namespace detail

inline ThresholdReport threshold(const DoubleTwistKnot& input) {
  const KnotClass cls = classify(input);
  if (cls.tag == KnotCase::Trivial) {
    throw std::invalid_argument("threshold: " + input.name() + " is the trivial knot");
  }
  PrecisionScope scope(kDefaultPrecisionBits);
  ThresholdReport rep;
  rep.knot = cls.knot;
  rep.tag = cls.tag;
  rep.m = cls.m;
  if (cls.mirrored) rep.notes.push_back("mirror image taken to make k > 0; thresholds agree for mirrors");
  if (cls.knot.rewritten) rep.notes.push_back("J(2m+1,2) rewritten as the isotopic J(2m,-2)");
  if (cls.known_non_orderable()) {
    rep.known_non_orderable = true;
    rep.rule = "known_non_orderable";
    rep.notes.push_back("J(2m,-2n): branched covers are known not to be left-orderable for every r > 1 "
                        "(cited result, not computed)");
    return rep;
  }
  const int n_abs = std::abs(cls.knot.n);
  Real q;
  bool with_floor = false;
  switch (cls.tag) {
    case KnotCase::EvenK_PosN:
      q = Real(4L * cls.m * cls.knot.n);
      rep.rule = "arccos(4mn)";
      break;
    case KnotCase::OddK_PosN_EvenN:
    case KnotCase::OddK_NegN_OddN:
      q = detail::odd_q(cls.m, n_abs);
      rep.rule = "arccos(q)";
      break;
    case KnotCase::OddK_PosN_OddN:
    case KnotCase::OddK_NegN_EvenN:
      q = detail::odd_q(cls.m, n_abs);
      rep.rule = "max(arccos(q),4m+2)";
      with_floor = true;
      break;
    default:
      throw std::logic_error("threshold: unhandled knot case");
  }
  const Real t_arccos = detail::arccos_threshold(q);
  Real t = t_arccos;
  const Real floor_term(4L * cls.m + 2);
  if (with_floor && floor_term > t) t = floor_term;
  rep.q_or_4mn = q.to_double();
  rep.arccos_threshold = t_arccos.to_double();
  rep.threshold = t.to_double();

  const Real nearest = floor(t + Real(0.5));
  if (abs(t - nearest) <= Real(kIntegerThresholdSlack)) {
    rep.r_min = static_cast<long>(nearest.to_double()) + 1;
    if (!(with_floor && t == floor_term)) {
      rep.notes.push_back("threshold is within 1e-9 of an integer; the inequality is strict so that integer is excluded");
    }
  } else {
    rep.r_min = static_cast<long>(floor(t).to_double()) + 1;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Roots of phi(x, .)

inline IntervalPoly interval_coefficients_in_y(const IntPolyXY& p, const Real& x) {
  const int dy = p.degree_second();
  IntervalPoly out(static_cast<std::size_t>(std::max(dy, 0) + 1), Interval(0));
  const Interval xi(x);
  for (const auto& [e, c] : p.terms()) {
    Interval term(c);
    for (int i = 0; i < e.first; ++i) term = term * xi;
    out[static_cast<std::size_t>(e.second)] += term;
  }
  return out;
}

/// x = 2 cos(pi / r) at the working precision.
inline Real meridian_trace(long r) { return Real(2) * cos(pi() / Real(r)); }

enum class RootStatus { found, none, inconclusive };

struct RootSelection {
  RootStatus status = RootStatus::inconclusive;
  Real x;
  Real y;
  long precision = 0;
};

/// Smallest real root y > 2 of phi(2cos(pi/r), y), refined to the working precision.
inline RootSelection root_select_at(const RileyData& riley, long r, long precision) {
  if (r < 2) throw std::invalid_argument("root_select: r must be >= 2");
  PrecisionScope scope(precision);
  RootSelection out;
  out.precision = precision;
  out.x = meridian_trace(r);
  const IntervalPoly g = interval_coefficients_in_y(riley.phi_poly, out.x);
  const RootIsolation iso = isolate_real_roots(g, Real(2));
  if (iso.status != IsolationStatus::ok) return out;
  if (iso.roots.empty()) {
    out.status = RootStatus::none;
    return out;
  }
  out.y = iso.roots.front().value;
  out.status = RootStatus::found;
  return out;
}

/// As root_select_at, doubling precision on inconclusive isolation up to 1024 bits.
inline RootSelection root_select(const DoubleTwistKnot& K, long r, long precision = kDefaultPrecisionBits) {
  const RileyData riley = riley_poly(K);
  RootSelection out;
  for (long bits = precision;; bits *= 2) {
    out = root_select_at(riley, r, bits);
    if (out.status != RootStatus::inconclusive || bits >= kMaxPrecisionBits) return out;
  }
}

/// |x| bound above which every real root of phi(x, .) exceeds 2.
inline Real root_location_bound(const DoubleTwistKnot& K) {
  const long m = K.m();
  const long n_abs = std::abs(K.n);
  const Real q = K.even_k() ? Real(4L * m * n_abs) : detail::odd_q(static_cast<int>(m), static_cast<int>(n_abs));
  return Real(2) * sqrt(Real(1) - Real(1) / q);
}

struct RootAudit {
  bool conclusive = false;
  bool all_above_two = false;
  std::vector<Real> roots;  // all real roots of phi(x, .), ascending
  int roots_at_or_below_two = 0;
  Real min_margin;  // min(root) - 2 when roots exist
  Real bound;
  long precision = 0;
};

/// Complete real-root isolation of phi(x, .) checking that every real root exceeds 2.
/// Requires bound + 1e-9 < |x| <= 2.
inline RootAudit root_location_audit(const DoubleTwistKnot& K, const Real& x, long precision = kDefaultPrecisionBits) {
  const RileyData riley = riley_poly(K);
  RootAudit audit;
  for (long bits = precision;; bits *= 2) {
    PrecisionScope scope(bits);
    audit = RootAudit{};
    audit.precision = bits;
    audit.bound = root_location_bound(K);
    const Real ax = abs(x);
    if (ax > Real(2) || !(ax > audit.bound + Real(kAuditMargin))) {
      throw std::invalid_argument("root_location_audit: need bound + 1e-9 < |x| <= 2 (bound " +
                                  audit.bound.to_string(17) + ", x " + x.to_string(17) + ")");
    }
    const IntervalPoly g = interval_coefficients_in_y(riley.phi_poly, x);
    const RootIsolation all = isolate_real_roots(g);
    auto chain = SturmChain::build(g);
    std::optional<int> v_two = chain ? chain->variations_at(Real(2)) : std::nullopt;
    if (all.status == IsolationStatus::ok && v_two) {
      audit.conclusive = true;
      for (const auto& root : all.roots) audit.roots.push_back(root.value);
      audit.roots_at_or_below_two = chain->variations_at_infinity(false) - *v_two;
      audit.all_above_two = audit.roots_at_or_below_two == 0;
      if (!audit.roots.empty()) audit.min_margin = audit.roots.front() - Real(2);
      return audit;
    }
    if (bits >= kMaxPrecisionBits) return audit;
  }
}

// ---------------------------------------------------------------------------
// Certificates

enum class Verdict { certified, no_certificate, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::no_certificate: return "no_certificate";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

inline Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::certified, Verdict::no_certificate, Verdict::inconclusive})
    if (s == to_string(v)) return v;
  throw std::invalid_argument("unknown verdict: " + s);
}

struct Certificate {
  DoubleTwistKnot knot;  // normalized
  long r = 0;
  double x = 0;
  std::optional<double> y;
  std::string y_decimal;  // y at full working precision
  std::optional<double> phi_residual;
  std::optional<double> relation_residual;
  std::optional<double> commutator_distance;
  int signature_pos = 0;
  int signature_neg = 0;
  std::optional<double> su11_residual;
  std::optional<double> meridian_residual;
  long precision_bits = 0;
  std::optional<bool> above_threshold;
  bool known_non_orderable = false;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::string> notes;

  double max_residual() const {
    double worst = 0;
    for (const auto& v : {phi_residual, relation_residual, su11_residual, meridian_residual})
      if (v) worst = std::max(worst, *v);
    return worst;
  }
};

namespace detail {

enum class Attempt { done, retry };

inline Attempt certify_at(const RileyData& riley, Certificate& cert, long bits) {
  PrecisionScope scope(bits);
  cert.precision_bits = bits;
  const RootSelection sel = root_select_at(riley, cert.r, bits);
  cert.x = sel.x.to_double();
  if (sel.status == RootStatus::inconclusive) {
    cert.notes.push_back("root isolation inconclusive at " + std::to_string(bits) + " bits");
    return Attempt::retry;
  }
  if (sel.status == RootStatus::none) {
    cert.verdict = Verdict::no_certificate;
    cert.notes.push_back("phi(2cos(pi/r), y) has no real root y > 2");
    return Attempt::done;
  }
  cert.y = sel.y.to_double();
  cert.y_decimal = sel.y.to_string();
  const Real phi = eval_poly(riley.phi_poly, sel.x, sel.y, bits);
  cert.phi_residual = abs(phi).to_double();

  const ReprPoint pt{meridian_eigenvalue(cert.r), Complex(sel.y)};
  const auto [A, B] = build_rep(pt);
  cert.relation_residual = relation_residual(riley.knot, pt).to_double();
  cert.commutator_distance = commutator_distance(A, B).to_double();

  const InvariantFormResult form = invariant_form(A, B);
  if (form.status != FormStatus::ok) {
    cert.notes.push_back("invariant form: " + form.message);
    return Attempt::retry;
  }
  const Signature sig = signature(form.form);
  if (!sig.conclusive) {
    cert.notes.push_back("Hermitian signature inconclusive");
    return Attempt::retry;
  }
  cert.signature_pos = sig.positive;
  cert.signature_neg = sig.negative;
  if (sig.positive != 1 || sig.negative != 1) {
    cert.verdict = Verdict::no_certificate;
    cert.notes.push_back("invariant form is definite: representation is SU(2), not SU(1,1)");
    return Attempt::done;
  }
  const SU11Witness w = conjugate_to_su11(A, B, form.form);
  if (w.status != ConjugationStatus::ok) {
    cert.notes.push_back("conjugation into SU(1,1) ill-conditioned");
    return Attempt::retry;
  }
  cert.su11_residual = w.residual.to_double();
  cert.meridian_residual = meridian_power_check(w.A_image, cert.r).to_double();

  const bool gates = *cert.phi_residual < kPhiTolerance && sel.y > Real(2) &&
                     *cert.relation_residual < kRelationTolerance &&
                     *cert.commutator_distance > kNonAbelianMin && *cert.su11_residual < kSu11Tolerance &&
                     *cert.meridian_residual < kMeridianTolerance;
  if (!gates) {
    cert.notes.push_back("residual gate failed at " + std::to_string(bits) + " bits");
    return Attempt::retry;
  }
  cert.verdict = Verdict::certified;
  return Attempt::done;
}

}  // namespace detail

/// Run the full witness pipeline for (K, r). A certified verdict means the
/// hypothesis of Hu's criterion holds for the r-fold cyclic branched cover;
/// other verdicts never claim non-left-orderability.
inline Certificate certify(const DoubleTwistKnot& input, long r, long precision = kDefaultPrecisionBits) {
  if (r < 2) throw std::invalid_argument("certify: r must be >= 2");
  const ThresholdReport th = threshold(input);
  Certificate cert;
  cert.knot = th.knot;
  cert.r = r;
  cert.notes = th.notes;
  cert.precision_bits = precision;
  if (th.known_non_orderable) {
    cert.known_non_orderable = true;
    cert.verdict = Verdict::no_certificate;
    {
      PrecisionScope scope(precision);
      cert.x = meridian_trace(r).to_double();
    }
    return cert;
  }
  cert.above_threshold = r >= *th.r_min;
  const RileyData riley = riley_poly(th.knot);
  const std::size_t base_notes = cert.notes.size();
  for (long bits = precision;; bits *= 2) {
    cert.notes.resize(base_notes);
    if (detail::certify_at(riley, cert, bits) == detail::Attempt::done) return cert;
    if (bits >= kMaxPrecisionBits) {
      cert.verdict = Verdict::inconclusive;
      return cert;
    }
  }
}

}  // namespace twistcert
