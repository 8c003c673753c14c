#include "twistcert/orderability.hpp"

#include <gtest/gtest.h>

namespace twistcert {
namespace {

Mat2C rotation(double t) {
  return {Complex(Real(std::cos(t))), Complex(Real(-std::sin(t))), Complex(Real(std::sin(t))), Complex(Real(std::cos(t)))};
}

TEST(InvariantForm, CommutingRotationsAreDegenerate) {
  PrecisionScope scope(128);
  const InvariantFormResult f = invariant_form(rotation(0.3), rotation(0.7));
  EXPECT_EQ(f.status, FormStatus::degenerate);
  EXPECT_FALSE(f.message.empty());
}

TEST(Signature, Examples) {
  PrecisionScope scope(128);
  const Signature mixed = signature({Real(1), Real(-1), Complex(0)});
  EXPECT_TRUE(mixed.conclusive);
  EXPECT_EQ(mixed.positive, 1);
  EXPECT_EQ(mixed.negative, 1);
  const Signature id = signature({Real(1), Real(1), Complex(0)});
  EXPECT_EQ(id.positive, 2);
  EXPECT_EQ(id.negative, 0);
  const Signature singular = signature({Real(1), Real(1), Complex(1)});
  EXPECT_FALSE(singular.conclusive);
  const Signature off = signature({Real(0), Real(0), Complex(Real(0), Real(1))});
  EXPECT_EQ(off.positive, 1);
  EXPECT_EQ(off.negative, 1);
}

TEST(Conjugation, SU11InputNeedsNoChange) {
  PrecisionScope scope(128);
  const Real c(1.25), s(0.75);  // c^2 - s^2 = 1
  const Mat2C A{Complex::polar_unit(Real(0.5)), Complex(0), Complex(0), Complex::polar_unit(Real(-0.5))};
  const Mat2C B{Complex(c), Complex(s), Complex(s), Complex(c)};
  ASSERT_LT(su11_membership_residual(A).to_double(), 1e-30);
  ASSERT_LT(su11_membership_residual(B).to_double(), 1e-30);
  const InvariantFormResult f = invariant_form(A, B);
  ASSERT_EQ(f.status, FormStatus::ok);
  // Form is a multiple of diag(1, -1); the sign is arbitrary.
  HermitianForm H = f.form;
  if (H.h11.sign() < 0) H = {-H.h11, -H.h22, Complex(-H.h12.re, -H.h12.im)};
  const SU11Witness w = conjugate_to_su11(A, B, H);
  ASSERT_EQ(w.status, ConjugationStatus::ok);
  EXPECT_LT(w.residual.to_double(), 1e-30);
  // P is a positive multiple of I (up to a diagonal phase).
  EXPECT_LT(abs(w.P.b).to_double(), 1e-30);
  EXPECT_LT(abs(w.P.c).to_double(), 1e-30);
  EXPECT_LT(abs(abs(w.P.a) - abs(w.P.d)).to_double(), 1e-30);
}

struct WitnessCase {
  int k, n;
  long r;
};

class KnotWitness : public ::testing::TestWithParam<WitnessCase> {};

TEST_P(KnotWitness, ConjugatesIntoSU11) {
  const auto [k, n, r] = GetParam();
  const DoubleTwistKnot K = DoubleTwistKnot::raw(k, n);
  const RootSelection sel = root_select(K, r);
  ASSERT_EQ(sel.status, RootStatus::found);
  PrecisionScope scope(sel.precision);
  const auto [A, B] = build_rep({meridian_eigenvalue(r), Complex(sel.y)});
  const InvariantFormResult f = invariant_form(A, B);
  ASSERT_EQ(f.status, FormStatus::ok) << f.message;
  EXPECT_LT(f.singular_values[0].to_double(), 1e-10 * f.singular_values[3].to_double());
  EXPECT_GT(f.singular_values[1].to_double(), 1e-6 * f.singular_values[3].to_double());
  const Signature sig = signature(f.form);
  ASSERT_TRUE(sig.conclusive);
  EXPECT_EQ(sig.positive, 1);
  EXPECT_EQ(sig.negative, 1);
  const SU11Witness w = conjugate_to_su11(A, B, f.form);
  ASSERT_EQ(w.status, ConjugationStatus::ok);
  EXPECT_LT(w.residual.to_double(), 1e-8);
  EXPECT_LT(abs(w.A_image.trace() - A.trace()).to_double(), 1e-30);
  EXPECT_LT(abs(w.B_image.trace() - B.trace()).to_double(), 1e-30);
  EXPECT_LT(meridian_power_check(w.A_image, r).to_double(), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Examples, KnotWitness,
                         ::testing::Values(WitnessCase{2, 1, 7}, WitnessCase{4, 1, 9}, WitnessCase{4, 2, 13},
                                           WitnessCase{3, -1, 9}, WitnessCase{3, 2, 15}, WitnessCase{3, 3, 21}));

// With x = 2cos(pi/5), real y in (x^2 - 2, 2) gives an SU(2) pair (definite
// form) while y below x^2 - 2 is still SU(1,1).
TEST(Witness, EllipticPointHasDefiniteForm) {
  PrecisionScope scope(128);
  const auto [A, B] = build_rep({meridian_eigenvalue(5), Complex(Real(1.0))});
  const InvariantFormResult f = invariant_form(A, B);
  ASSERT_EQ(f.status, FormStatus::ok);
  const Signature sig = signature(f.form);
  ASSERT_TRUE(sig.conclusive);
  EXPECT_EQ(sig.positive + sig.negative, 2);
  EXPECT_NE(sig.positive, 1);
  EXPECT_EQ(conjugate_to_su11(A, B, f.form).status, ConjugationStatus::wrong_signature);

  const auto [A2, B2] = build_rep({meridian_eigenvalue(5), Complex(Real(0.5))});
  const Signature mixed = signature(invariant_form(A2, B2).form);
  EXPECT_EQ(mixed.positive, 1);
  EXPECT_EQ(mixed.negative, 1);
}

TEST(MeridianCheck, Examples) {
  PrecisionScope scope(128);
  for (long r : {2L, 5L, 11L}) {
    auto [A, B] = build_rep({Complex(1), Complex(3)});
    // A^r = [[1, r], [0, 1]]: both A^r - I and A^r + I have an entry of size r.
    EXPECT_EQ(meridian_power_check(A, r).to_double(), static_cast<double>(r));
    if (r == 2) continue;  // s = -1 makes A parabolic
    auto [Ar, Br] = build_rep({Complex::polar_unit(Real(2) * pi() / Real(r)), Complex(3)});
    EXPECT_LT(max_abs(power(Ar, r) - Mat2C::identity()).to_double(), 1e-30) << r;
  }
}

}  // namespace
}  // namespace twistcert
