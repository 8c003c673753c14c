#include "twistcert/reps.hpp"

#include <gtest/gtest.h>

#include <random>

namespace twistcert {
namespace {

const Complex I_UNIT(Real(0), Real(1));

TEST(BuildRep, Examples) {
  PrecisionScope scope(128);
  auto [A, B] = build_rep({Complex(1), Complex(2)});
  EXPECT_EQ(A, (Mat2C{Complex(1), Complex(1), Complex(0), Complex(1)}));
  EXPECT_EQ(B, Mat2C::identity());

  auto [Ai, Bi] = build_rep({I_UNIT, Complex(3)});
  EXPECT_EQ(Ai, (Mat2C{I_UNIT, Complex(1), Complex(0), -I_UNIT}));
  EXPECT_EQ(Bi, (Mat2C{I_UNIT, Complex(0), Complex(-1), -I_UNIT}));
  EXPECT_THROW(build_rep({Complex(0), Complex(1)}), std::invalid_argument);
}

TEST(BuildRep, TraceAndDeterminant) {
  PrecisionScope scope(128);
  const Complex s(Real(0.3), Real(-1.2));
  auto [A, B] = build_rep({s, Complex(Real(2.7), Real(0.4))});
  EXPECT_LT(abs(A.trace() - (s + Complex(1) / s)).to_double(), 1e-35);
  EXPECT_LT(abs(A.det() - Complex(1)).to_double(), 1e-35);
  EXPECT_LT(abs(B.det() - Complex(1)).to_double(), 1e-35);
}

TEST(EvalWord, ShortWords) {
  PrecisionScope scope(128);
  auto [A, B] = build_rep({Complex::polar_unit(Real(0.4)), Complex(Real(2.5))});
  const Mat2C w2 = eval_word(DoubleTwistKnot::raw(2, 1), A, B);
  const Mat2C expected = B * A.adjugate() * B.adjugate() * A;
  EXPECT_LT(max_abs(w2 - expected).to_double(), 1e-35);
  EXPECT_LT(max_abs(eval_word(DoubleTwistKnot::raw(1, 1), A, B) - B * A).to_double(), 1e-35);
}

// tr W agrees with lambda(x, y) for random real (x, y).
TEST(EvalWord, TraceMatchesLambda) {
  PrecisionScope scope(128);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> th(0.05, 3.0), yd(-3.0, 4.0);
  for (int k = 1; k <= 6; ++k) {
    const DoubleTwistKnot K = DoubleTwistKnot::raw(k, 1);
    const IntPolyXY lambda = lambda_poly(K);
    for (int i = 0; i < 20; ++i) {
      const Real theta(th(rng)), y(yd(rng));
      const Complex s = Complex::polar_unit(theta);
      auto [A, B] = build_rep({s, Complex(y)});
      const Complex tr = eval_word(K, A, B).trace();
      const Real expected = eval_poly(lambda, Real(2) * cos(theta), y, 128);
      EXPECT_LT(abs(tr - Complex(expected)).to_double(), 1e-9) << K.name();
      EXPECT_LT(abs(eval_word(K, A, B).det() - Complex(1)).to_double(), 1e-30);
    }
  }
}

TEST(RelationResidual, Examples) {
  PrecisionScope scope(128);
  const DoubleTwistKnot trefoil = DoubleTwistKnot::raw(2, 1);
  const Real x = Real(2) * cos(pi() / Real(7));
  const Real root = x * x - Real(1);
  const Complex s = Complex::polar_unit(pi() / Real(7));
  EXPECT_LT(relation_residual(trefoil, {s, Complex(root)}).to_double(), 1e-9);
  EXPECT_GT(relation_residual(trefoil, {s, Complex(root + Real(1))}).to_double(), 1e-3);
  // x = 0, y = 2: phi(0, 2) = -3, so the abelian point is not a solution.
  EXPECT_GT(relation_residual(trefoil, {Complex(Real(0), Real(1)), Complex(2)}).to_double(), 1e-3);
}

TEST(RelationResidual, SmallWhenPhiSmall) {
  PrecisionScope scope(128);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> th(0.1, 3.0), yd(-2.0, 4.0);
  for (int k = 1; k <= 5; ++k) {
    for (int n : {-2, -1, 1, 2}) {
      const DoubleTwistKnot K = DoubleTwistKnot::raw(k, n);
      const IntPolyXY phi = riley_poly(K).phi_poly;
      for (int i = 0; i < 10; ++i) {
        // A point on the curve: solve phi(x, .) by bisection-free shortcut at a
        // linear factor is unavailable in general, so test the contrapositive:
        // residual is large whenever |phi| is not small, and vice versa the
        // bound residual <= C |phi| on bounded regions.
        const Real theta(th(rng)), y(yd(rng));
        const Real x = Real(2) * cos(theta);
        const Real ph = abs(eval_poly(phi, x, y, 128));
        const Real res = relation_residual(K, {Complex::polar_unit(theta), Complex(y)});
        EXPECT_LE(res.to_double(), 1e6 * ph.to_double() + 1e-30) << K.name();
      }
    }
  }
}

TEST(Commutator, NonAbelianOffTwo) {
  PrecisionScope scope(128);
  for (double y : {-1.0, 0.5, 1.99, 2.01, 3.5}) {
    auto [A, B] = build_rep({Complex::polar_unit(Real(0.3)), Complex(Real(y))});
    EXPECT_GT(commutator_distance(A, B).to_double(), 1e-6) << y;
  }
  // y = 2 alone is reducible but not abelian; with s = 1 as well, B = I.
  auto [A, B] = build_rep({Complex::polar_unit(Real(0.3)), Complex(2)});
  EXPECT_GT(commutator_distance(A, B).to_double(), 1e-6);
  auto [A1, B1] = build_rep({Complex(1), Complex(2)});
  EXPECT_LT(commutator_distance(A1, B1).to_double(), 1e-30);
}

}  // namespace
}  // namespace twistcert
