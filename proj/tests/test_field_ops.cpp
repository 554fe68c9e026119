#include <gtest/gtest.h>

#include "folia/construct.hpp"
#include "folia/errors.hpp"
#include "folia/field_ops.hpp"
#include "folia/textio.hpp"
#include "support.hpp"

using namespace folia;
using namespace folia::testing;

namespace {

MultiPoly P2(const char* s) { return parse_poly(s, 2); }
MultiPoly P3(const char* s) { return parse_poly(s, 3); }

AffineVectorField eee_circle() { return AffineVectorField(P2("x^2+y^2-1 - (x-2)*2*y"), P2("x^2+y^2-1 + (x-2)*2*x")); }

}  // namespace

TEST(FieldOps, EeeCofactor) {
  AffineVectorField X = eee_circle();
  MultiPoly g = P2("x^2 + y^2 - 1");
  EXPECT_EQ(lie_derivative(X, g), P2("(2*x + 2*y)*(x^2 + y^2 - 1)"));
  auto cert = invariance_check(X, g);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->cofactor, P2("2*x + 2*y"));
  EXPECT_TRUE(cert->residual_check);
  EXPECT_EQ(divergence(X), P2("2*x"));
  EXPECT_FALSE(invariance_check(X, P2("x - 2")).has_value());
  EXPECT_FALSE(iif_check(X, g));
}

TEST(FieldOps, DegreeConvention) {
  EXPECT_EQ(AffineVectorField(P2("x^2"), P2("y")).degree(), 2);
  AffineVectorField X(P2("y"), P2("-x"), P2("x^2 + y^2"));
  EXPECT_EQ(X.degree(), 2);
  EXPECT_THROW(AffineVectorField(P2("y"), P2("x"), P2("x^2 + 1")), DomainError);
}

TEST(FieldOps, ProjectivizeExampleOne) {
  // alpha = 1, beta = i: affine form of the degree one example, back to P, Q, R.
  ProjectiveOneForm w = example1_form(1, GaussianRational(0, 1));
  AffineVectorField X = affinize(w);
  EXPECT_EQ(saturate(projectivize(X)), w);
  EXPECT_TRUE(infinity_invariant(X));
  EXPECT_THROW(ProjectiveOneForm(P3("Y"), P3("X"), P3("Z")), DomainError);
}

TEST(FieldOps, LineAtInfinityOfLogarithmicExample) {
  LogarithmicForm lf = logarithmic_form({{P3("X"), P3("Y"), P3("Y - X - Z")}, {1, GaussianRational(0, 1), GaussianRational(-1, -1)}});
  EXPECT_FALSE(infinity_invariant(lf.field));
  EXPECT_TRUE(iif_check(lf.field, P2("x*y*(y - x - 1)")));
  EXPECT_TRUE(infinity_invariant(AffineVectorField(P2("-y"), P2("x"))));
}

TEST(FieldOps, ChartsRoundTrip) {
  ProjectivePoint p(2, 3, 5);
  for (Chart c : {Chart::Z, Chart::Y, Chart::X}) {
    auto uv = chart_coordinates(p, c);
    ProjectivePoint q = from_chart(c, uv[0], uv[1]);
    auto uv2 = chart_coordinates(q, c);
    EXPECT_EQ(uv, uv2);
  }
  EXPECT_EQ(chart_for(ProjectivePoint(0, 1, 0)), Chart::Y);
  EXPECT_EQ(chart_for(ProjectivePoint(1, 0, 0)), Chart::X);
}

// f and g both invariant for X = f g (A, B) + c (-(fg)_y, (fg)_x).
TEST(FieldOps, PropertyCofactorIsAdditive) {
  Rng rng(31);
  for (int k = 0; k < kCases; ++k) {
    bool cx = k % 4 == 0;
    MultiPoly f = rng.poly(2, 2, 3, cx) + var(2, k % 2), g = rng.poly(2, 2, 3, cx) + var(2, 1 - k % 2) + cst(2, 1);
    MultiPoly A = rng.poly(2, 1, 2, cx), B = rng.poly(2, 1, 2, cx);
    GaussianRational c = rng.nonzero_number(cx);
    MultiPoly F = f * g;
    MultiPoly p = F * A - c * partial(F, 1), q = F * B + c * partial(F, 0);
    if (f.is_constant() || g.is_constant() || (p.is_zero() && q.is_zero())) continue;
    AffineVectorField X(p, q);
    auto Kf = invariance_check(X, f), Kg = invariance_check(X, g), Kfg = invariance_check(X, F);
    ASSERT_TRUE(Kf && Kg && Kfg);
    ASSERT_EQ(Kfg->cofactor, Kf->cofactor + Kg->cofactor);
    ASSERT_EQ(lie_derivative(X, F), Kfg->cofactor * F);
  }
  record_cases(kCases);
}

TEST(FieldOps, PropertyProjectiveCondition) {
  Rng rng(32);
  MultiPoly Xv = var(3, 0), Yv = var(3, 1), Zv = var(3, 2);
  for (int k = 0; k < kCases; ++k) {
    bool cx = k % 2 == 0;
    MultiPoly p = rng.poly(2, 3, 5, cx), q = rng.poly(2, 3, 5, cx);
    if (p.is_zero() && q.is_zero()) p = var(2, 1);
    MultiPoly r(2);
    if (k % 3 == 0) {
      int m = std::max({p.degree(), q.degree(), 1});
      for (int i = 0; i <= m; ++i) r.add_term({unsigned(i), unsigned(m - i), 0}, rng.number(cx));
    }
    AffineVectorField X(p, q, r);
    ProjectiveOneForm w = projectivize(X);
    ASSERT_TRUE((Xv * w.P() + Yv * w.Q() + Zv * w.R()).is_zero());
    ProjectiveOneForm s = saturate(w);
    ASSERT_TRUE((Xv * s.P() + Yv * s.Q() + Zv * s.R()).is_zero());
    ASSERT_EQ(saturate(projectivize(affinize(s))), s);
  }
  record_cases(kCases);
}
