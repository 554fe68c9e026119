#include <gtest/gtest.h>

#include <algorithm>

#include "folia/construct.hpp"
#include "folia/errors.hpp"
#include "folia/singularities.hpp"
#include "folia/textio.hpp"
#include "support.hpp"

using namespace folia;
using namespace folia::testing;

namespace {

MultiPoly P2(const char* s) { return parse_poly(s, 2); }

bool contains(const std::vector<ProjectivePoint>& v, const ProjectivePoint& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

// Rational point of the unit circle.
std::array<mpq_class, 2> circle_point(const mpq_class& t) {
  mpq_class d = 1 + t * t;
  return {mpq_class((1 - t * t) / d), mpq_class(2 * t / d)};
}

}  // namespace

TEST(Singularities, ExampleOnePoints) {
  ProjectiveOneForm w = example1_form(1, GaussianRational(0, 1));
  AffineVectorField X = affinize(w);
  PointSet fin = affine_singularities(X), inf = infinite_singularities(w);
  EXPECT_TRUE(contains(fin.points, ProjectivePoint(0, 0, 1)));
  EXPECT_TRUE(contains(inf.points, ProjectivePoint(0, 1, 0)));
  EXPECT_EQ(fin.residual + inf.residual, 0);
  for (const auto& p : {ProjectivePoint(0, 0, 1), ProjectivePoint(0, 1, 0)})
    EXPECT_EQ(classify_dicritical(X, p).verdict, Verdict::NonDicritical);
}

TEST(Singularities, JacobianVerdicts) {
  using J = std::array<std::array<GaussianRational, 2>, 2>;
  EXPECT_EQ(classify_jacobian(J{{{1, 0}, {0, 1}}}).first, Verdict::Dicritical);
  EXPECT_EQ(classify_jacobian(J{{{1, 0}, {0, GaussianRational(0, 1)}}}).first, Verdict::NonDicritical);
  EXPECT_EQ(classify_jacobian(J{{{1, 0}, {0, -1}}}).first, Verdict::NonDicritical);
  EXPECT_EQ(classify_jacobian(J{{{0, 1}, {0, 0}}}).first, Verdict::Unknown);
  EXPECT_EQ(classify_jacobian(J{{{1, 0}, {0, 2}}}).first, Verdict::Unknown);
}

TEST(Singularities, ChartIndependenceOnExamples) {
  for (const char* name : {"example1", "example2", "example3"}) {
    ProjectiveOneForm w = gallery(name).forms.front().form;
    AffineVectorField X = affinize(w);
    ProjectivePoint P1(0, 1, 0);
    SingularityRecord a = classify_in_chart(chart_field(w, Chart::Y), Chart::Y, P1);
    SingularityRecord b = classify_dicritical(X, P1);
    EXPECT_EQ(a.verdict, b.verdict) << name;
  }
}

TEST(Singularities, CurveNodes) {
  EXPECT_TRUE(curve_singularities(P2("x^2 + y^2 - 1")).points.empty());
  EXPECT_EQ(is_nodal(P2("x^2 + y^2 - 1"), true), Tristate::True);
  auto node = curve_singularities(P2("y^2 - x^2*(x + 1)"));
  ASSERT_EQ(node.points.size(), 1u);
  EXPECT_EQ(node.points[0].order, 2);
  EXPECT_TRUE(node.points[0].is_node);
  auto cusp = curve_singularities(P2("y^2 - x^3"));
  ASSERT_EQ(cusp.points.size(), 1u);
  EXPECT_FALSE(cusp.points[0].is_node);
  EXPECT_EQ(is_nodal(P2("y^2 - x^3"), false), Tristate::False);
  // The nodal cubic has a flex tangent to the line at infinity.
  EXPECT_EQ(is_nodal(P2("y^2 - x^2*(x + 1)"), false), Tristate::True);
  EXPECT_EQ(is_nodal(P2("y^2 - x^2*(x + 1)"), true), Tristate::False);
}

TEST(Singularities, PropertyReturnedPointsAreZeros) {
  Rng rng(61);
  for (int k = 0; k < kCases; ++k) {
    // Two factored components make rational singular points likely.
    MultiPoly l1 = rng.poly(2, 1, 3) + var(2, 0), l2 = rng.poly(2, 1, 3) + var(2, 1);
    MultiPoly p = l1 * rng.poly(2, 1, 2, k % 2 == 0) + rng.poly(2, 0, 1);
    MultiPoly q = l2 * (rng.poly(2, 1, 2) + cst(2, 1));
    if (p.is_zero() && q.is_zero()) continue;
    AffineVectorField X(p, q);
    PointSet s;
    try {
      s = affine_singularities(X);
    } catch (const NonIsolatedError&) {
      continue;
    }
    for (const auto& pt : s.points) {
      std::array<GaussianRational, 2> xy{pt[0] / pt[2], pt[1] / pt[2]};
      ASSERT_TRUE(X.planar().a.evaluate(xy).is_zero());
      ASSERT_TRUE(X.planar().b.evaluate(xy).is_zero());
    }
  }
  record_cases(kCases);
}

TEST(Singularities, PropertyCircleTimesSecantIsNodal) {
  Rng rng(62);
  int done = 0;
  while (done < kCases) {
    mpq_class s = rng.rational(4, 4), t = rng.rational(4, 4);
    if (s == t) continue;
    auto a = circle_point(s), b = circle_point(t);
    // Line through a and b: (b1 - a1)(x - a0) - (b0 - a0)(y - a1).
    MultiPoly line = GaussianRational(mpq_class(b[1] - a[1])) * (var(2, 0) - cst(2, mpq_class(a[0]))) -
                     GaussianRational(mpq_class(b[0] - a[0])) * (var(2, 1) - cst(2, mpq_class(a[1])));
    MultiPoly f = P2("x^2 + y^2 - 1") * line;
    auto sing = curve_singularities(f);
    ASSERT_EQ(sing.points.size(), 2u);
    ASSERT_EQ(is_nodal(f, false), Tristate::True);
    ++done;
  }
  record_cases(done);
}
