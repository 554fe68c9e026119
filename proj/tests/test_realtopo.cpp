#include <gtest/gtest.h>

#include <cmath>

#include "folia/errors.hpp"
#include "folia/realtopo.hpp"
#include "folia/textio.hpp"
#include "support.hpp"

using namespace folia;
using namespace folia::testing;

namespace {

MultiPoly P2(const char* s) { return parse_poly(s, 2); }
const char* kQuartic = "2*x^4 + 5*x^2*y^2 + 2*y^4 - 3*x^2 - 3*y^2 + 101/100";

}  // namespace

TEST(RealTopo, Compactness) {
  EXPECT_TRUE(compactness_check(P2("x^2 + y^2 - 1")));
  EXPECT_FALSE(compactness_check(P2("y^2 - x^3")));
  EXPECT_FALSE(compactness_check(P2("x*y - 1")));
  EXPECT_TRUE(compactness_check(P2(kQuartic)));
  EXPECT_THROW(compactness_check(P2("x^2 + i*y^2")), DomainError);
  Box b = default_box(P2("x^2 + y^2 - 1"));
  EXPECT_GE(b.x1, 1);
  EXPECT_EQ(b.x0, -b.x1);
}

TEST(RealTopo, CountsOnReferenceCurves) {
  OvalSet circle = count_ovals(P2("x^2 + y^2 - 1"), std::nullopt, 64);
  EXPECT_EQ(circle.ovals.size(), 1u);
  EXPECT_EQ(circle.certified_count(), 1);
  EXPECT_TRUE(circle.complete);
  EXPECT_EQ(count_ovals(P2("x^2 + y^2 + 1"), std::nullopt, 32).ovals.size(), 0u);
  OvalSet q = count_ovals(P2(kQuartic), std::nullopt, 256);
  EXPECT_EQ(q.certified_count(), 4);
  OvalSet q2 = count_ovals(P2("2*x^4 + 5*x^2*y^2 + 2*y^4 - 3*x^2 - 3*y^2 + 99/100"), std::nullopt, 256);
  EXPECT_EQ(q2.ovals.size(), 2u);
}

TEST(RealTopo, OpenAndSingularCurves) {
  Box box{-2, 2, -2, 2};
  OvalSet lines = count_ovals(P2("x*y*(y - x - 1)"), box, 64);
  EXPECT_EQ(lines.ovals.size(), 0u);
  EXPECT_GT(lines.open_chains, 0);
  OvalSet nodal = count_ovals(P2("y^2 - x^2*(x + 1)"), box, 64);
  EXPECT_FALSE(nodal.complete);
  EXPECT_LT(nodal.certified_count(), static_cast<int>(nodal.ovals.size()) + 1);
  EXPECT_THROW(count_ovals(P2("x^2 + y^2 - 1"), box, 0), DomainError);
}

TEST(RealTopo, TraceCircle) {
  Polyline p = trace_oval(P2("x^2 + y^2 - 1"), {1.001, 0.0});
  ASSERT_GT(p.size(), 100u);
  EXPECT_EQ(p.front(), p.back());
  double worst = 0;
  for (const auto& v : p) worst = std::max(worst, std::fabs(std::hypot(v[0], v[1]) - 1));
  EXPECT_LT(worst, 1e-12);
  EXPECT_THROW(trace_oval(P2("x^2 + y^2 - 1"), {3.0, 0.0}), NumericError);
  EXPECT_THROW(trace_oval(P2("y^2 - x^2*(x + 1)"), {0.0, 0.0}), NumericError);
}

TEST(RealTopo, PolylineFormat) {
  std::string s = format_polylines({{{0.5, 1}, {0.25, 2}}, {{1, 1}}});
  EXPECT_EQ(s, "0.5 1\n0.25 2\n\n1 1\n");
}

// Refining the grid never loses a certified oval.
TEST(RealTopo, PropertyCertifiedCountMonotoneUnderRefinement) {
  Rng rng(81);
  for (int k = 0; k < kCases; ++k) {
    // One or two ellipses with random rational centers and axes.
    MultiPoly f = cst(2, 1);
    int parts = static_cast<int>(rng.uniform(1, 2));
    for (int j = 0; j < parts; ++j) {
      GaussianRational cx = rng.number(false, 2), cy = rng.number(false, 2);
      GaussianRational ax = GaussianRational(mpq_class(rng.uniform(1, 4), 2)), ay = GaussianRational(mpq_class(rng.uniform(1, 4), 2));
      MultiPoly u = var(2, 0) - cst(2, cx), v = var(2, 1) - cst(2, cy);
      f = f * (ay * ay * u * u + ax * ax * v * v - cst(2, ax * ax * ay * ay));
    }
    int res = 8 << rng.uniform(0, 2);
    OvalSet a = count_ovals(f, std::nullopt, res), b = count_ovals(f, std::nullopt, 2 * res);
    ASSERT_GE(b.certified_count(), a.certified_count()) << print_poly(f) << " res " << res;
  }
  record_cases(kCases);
}
