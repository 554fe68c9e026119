#include <gtest/gtest.h>

#include <cmath>

#include "folia/construct.hpp"
#include "folia/cycles.hpp"
#include "folia/errors.hpp"
#include "folia/textio.hpp"
#include "support.hpp"

using namespace folia;
using namespace folia::testing;

namespace {

MultiPoly P2(const char* s) { return parse_poly(s, 2); }

double dist_to_circle(const Point2& p) { return std::hypot(p[0], p[1]) - 1; }

AffineVectorField eee_circle() { return eee_system(P2("x^2 + y^2 - 1"), P2("x - 2"), 1, 1).field; }

}  // namespace

TEST(Cycles, EeeCircleDivergenceIntegral) {
  Polyline oval = trace_oval(P2("x^2 + y^2 - 1"), {1.0, 0.0}, {0.01});
  DivergenceIntegral d = divergence_integral(eee_circle(), oval);
  // Reference values from an independent adaptive quadrature of the same integral.
  EXPECT_NEAR(d.D, 0.972012150, 1e-6);
  EXPECT_NEAR(d.T, 1.813799364, 1e-6);
  EXPECT_LT(d.error, 1e-6 * std::fabs(d.D));
  Polyline fine = trace_oval(P2("x^2 + y^2 - 1"), {1.0, 0.0}, {0.005});
  DivergenceIntegral e = divergence_integral(eee_circle(), fine);
  EXPECT_LT(std::fabs(d.D - e.D), 1e-6 * std::fabs(e.D));
}

TEST(Cycles, CertificateAndOrbitsAgree) {
  Polyline oval = trace_oval(P2("x^2 + y^2 - 1"), {1.0, 0.0});
  CycleCertificate c = certify_cycle(eee_circle(), oval);
  EXPECT_TRUE(c.hyperbolic);
  EXPECT_EQ(c.stability, Stability::Unstable);
  for (double r0 : {1.01, 0.99}) {
    auto orbit = integrate_orbit(eee_circle(), {r0, 0.0}, 2 * c.T, 1e-3);
    EXPECT_GT(std::fabs(dist_to_circle(orbit.back())), std::fabs(dist_to_circle(orbit.front()))) << r0;
  }
}

TEST(Cycles, RotationIsNotHyperbolic) {
  AffineVectorField rot(P2("-y"), P2("x"));
  Polyline oval = trace_oval(P2("x^2 + y^2 - 1"), {1.0, 0.0});
  CycleCertificate c = certify_cycle(rot, oval);
  EXPECT_NEAR(c.D, 0.0, 1e-9);
  EXPECT_NEAR(c.T, 2 * M_PI, 1e-6);
  EXPECT_FALSE(c.hyperbolic);
  EXPECT_EQ(c.stability, Stability::Undetermined);
  auto orbit = integrate_orbit(rot, {1.0, 0.0}, 2 * M_PI, 1e-2);
  for (const auto& p : orbit) EXPECT_NEAR(dist_to_circle(p), 0.0, 1e-9);
}

TEST(Cycles, OrbitEdgeCases) {
  AffineVectorField X = eee_circle();
  auto still = integrate_orbit(AffineVectorField(P2("x"), P2("y")), {0.0, 0.0}, 1.0, 0.1);
  for (const auto& p : still) EXPECT_EQ(p, (Point2{0.0, 0.0}));
  EXPECT_THROW(integrate_orbit(X, {1.1, 0.0}, 10.0, 1e-3), NumericError);
  Polyline tiny = {{1, 0}, {0, 1}, {1, 0}};
  EXPECT_THROW(divergence_integral(X, tiny), DomainError);
}

TEST(Cycles, LocationCheck) {
  // Real logarithmic system: the unit circle and the line at infinity, V = circle.
  LogarithmicForm lf = logarithmic_form({{parse_poly("X^2 + Y^2 - Z^2", 3), parse_poly("Z", 3)}, {1, -2}});
  MultiPoly V = P2("x^2 + y^2 - 1");
  ASSERT_TRUE(iif_check(lf.field, V));
  Polyline circle = trace_oval(V, {1.0, 0.0});
  auto ok = location_check(lf.field, V, std::vector<Polyline>{circle});
  EXPECT_TRUE(ok[0].pass);
  EXPECT_LT(ok[0].residual, 1e-8);
  Polyline ellipse = trace_oval(P2("x^2 + 2*y^2 - 1"), {1.0, 0.0});
  auto bad = location_check(lf.field, V, std::vector<Polyline>{ellipse});
  EXPECT_FALSE(bad[0].pass);
  EXPECT_THROW(location_check(eee_circle(), V, std::vector<Polyline>{circle}), PreconditionError);
}

// Every oval of the quartic is a hyperbolic cycle of its eee system, with the
// sign confirmed by integration.
TEST(Cycles, QuarticHasFourHyperbolicCycles) {
  SystemDocument d = gallery("eee-quartic");
  AffineVectorField X = d.fields.front().field;
  MultiPoly g = d.find_curve("S")->f;
  OvalSet s = count_ovals(g, std::nullopt, 256);
  ASSERT_EQ(s.certified_count(), 4);
  for (std::size_t k = 0; k < s.ovals.size(); ++k) {
    Polyline p = trace_oval(g, s.ovals[k].vertices.front());
    CycleCertificate c = certify_cycle(X, p, static_cast<int>(k));
    EXPECT_TRUE(c.hyperbolic) << k;
  }
}
