#include <gtest/gtest.h>

#include "folia/errors.hpp"
#include "folia/multipoly.hpp"
#include "folia/textio.hpp"
#include "folia/upoly.hpp"
#include "support.hpp"

using namespace folia;
using namespace folia::testing;

namespace {

MultiPoly P2(const char* s) { return parse_poly(s, 2); }
MultiPoly P3(const char* s) { return parse_poly(s, 3); }

}  // namespace

TEST(GaussianRational, ArithmeticAndInverse) {
  GaussianRational a(mpq_class(1, 2), mpq_class(3)), b(2, -1);
  EXPECT_EQ(a * b, GaussianRational(mpq_class(4), mpq_class(11, 2)));
  EXPECT_EQ(a * a.inverse(), GaussianRational(1));
  EXPECT_EQ(a.norm(), mpq_class(37, 4));
  EXPECT_EQ(pow(GaussianRational::imaginary_unit(), 4), GaussianRational(1));
  EXPECT_EQ(*gaussian_sqrt(GaussianRational(0, 2)), GaussianRational(1, 1));
  EXPECT_FALSE(gaussian_sqrt(GaussianRational(2)).has_value());
}

TEST(GaussianRational, PropertyFieldAxioms) {
  Rng rng(11);
  for (int k = 0; k < kCases; ++k) {
    GaussianRational a = rng.number(true, 9), b = rng.number(true, 9), c = rng.number(true, 9);
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ(a * (b * c), (a * b) * c);
    ASSERT_EQ(a - a, GaussianRational(0));
    if (!a.is_zero()) ASSERT_EQ(b / a * a, b);
    ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
  }
  record_cases(kCases);
}

TEST(MultiPoly, FixedProducts) {
  EXPECT_EQ(P2("(x + y)^2"), P2("x^2 + 2*x*y + y^2"));
  EXPECT_EQ(P2("(x - i*y)*(x + i*y)"), P2("x^2 + y^2"));
  EXPECT_EQ(P2("x^2 + y^2 - 1").degree(), 2);
  EXPECT_EQ(MultiPoly(2).degree(), kDegreeOfZero);
  EXPECT_EQ(P2("x^3*y + 2").order(), 0);
  EXPECT_TRUE(P3("X*Y - Z^2").is_homogeneous());
  EXPECT_THROW(P2("x") + P3("X"), ArityError);
}

TEST(MultiPoly, HomogenizeExample) {
  EXPECT_EQ(homogenize(P2("x*y*(y - x - 1)"), 3), P3("X*Y*(Y - X - Z)"));
  EXPECT_EQ(dehomogenize(P3("X*Y*(Y - X - Z)")), P2("x*y*(y - x - 1)"));
  EXPECT_EQ(homogenize(P2("x - 1"), 2), P3("X*Z - Z^2"));
  EXPECT_THROW(homogenize(P2("x^3"), 2), DomainError);
}

TEST(MultiPoly, DerivativeAndDivision) {
  EXPECT_EQ(partial(P2("x^3*y + 4*y^2"), 0), P2("3*x^2*y"));
  EXPECT_EQ(partial(P2("x^3*y + 4*y^2"), 1), P2("x^3 + 8*y"));
  EXPECT_EQ(*exact_divide(P2("x^2 - y^2"), P2("x - y")), P2("x + y"));
  EXPECT_FALSE(exact_divide(P2("x^2 + y^2"), P2("x - y")).has_value());
}

TEST(MultiPoly, GcdAndSquarefree) {
  EXPECT_EQ(gcd(P2("(x - y)*(x + 1)"), P2("(x - y)*(y + 2)")), make_monic(P2("x - y")));
  EXPECT_EQ(gcd(P2("x^2 + y^2 - 1"), P2("x - 2")), P2("1"));
  EXPECT_TRUE(is_squarefree(P2("x*y*(y - x - 1)")));
  EXPECT_FALSE(is_squarefree(P2("(x - y)^2*(x + 1)")));
  EXPECT_THROW(is_squarefree(MultiPoly(2)), DomainError);
}

TEST(MultiPoly, PropertyRingAxioms) {
  Rng rng(12);
  for (int k = 0; k < kCases; ++k) {
    int arity = k % 2 ? 3 : 2;
    bool cx = k % 3 == 0;
    MultiPoly a = rng.poly(arity, 3, 4, cx), b = rng.poly(arity, 3, 4, cx), c = rng.poly(arity, 2, 3, cx);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, MultiPoly(arity));
    ASSERT_EQ(a * cst(arity, 1), a);
    ASSERT_EQ(a + MultiPoly(arity), a);
    if (!a.is_zero() && !b.is_zero()) ASSERT_EQ((a * b).degree(), a.degree() + b.degree());
  }
  record_cases(kCases);
}

TEST(MultiPoly, PropertyEvaluationIsAHomomorphism) {
  Rng rng(13);
  for (int k = 0; k < kCases; ++k) {
    MultiPoly a = rng.poly(2, 4, 5, true), b = rng.poly(2, 4, 5, true);
    std::array<GaussianRational, 2> pt{rng.number(true), rng.number(true)};
    ASSERT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    ASSERT_EQ((a - b).evaluate(pt), a.evaluate(pt) - b.evaluate(pt));
  }
  record_cases(kCases);
}

TEST(MultiPoly, PropertyHomogenizeRoundTrip) {
  Rng rng(14);
  for (int k = 0; k < kCases; ++k) {
    MultiPoly f = rng.poly(2, 5, 6, k % 2 == 0);
    if (f.is_zero()) f = cst(2, 1);
    int n = f.degree() + static_cast<int>(rng.uniform(0, 2));
    MultiPoly F = homogenize(f, n);
    ASSERT_TRUE(F.is_homogeneous());
    ASSERT_EQ(F.degree(), n);
    ASSERT_EQ(dehomogenize(F), f);
  }
  record_cases(kCases);
}

TEST(MultiPoly, PropertyExactDivisionAndGcd) {
  Rng rng(15);
  for (int k = 0; k < kCases; ++k) {
    MultiPoly a = rng.poly(2, 2, 3), b = rng.poly(2, 2, 3), c = rng.poly(2, 2, 3);
    if (a.is_zero() || b.is_zero() || c.is_zero()) {
      --k;
      continue;
    }
    ASSERT_EQ(*exact_divide(a * b, b), a);
    MultiPoly g = gcd(a * c, b * c);
    ASSERT_TRUE(exact_divide(g, make_monic(c)).has_value()) << print_poly(a) << " | " << print_poly(b) << " | " << print_poly(c);
    ASSERT_TRUE(exact_divide(a * c, g).has_value());
    ASSERT_TRUE(exact_divide(b * c, g).has_value());
  }
  record_cases(kCases);
}

TEST(UPoly, RootsAndSturm) {
  UPoly p = UPoly({mpq_class(-1, 2), 1}) * UPoly({GaussianRational(0, -1), 1}) * UPoly({1, 0, 1});
  GaussianRoots r = gaussian_roots(p);
  EXPECT_EQ(r.roots.size(), 3u);  // 1/2, i twice, -i
  EXPECT_EQ(r.residual, 0);
  QPoly q({-2, 0, 1});  // t^2 - 2
  SturmSequence s(q);
  EXPECT_EQ(s.count_real_roots(), 2);
  EXPECT_EQ(s.count_roots(0, 2), 1);
  EXPECT_EQ(gaussian_roots(UPoly({-2, 0, 1})).residual, 2);
}

TEST(UPoly, PropertySturmCountsRationalRoots) {
  Rng rng(16);
  for (int k = 0; k < kCases; ++k) {
    int nroots = static_cast<int>(rng.uniform(1, 5));
    std::vector<mpq_class> roots;
    UPoly p = UPoly::constant(1);
    for (int j = 0; j < nroots; ++j) {
      mpq_class t = rng.rational(6, 4);
      roots.push_back(t);
      p = p * UPoly({GaussianRational(-t), 1});
    }
    p = p * UPoly({1, 0, 1});  // no real roots added
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    SturmSequence s(QPoly::from_real(p));
    ASSERT_EQ(s.count_real_roots(), static_cast<int>(roots.size()));
    mpq_class a = rng.rational(6, 4), b = a + rng.rational(6, 4) * rng.rational(6, 4);
    if (b < a) std::swap(a, b);
    int expect = 0;
    for (const auto& t : roots) expect += (t > a && t <= b);
    ASSERT_EQ(s.count_roots(a, b), expect);
  }
  record_cases(kCases);
}
