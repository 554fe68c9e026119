#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "folia/errors.hpp"
#include "folia/interval.hpp"
#include "folia/kernels.hpp"
#include "folia/textio.hpp"
#include "support.hpp"

using namespace folia;
using namespace folia::testing;
using namespace folia::kernels;

namespace {

// Exact value of p at the binary rationals x, y.
mpq_class exact_at(const MultiPoly& p, double x, double y) {
  std::array<GaussianRational, 2> pt{mpq_class(x), mpq_class(y)};
  return p.evaluate(pt).re();
}

std::vector<double> random_points(Rng& rng, std::size_t n, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<double> v(n);
  for (auto& t : v) t = u(rng.engine());
  return v;
}

}  // namespace

TEST(Kernels, DenseLayout) {
  DensePoly2 d = DensePoly2::from(parse_poly("3*x^2*y - y + 1/3", 2));
  EXPECT_EQ(d.dx, 2);
  EXPECT_EQ(d.dy, 1);
  EXPECT_EQ(d.c[2 * 2 + 1], 3.0);
  EXPECT_EQ(d.c[0 * 2 + 1], -1.0);
  EXPECT_LE(d.c_lo[0], d.c[0]);
  EXPECT_GE(d.c_hi[0], d.c[0]);
  EXPECT_THROW(DensePoly2::from(parse_poly("i*x", 2)), DomainError);
  EXPECT_THROW(DensePoly2::from(parse_poly("X", 3)), Error);
}

TEST(Kernels, DispatchNames) {
  EXPECT_STREQ(isa_name(Isa::Scalar), "scalar");
  Isa a = active_isa();
  EXPECT_TRUE(a == Isa::Scalar || avx2_available());
}

// Vector and scalar paths share the operation order, so results match bit for bit.
TEST(Kernels, PropertyAvx2MatchesScalarBitwise) {
  if (!avx2_available()) GTEST_SKIP() << "no AVX2 on this machine";
  Rng rng(91);
  for (int k = 0; k < kCases; ++k) {
    MultiPoly p = rng.poly(2, 8, 12) + cst(2, 1);
    DensePoly2 d = DensePoly2::from(p);
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 37));
    auto x = random_points(rng, n, 3.0), y = random_points(rng, n, 3.0);
    std::vector<double> v1(n), b1(n), v2(n), b2(n);
    eval(Isa::Scalar, d, x.data(), y.data(), n, v1.data(), b1.data());
    eval(Isa::Avx2, d, x.data(), y.data(), n, v2.data(), b2.data());
    ASSERT_EQ(std::memcmp(v1.data(), v2.data(), n * sizeof(double)), 0);
    ASSERT_EQ(std::memcmp(b1.data(), b2.data(), n * sizeof(double)), 0);
  }
  record_cases(kCases);
}

TEST(Kernels, PropertyBoundEnclosesExactValue) {
  Rng rng(92);
  for (int k = 0; k < kCases; ++k) {
    MultiPoly p = rng.poly(2, 7, 10);
    p.add_term({0, 0, 0}, GaussianRational(mpq_class(1, 7)));
    DensePoly2 d = DensePoly2::from(p);
    auto x = random_points(rng, 8, 2.0), y = random_points(rng, 8, 2.0);
    std::vector<double> v(8), b(8);
    eval(d, x.data(), y.data(), 8, v.data(), b.data());
    for (int j = 0; j < 8; ++j) {
      mpq_class err = mpq_class(v[j]) - exact_at(p, x[j], y[j]);
      ASSERT_LE(abs(err), mpq_class(b[j])) << print_poly(p);
    }
  }
  record_cases(kCases);
}

TEST(Kernels, PropertyIntervalEnclosure) {
  Rng rng(93);
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < kCases; ++k) {
    MultiPoly p = rng.poly(2, 6, 8);
    p.add_term({1, 0, 0}, GaussianRational(mpq_class(1, 3)));
    DensePoly2 d = DensePoly2::from(p);
    double x0 = 4 * u(rng.engine()) - 2, y0 = 4 * u(rng.engine()) - 2, w = 0.1 * u(rng.engine());
    Interval box = eval_interval(d, Interval(x0, x0 + w), Interval(y0, y0 + w));
    for (int j = 0; j < 4; ++j) {
      double xs = x0 + w * u(rng.engine()), ys = y0 + w * u(rng.engine());
      if (xs > x0 + w) xs = x0 + w;
      if (ys > y0 + w) ys = y0 + w;
      mpq_class e = exact_at(p, xs, ys);
      ASSERT_LE(mpq_class(box.lo), e);
      ASSERT_GE(mpq_class(box.hi), e);
    }
  }
  record_cases(kCases);
}
