#include <gtest/gtest.h>

#include "folia/construct.hpp"
#include "folia/errors.hpp"
#include "folia/textio.hpp"
#include "support.hpp"

using namespace folia;
using namespace folia::testing;

TEST(TextIo, CanonicalPrinting) {
  EXPECT_EQ(print_poly(parse_poly("-1 + y^2 + x^2", 2)), "x^2 + y^2 - 1");
  EXPECT_EQ(print_poly(MultiPoly(2)), "0");
  EXPECT_EQ(print_poly(parse_poly("X*Y*(Y - X - Z)", 3)), "-X^2*Y + X*Y^2 - X*Y*Z");
  EXPECT_EQ(print_number(parse_number("1/2 - 3*i")), "(1/2 - 3*i)");
  EXPECT_EQ(print_number(parse_number("-2/4")), "-1/2");
  EXPECT_EQ(print_point(ProjectivePoint(0, 1, 0)), "(0 : 1 : 0)");
}

TEST(TextIo, ParseErrorsCarryPositions) {
  try {
    parse_poly("x + * y", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 5);
  }
  EXPECT_THROW(parse_poly("x + Z", 2), ParseError);
  EXPECT_THROW(parse_poly("x^", 2), ParseError);
  EXPECT_THROW(parse_number("x"), ParseError);
}

TEST(TextIo, DocumentSections) {
  const char* text =
      "# eee system\n"
      "[field eee]\n"
      "p = x^2+y^2-1 - (x-2)*2*y\n"
      "q = x^2+y^2-1 + (x-2)*2*x\n"
      "\n"
      "[curve S]\n"
      "f = x^2 + y^2 - 1\n"
      "[param chi]\n"
      "value = 2\n";
  SystemDocument d = parse_system(text);
  ASSERT_EQ(d.fields.size(), 1u);
  EXPECT_EQ(d.fields[0].name, "eee");
  EXPECT_EQ(print_poly(d.find_curve("S")->f), "x^2 + y^2 - 1");
  EXPECT_EQ(d.find_param("chi")->value, GaussianRational(2));
  EXPECT_EQ(d.find_field("nope"), nullptr);
  EXPECT_THROW(parse_system("[bogus a]\nf = 1\n"), Error);
  EXPECT_THROW(parse_system("[curve a]\nf = x +\n"), ParseError);
}

TEST(TextIo, PropertyPolynomialRoundTrip) {
  Rng rng(21);
  for (int k = 0; k < kCases; ++k) {
    int arity = 2 + k % 2;
    MultiPoly p = rng.poly(arity, 6, 8, k % 3 != 0);
    std::string s = print_poly(p);
    ASSERT_EQ(parse_poly(s, arity), p) << s;
    ASSERT_EQ(print_poly(parse_poly(s, arity)), s);
    GaussianRational z = rng.number(true, 50);
    ASSERT_EQ(parse_number(print_number(z)), z);
  }
  record_cases(kCases);
}

TEST(TextIo, PropertyDocumentRoundTrip) {
  Rng rng(22);
  for (int k = 0; k < kCases; ++k) {
    SystemDocument d;
    d.params.push_back({"lambda1", rng.number(true)});
    MultiPoly p = rng.poly(2, 3, 4, true), q = rng.poly(2, 3, 4, true);
    if (p.is_zero() && q.is_zero()) p = var(2, 0);
    d.fields.push_back({"X", AffineVectorField(p, q)});
    d.curves.push_back({"S", rng.poly(2, 4, 5) + var(2, 1), {}});
    const auto& names = gallery_names();
    SystemDocument g = gallery(names[k % names.size()]);
    std::string text = print_system(d);
    ASSERT_EQ(print_system(parse_system(text)), text);
    std::string gtext = print_system(g);
    ASSERT_EQ(print_system(parse_system(gtext)), gtext);
  }
  record_cases(kCases);
}
