#include <string>
#include <vector>

#include "folia/bounds.hpp"
#include "folia/branches.hpp"
#include "folia/construct.hpp"
#include "folia/singularities.hpp"
#include "folia/textio.hpp"
#include "report.hpp"

namespace folia::cli {

namespace {

struct Section {
  Json json = Json::object();
  int passed = 0, failed = 0;

  explicit Section(const std::string& name) {
    json["name"] = name;
    json["rows"] = Json::array();
  }
  void row(const std::string& name, const Json& expected, const Json& got) {
    Json r = Json::object();
    r["case"] = name;
    r["expected"] = expected;
    r["got"] = got;
    r["pass"] = expected == got;
    (expected == got ? passed : failed)++;
    json["rows"].push_back(r);
  }
};

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size()))
    s.replace(at, from.size(), to);
  return s;
}

ProjectiveOneForm form_from_text(const std::string& P, const std::string& Q, const std::string& R) {
  return ProjectiveOneForm(parse_poly(P, 3), parse_poly(Q, 3), parse_poly(R, 3));
}

void euler_examples(std::vector<Section>& out) {
  Section s("Euler identity on examples 1-3");
  struct Case {
    const char* name;
    std::vector<int> expected;  // sum mu, n, m, chi
    std::vector<std::pair<ProjectivePoint, int>> mus;
  };
  ProjectivePoint P1(0, 1, 0), P2(0, 0, 1);
  const Case cases[] = {{"example1", {2, 1, 1, 2}, {{P1, 1}}},
                        {"example2", {3, 1, 2, 2}, {{P1, 2}, {P2, 1}}},
                        {"example3", {4, 1, 3, 2}, {{P1, 2}, {P2, 2}}}};
  for (const auto& c : cases) {
    SystemDocument doc = gallery(c.name);
    int chi = static_cast<int>(doc.find_param("chi")->value.re().get_num().get_si());
    EulerReport r = euler_identity_check(doc.forms.front().form, doc.find_curve("S")->f, chi);
    s.row(std::string(c.name) + " (sum mu, n, m, chi)", c.expected, Json({r.sum_mu, r.n, r.m, r.chi_claimed}));
    s.row(std::string(c.name) + " identity", true, r.checkable && r.identity_holds);
    for (const auto& [p, mu] : c.mus) {
      Json got = nullptr;
      for (const auto& e : r.table)
        if (e.point == p) got = e.mu;
      s.row(std::string(c.name) + " mu at " + print_point(p), mu, got);
    }
  }
  out.push_back(std::move(s));
}

void example_forms(std::vector<Section>& out) {
  Section s("Printed one-forms");
  ProjectiveOneForm e2 = form_from_text("(2*Y*Z - X^2)*Z", "X*(Y + Z)*Z", "X^3 - X*Y^2 - 3*X*Y*Z");
  ProjectiveOneForm e3 = form_from_text("(X^3 - 2*Y^2*Z)*Z", "-X*(Y^2 + Z^2)*Z", "-(X^4 - 2*X*Y^2*Z - X*Y*Z^2 - X*Y^3)");
  s.row("example2 gallery form", print_form(e2), print_form(gallery("example2").forms.front().form));
  s.row("example3 gallery form", print_form(e3), print_form(gallery("example3").forms.front().form));

  // Example 1 from the logarithmic construction with F = (X, Y, Z).
  GaussianRational a(1), b(0, 1);
  LogarithmicForm lf1 = logarithmic_form({{parse_poly("X", 3), parse_poly("Y", 3), parse_poly("Z", 3)}, {a, b, -(a + b)}});
  s.row("example1 from logarithmic construction", print_form(example1_form(a, b)), print_form(lf1.form));

  // The degree-one example, with lambda substituted into the printed text.
  const std::vector<std::string> lambda = {"1", "i", "-1-i"};
  std::string P = "Y*(l1*Y + l2*X - l1*Z)", Q = "-X*(l1*Y + l2*X + l2*Z)", R = "-l3*X*Y";
  for (int k = 0; k < 3; ++k) {
    std::string name = "l" + std::to_string(k + 1), val = "(" + lambda[k] + ")";
    P = replace_all(P, name, val);
    Q = replace_all(Q, name, val);
    R = replace_all(R, name, val);
  }
  ProjectiveOneForm printed = form_from_text(P, Q, R);
  std::vector<GaussianRational> w;
  for (const auto& t : lambda) w.push_back(parse_number(t));
  LogarithmicForm lf = logarithmic_form({{parse_poly("X", 3), parse_poly("Y", 3), parse_poly("Y - X - Z", 3)}, w});
  s.row("degree-one example, coefficients", print_form(printed), print_form(lf.form));
  s.row("degree-one example, degree", 1, lf.degree);
  s.row("degree-one example, line at infinity invariant", false, infinity_invariant(lf.field));
  s.row("homogenize x y (y - x - 1)", print_poly(parse_poly("X*Y*(Y - X - Z)", 3)),
        print_poly(homogenize(parse_poly("x*y*(y - x - 1)", 2), 3)));
  s.row("dehomogenize X Y (Y - X - Z)", print_poly(parse_poly("x*y*(y - x - 1)", 2)),
        print_poly(dehomogenize(parse_poly("X*Y*(Y - X - Z)", 3))));
  s.row("logarithmic example, inverse integrating factor", true, lf.iif);
  out.push_back(std::move(s));
}

void corollary2_cases(std::vector<Section>& out) {
  Section s("Euler characteristic through the Hamiltonian foliation");
  const std::pair<const char*, int> cases[] = {{"x", 2}, {"x^2 + 4*y^2 - 1", 2}, {"x^3 - x*y^2 - 1", 0}};
  for (const auto& [f, chi] : cases) {
    Corollary2Report r = corollary2_check(parse_poly(f, 2));
    std::string name = std::string(f) + " (n = " + std::to_string(r.n) + ")";
    s.row(name + " chi", chi, r.chi_formula);
    s.row(name + " identity", true, r.holds);
    s.row(name + " infinity multiplicities all 1", true, r.all_mu_one);
  }
  out.push_back(std::move(s));
}

void bound_tables(std::vector<Section>& out) {
  Section s("Bound tables, m = 2..7");
  const std::vector<long> t1 = {1, 1, 4, 6, 11, 15}, t2a = {2, 3, 7, 10, 16, 21}, t2b = {4, 6, 11, 15, 22, 28};
  std::vector<long> g1, g2a, g2b, g4, gn, gd, deg;
  for (int m = 2; m <= 7; ++m) {
    g1.push_back(thm1_bound(m).value);
    g2a.push_back(thm2_bound(m, true).value);
    g2b.push_back(thm2_bound(m, false).value);
    g4.push_back(thm4_bound(m).value);
    gn.push_back(nodal_degree_bound(m).value);
    gd.push_back(nondicritical_degree_bound(m).value);
    deg.push_back(m + 2);
  }
  s.row("limit cycles, r = 0 excluded", t1, g1);
  s.row("limit cycles, r = 0", t2a, g2a);
  s.row("limit cycles, r != 0", t2b, g2b);
  s.row("nodal curve", t1, g4);
  s.row("degree, nodal", deg, gn);
  s.row("degree, non-dicritical", deg, gd);
  s.row("degree, nodal, m = 1", 3, nodal_degree_bound(1).value);
  s.row("degree, non-dicritical, m = 1", 3, nondicritical_degree_bound(1).value);
  s.row("Harnack n = 4", 4, harnack_bound(4, {}).value);
  s.row("Harnack n = 3", 1, harnack_bound(3, {}).value);
  const int part[] = {1, 1, 4};
  s.row("oval total for degrees 1, 1, 4", 4, mk_value(4, part).value);
  MkValue best = mk_argmax(4);
  s.row("best split for m = 4 (k, value)", Json({3, 4}), Json({best.k, best.value}));
  out.push_back(std::move(s));
}

}  // namespace

Json fixture_suite(bool& all_pass) {
  std::vector<Section> sections;
  euler_examples(sections);
  example_forms(sections);
  corollary2_cases(sections);
  bound_tables(sections);
  Json report = Json::object();
  report["sections"] = Json::array();
  int passed = 0, failed = 0;
  for (auto& s : sections) {
    passed += s.passed;
    failed += s.failed;
    report["sections"].push_back(s.json);
  }
  report["passed"] = passed;
  report["failed"] = failed;
  all_pass = failed == 0;
  return report;
}

}  // namespace folia::cli
