#include "folia/construct.hpp"

#include <algorithm>
#include <map>

#include "folia/errors.hpp"
#include "folia/singularities.hpp"

namespace folia {

namespace {

MultiPoly X3() { return MultiPoly::variable(3, 0); }
MultiPoly Y3() { return MultiPoly::variable(3, 1); }
MultiPoly Z3() { return MultiPoly::variable(3, 2); }
MultiPoly x2() { return MultiPoly::variable(2, 0); }
MultiPoly y2() { return MultiPoly::variable(2, 1); }
MultiPoly c2(const GaussianRational& c) { return MultiPoly::constant(2, c); }

bool is_negative_rational(const GaussianRational& z) { return z.im() == 0 && z.re() < 0; }

}  // namespace

LogarithmicForm logarithmic_form(const LogarithmicSpec& spec) {
  const auto& F = spec.curves;
  const auto& lambda = spec.weights;
  if (F.size() < 2) throw DomainError("a logarithmic form needs at least two curves");
  if (F.size() != lambda.size()) throw DomainError("one weight per curve is required");
  GaussianRational weighted_degree;
  int total_degree = 0;
  for (std::size_t j = 0; j < F.size(); ++j) {
    if (F[j].arity() != 3) throw ArityError("logarithmic curves must be in X, Y, Z");
    if (F[j].is_zero() || !F[j].is_homogeneous() || F[j].degree() < 1) {
      throw DomainError("logarithmic curves must be homogeneous of positive degree");
    }
    if (lambda[j].is_zero()) throw DomainError("weights must be nonzero");
    if (!is_squarefree(F[j])) throw DomainError("curve " + std::to_string(j + 1) + " is not squarefree");
    weighted_degree += lambda[j] * GaussianRational(F[j].degree());
    total_degree += F[j].degree();
  }
  if (!weighted_degree.is_zero()) throw DomainError("weights violate sum lambda_i deg F_i = 0");
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = i + 1; j < F.size(); ++j)
      if (!gcd(F[i], F[j]).is_constant())
        throw DomainError("curves " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " share a component");

  std::array<MultiPoly, 3> c{MultiPoly(3), MultiPoly(3), MultiPoly(3)};
  for (std::size_t j = 0; j < F.size(); ++j) {
    MultiPoly others = MultiPoly::constant(3, lambda[j]);
    for (std::size_t i = 0; i < F.size(); ++i)
      if (i != j) others *= F[i];
    for (int v = 0; v < 3; ++v) c[v] += others * partial(F[j], v);
  }
  // The projective condition follows from Euler's identity and the weight sum;
  // the constructor re-checks it.
  ProjectiveOneForm form(c[0], c[1], c[2]);
  if (form.degree() != total_degree - 2) throw InternalError("logarithmic form has the wrong degree");

  LogarithmicForm out{form, affinize(form), {}, {}, {}, false, false, false, form.degree()};
  MultiPoly product = MultiPoly::constant(2, 1);
  for (std::size_t j = 0; j < F.size(); ++j) {
    MultiPoly f = dehomogenize(F[j]);
    if (f.is_constant()) {
      out.line_at_infinity_listed = true;
      if (!infinity_invariant(out.field)) throw InternalError("line at infinity is listed but not invariant");
      continue;
    }
    auto cert = invariance_check(out.field, f);
    if (!cert) throw InternalError("curve " + std::to_string(j + 1) + " of a logarithmic form is not invariant");
    out.affine_curves.push_back(f);
    out.affine_weights.push_back(lambda[j]);
    out.certificates.push_back(*cert);
    product *= f;
  }
  out.darboux = darboux_check(out.certificates, out.affine_weights);
  if (!out.darboux) throw InternalError("cofactors of a logarithmic form do not cancel");
  out.iif = iif_check(out.field, product);
  return out;
}

const char* ratio_status_name(RatioStatus s) { return s == RatioStatus::Satisfied ? "Satisfied" : "Violated"; }

std::vector<RatioEntry> ratio_condition_report(std::span<const GaussianRational> lambda) {
  for (const auto& l : lambda)
    if (l.is_zero()) throw DomainError("weights must be nonzero");
  std::vector<RatioEntry> out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      GaussianRational r = lambda[i] / lambda[j];
      out.push_back({static_cast<int>(i), static_cast<int>(j), r,
                     is_negative_rational(r) ? RatioStatus::Violated : RatioStatus::Satisfied});
    }
  }
  return out;
}

bool ratio_condition_holds(std::span<const GaussianRational> lambda) {
  auto rep = ratio_condition_report(lambda);
  return std::all_of(rep.begin(), rep.end(), [](const RatioEntry& e) { return e.status == RatioStatus::Satisfied; });
}

EeeSystem eee_system(const MultiPoly& g, const MultiPoly& h, const GaussianRational& a, const GaussianRational& b) {
  if (g.arity() != 2 || h.arity() != 2) throw ArityError("eee inputs must be in x, y");
  if (g.is_zero() || g.degree() < 1) throw DomainError("g must be a nonconstant curve");
  if (h.degree() != 1) throw DomainError("h must have degree exactly 1");
  if (a.im() != 0 || b.im() != 0) throw DomainError("a and b must be real");
  GaussianRational hx = h.coefficient({1, 0, 0}), hy = h.coefficient({0, 1, 0});
  if ((a * hx + b * hy).is_zero()) throw DomainError("a h_x + b h_y vanishes");
  MultiPoly gx = partial(g, 0), gy = partial(g, 1);
  AffineVectorField field(c2(a) * g - h * gy, c2(b) * g + h * gx);
  MultiPoly K = c2(a) * gx + c2(b) * gy;
  auto cert = invariance_check(field, g);
  if (!cert || cert->cofactor != K) throw InternalError("eee cofactor differs from a g_x + b g_y");
  return {field, *cert};
}

Thm2bPreset construct_thm2b(int m) {
  if (m < 1) throw DomainError("thm2b needs m >= 1");
  // Rational points of the unit circle, t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)).
  auto circle_point = [](const mpq_class& t) {
    mpq_class d = 1 + t * t;
    return std::pair<mpq_class, mpq_class>{(1 - t * t) / d, 2 * t / d};
  };
  auto chord = [](std::pair<mpq_class, mpq_class> p, std::pair<mpq_class, mpq_class> q) {
    // (qy - py)(X - px Z) - (qx - px)(Y - py Z)
    mpq_class dy = q.second - p.second, dx = q.first - p.first;
    mpq_class c = dx * p.second - dy * p.first;
    mpz_class l = lcm(lcm(dy.get_den(), dx.get_den()), c.get_den());
    mpz_class a = mpq_class(dy * l).get_num(), b = mpq_class(-dx * l).get_num(), e = mpq_class(c * l).get_num();
    mpz_class g = gcd(gcd(a, b), e);
    return GaussianRational(mpq_class(a / g)) * X3() + GaussianRational(mpq_class(b / g)) * Y3() +
           GaussianRational(mpq_class(e / g)) * Z3();
  };
  const MultiPoly circle = X3() * X3() + Y3() * Y3() - Z3() * Z3();
  const int lines = (m == 1) ? 3 : m;
  for (int attempt = 0; attempt < 64; ++attempt) {
    LogarithmicSpec spec;
    std::vector<mpq_class> ts;
    for (int j = 0; j < 2 * lines; ++j) {
      ts.emplace_back(j * j + j + 1, 2 * lines + 1 + attempt);
      ts.back().canonicalize();
    }
    GaussianRational sum;
    for (int j = 0; j < lines; ++j) {
      spec.curves.push_back(chord(circle_point(ts[2 * j]), circle_point(ts[2 * j + 1])));
      GaussianRational w(mpq_class(1), mpq_class(j * j + j + 1 + attempt));
      spec.weights.push_back(w);
      sum += w;
    }
    if (m == 1) {
      spec.weights.back() = spec.weights.back() - sum;
    } else {
      spec.curves.push_back(circle);
      spec.weights.push_back(-sum / GaussianRational(2));
    }
    if (!ratio_condition_holds(spec.weights)) continue;
    MultiPoly product = MultiPoly::constant(3, 1);
    for (const auto& F : spec.curves) product *= F;
    if (!is_squarefree(product)) continue;
    if (is_nodal(dehomogenize(product), true) != Tristate::True) continue;
    LogarithmicForm lf = logarithmic_form(spec);
    if (lf.degree != m || !(saturate(lf.form) == lf.form)) continue;
    if (infinity_invariant(lf.field)) throw InternalError("thm2b foliation leaves the line at infinity invariant");
    return {spec, lf};
  }
  throw InternalError("no general-position configuration found for thm2b");
}

ProjectiveOneForm example1_form(const GaussianRational& alpha, const GaussianRational& beta) {
  if (alpha.is_zero() || beta.is_zero()) throw DomainError("alpha and beta must be nonzero");
  return {alpha * (Y3() * Z3()), beta * (X3() * Z3()), -(alpha + beta) * (X3() * Y3())};
}

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names{
      "example1", "example2", "example3",    "three-lines", "circle",     "nodal-cubic", "quartic-4-ovals",
      "rotation", "conic",    "cubic",       "eee-circle",  "eee-quartic"};
  return names;
}

namespace {

MultiPoly quartic_4_ovals() {
  MultiPoly x = x2(), y = y2();
  MultiPoly one = c2(1);
  return (x * x + c2(2) * y * y - one) * (c2(2) * x * x + y * y - one) + c2(mpq_class(1, 100));
}

MultiPoly unit_circle() { return x2() * x2() + y2() * y2() - c2(1); }

}  // namespace

SystemDocument gallery(std::string_view name) {
  SystemDocument doc;
  auto curve = [&](std::string n, MultiPoly f, std::vector<std::string> comps = {}) {
    doc.curves.push_back({std::move(n), std::move(f), std::move(comps)});
  };
  auto param = [&](std::string n, GaussianRational v) { doc.params.push_back({std::move(n), std::move(v)}); };
  const MultiPoly X = X3(), Y = Y3(), Z = Z3();
  auto k3 = [](long v) { return MultiPoly::constant(3, v); };

  if (name == "example1") {
    doc.forms.push_back({"omega", example1_form(1, GaussianRational(0, 1))});
    curve("S", x2());
    param("chi", 2);
  } else if (name == "example2") {
    doc.forms.push_back({"omega", ProjectiveOneForm((k3(2) * Y * Z - X * X) * Z, X * (Y + Z) * Z,
                                                    X * X * X - X * Y * Y - k3(3) * X * Y * Z)});
    curve("S", x2());
    param("chi", 2);
  } else if (name == "example3") {
    doc.forms.push_back({"omega", ProjectiveOneForm((X * X * X - k3(2) * Y * Y * Z) * Z, -(X * (Y * Y + Z * Z) * Z),
                                                    -(X * X * X * X - k3(2) * X * Y * Y * Z - X * Y * Z * Z - X * Y * Y * Y))});
    curve("S", x2());
    param("chi", 2);
  } else if (name == "three-lines") {
    std::vector<GaussianRational> lambda{1, GaussianRational(0, 1), GaussianRational(-1, -1)};
    LogarithmicForm lf = logarithmic_form({{X, Y, Y - X - Z}, lambda});
    doc.forms.push_back({"omega", lf.form});
    curve("S", x2() * y2() * (y2() - x2() - c2(1)), {"f1", "f2", "f3"});
    curve("f1", x2());
    curve("f2", y2());
    curve("f3", y2() - x2() - c2(1));
    for (int k = 0; k < 3; ++k) param("lambda" + std::to_string(k + 1), lambda[k]);
  } else if (name == "circle") {
    curve("S", unit_circle());
  } else if (name == "nodal-cubic") {
    curve("S", y2() * y2() - x2() * x2() * (x2() + c2(1)));
  } else if (name == "quartic-4-ovals") {
    curve("S", quartic_4_ovals());
  } else if (name == "rotation") {
    doc.fields.push_back({"X", AffineVectorField(-y2(), x2())});
    curve("S", unit_circle());
  } else if (name == "conic") {
    curve("S", x2() * x2() + c2(4) * y2() * y2() - c2(1));
  } else if (name == "cubic") {
    curve("S", x2() * x2() * x2() - x2() * y2() * y2() - c2(1));
  } else if (name == "eee-circle" || name == "eee-quartic") {
    MultiPoly g = name == "eee-circle" ? unit_circle() : quartic_4_ovals();
    EeeSystem e = eee_system(g, x2() - c2(2), 1, 1);
    doc.fields.push_back({"X", e.field});
    curve("S", g);
    curve("h", x2() - c2(2));
    param("a", 1);
    param("b", 1);
  } else {
    throw DocumentError("unknown gallery entry '" + std::string(name) + "'");
  }
  return doc;
}

}  // namespace folia
