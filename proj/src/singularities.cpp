#include "folia/singularities.hpp"

#include <algorithm>

#include "folia/errors.hpp"

namespace folia {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NonDicritical: return "non-dicritical";
    case Verdict::Dicritical: return "dicritical";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

const char* reason_name(VerdictReason r) {
  switch (r) {
    case VerdictReason::NonResonantRatio: return "eigenvalue-ratio-not-positive-rational";
    case VerdictReason::StarNode: return "star-node";
    case VerdictReason::ZeroEigenvalue: return "zero-eigenvalue";
    case VerdictReason::ResonantPositiveRatio: return "positive-rational-ratio";
  }
  return "?";
}

const char* tristate_name(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
  }
  return "?";
}

PointSet affine_singularities(const AffineVectorField& X) {
  PlanarField F = X.planar();
  AffineZeros z = common_zeros({F.a, F.b});
  PointSet out;
  out.residual = z.residual;
  for (const auto& p : z.points) out.points.push_back(ProjectivePoint::affine(p.x, p.y));
  return out;
}

PointSet infinite_singularities(const ProjectiveOneForm& w) {
  std::vector<MultiPoly> restricted;
  for (const auto& c : w.components()) {
    MultiPoly r(3);
    for (const auto& [e, v] : c.terms()) {
      if (e[2] == 0) r.add_term(e, v);
    }
    restricted.push_back(r);
  }
  MultiPoly g = gcd(std::span<const MultiPoly>(restricted));
  if (g.is_zero()) throw DomainError("the line Z = 0 consists of singular points");
  PointSet out;
  if (g.is_constant()) return out;
  ProjectiveZeros z = binary_form_zeros(g);
  out.points = z.points;
  out.residual = z.residual;
  return out;
}

std::array<std::array<GaussianRational, 2>, 2> jacobian_at(const PlanarField& F, const std::array<GaussianRational, 2>& at) {
  return {{{partial(F.a, 0).evaluate(at), partial(F.a, 1).evaluate(at)},
           {partial(F.b, 0).evaluate(at), partial(F.b, 1).evaluate(at)}}};
}

std::pair<Verdict, VerdictReason> classify_jacobian(const std::array<std::array<GaussianRational, 2>, 2>& J) {
  GaussianRational det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
  GaussianRational tr = J[0][0] + J[1][1];
  if (det.is_zero()) return {Verdict::Unknown, VerdictReason::ZeroEigenvalue};
  if (J[0][1].is_zero() && J[1][0].is_zero() && J[0][0] == J[1][1]) return {Verdict::Dicritical, VerdictReason::StarNode};
  // rho = l1/l2 solves rho^2 + (2 - s) rho + 1 = 0 with s = tr^2/det; rho is a
  // positive rational iff s is rational, s >= 4 and s(s - 4) is a square.
  GaussianRational s = tr * tr / det;
  if (s.is_real() && s.re() >= 4 && rational_sqrt(s.re() * (s.re() - 4))) {
    return {Verdict::Unknown, VerdictReason::ResonantPositiveRatio};
  }
  return {Verdict::NonDicritical, VerdictReason::NonResonantRatio};
}

SingularityRecord classify_in_chart(const PlanarField& F, Chart chart, const ProjectivePoint& p) {
  auto at = chart_coordinates(p, chart);
  if (!F.a.evaluate(at).is_zero() || !F.b.evaluate(at).is_zero()) throw PreconditionError("point is not a singularity");
  auto J = jacobian_at(F, at);
  auto [v, r] = classify_jacobian(J);
  return {p, chart, J, v, r};
}

SingularityRecord classify_dicritical(const AffineVectorField& X, const ProjectivePoint& p) {
  Chart c = chart_for(p);
  if (c == Chart::Z) return classify_in_chart(X.planar(), c, p);
  return classify_in_chart(chart_field(saturate(projectivize(X)), c), c, p);
}

CurveSingularity local_singularity(const MultiPoly& f, const std::array<GaussianRational, 2>& at, const ProjectivePoint& p) {
  MultiPoly g = translate(f, at);
  CurveSingularity s{p, g.is_zero() ? 0 : g.order(), false};
  if (s.order == 2) {
    MultiPoly q = g.homogeneous_part(2);
    GaussianRational a = q.coefficient({2, 0, 0}), b = q.coefficient({1, 1, 0}), c = q.coefficient({0, 2, 0});
    s.is_node = !(b * b - GaussianRational(4) * a * c).is_zero();
  }
  return s;
}

CurveSingularities curve_singularities(const MultiPoly& f) {
  if (f.arity() != 2) throw ArityError("curve must be in x, y");
  if (!is_squarefree(f)) throw DomainError("curve is not squarefree");
  CurveSingularities out;
  if (f.degree() <= 1) return out;
  AffineZeros z = common_zeros({f, partial(f, 0), partial(f, 1)});
  out.residual = z.residual;
  for (const auto& p : z.points) {
    std::array<GaussianRational, 2> at{p.x, p.y};
    out.points.push_back(local_singularity(f, at, ProjectivePoint::affine(p.x, p.y)));
  }
  return out;
}

namespace {

// Points of the closure of f on Z = 0.
ProjectiveZeros points_at_infinity(const MultiPoly& f) {
  MultiPoly top = leading_form(f);
  std::array<int, 2> vars{0, 1};
  return binary_form_zeros(change_arity(top, 3, vars));
}

}  // namespace

CurveSingularities infinite_curve_singularities(const MultiPoly& f) {
  CurveSingularities out;
  if (f.degree() <= 1) return out;
  MultiPoly F = homogenize(f, f.degree());
  ProjectiveZeros z = points_at_infinity(f);
  out.residual = z.residual;
  for (const auto& p : z.points) {
    Chart c = chart_for(p);
    MultiPoly g = chart_polynomial(F, c);
    auto at = chart_coordinates(p, c);
    if (!partial(g, 0).evaluate(at).is_zero() || !partial(g, 1).evaluate(at).is_zero()) continue;
    out.points.push_back(local_singularity(g, at, p));
  }
  return out;
}

Tristate is_nodal(const MultiPoly& f, bool include_infinity) {
  CurveSingularities affine = curve_singularities(f);
  for (const auto& s : affine.points) {
    if (!s.is_node) return Tristate::False;
  }
  bool unknown = affine.residual > 0;
  if (include_infinity && f.degree() >= 1) {
    MultiPoly F = homogenize(f, f.degree());
    ProjectiveZeros z = points_at_infinity(f);
    if (z.residual > 0) unknown = true;
    for (const auto& p : z.points) {
      Chart c = chart_for(p);
      MultiPoly g = chart_polynomial(F, c);
      auto at = chart_coordinates(p, c);
      GaussianRational gu = partial(g, 0).evaluate(at), gv = partial(g, 1).evaluate(at);
      if (!gu.is_zero()) continue;  // smooth, tangent not Z = 0
      if (!gv.is_zero()) return Tristate::False;  // smooth but tangent to Z = 0
      if (!local_singularity(g, at, p).is_node) return Tristate::False;
    }
  }
  return unknown ? Tristate::Unknown : Tristate::True;
}

}  // namespace folia
