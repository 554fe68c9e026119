#include "folia/branches.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "folia/errors.hpp"

namespace folia {

namespace {

MultiPoly var2(int k) { return MultiPoly::variable(2, k); }

MultiPoly swap_variables(const MultiPoly& h) {
  std::vector<MultiPoly> values{var2(1), var2(0)};
  return substitute(h, values);
}

Series shifted(const GaussianRational& c, const Series& s) {
  Series out = s;
  out[0] += c;
  return out;
}

// t * (k + s(t)) mod t^(n)
Series times_t(const GaussianRational& k, const Series& s, std::size_t n) {
  Series out(n);
  if (n > 1) out[1] = k;
  for (std::size_t j = 0; j + 1 < n && j < s.size(); ++j) out[j + 1] += s[j];
  return out;
}

void verify_on_curve(const MultiPoly& g, const Branch& b) {
  Series v = series_compose(g, b.phi1, b.phi2, b.truncation + 1);
  if (series_order(v) >= 0) throw InternalError("branch does not satisfy the curve equation");
}

MultiPoly restrict_to_infinity(const MultiPoly& F) {
  MultiPoly r(3);
  for (const auto& [e, v] : F.terms()) {
    if (e[2] == 0) r.add_term(e, v);
  }
  return r;
}

std::string describe(const ProjectivePoint& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

// Singular points of the closure of f, affine and at infinity.
CurveSingularities projective_singularities(const MultiPoly& f) {
  CurveSingularities a = curve_singularities(f);
  CurveSingularities b = infinite_curve_singularities(f);
  a.points.insert(a.points.end(), b.points.begin(), b.points.end());
  a.residual += b.residual;
  return a;
}

}  // namespace

Branch smooth_branch(const MultiPoly& g, Chart chart, const ProjectivePoint& p, int param, int N) {
  auto c = chart_coordinates(p, chart);
  MultiPoly h = translate(g, c);
  const std::size_t n = static_cast<std::size_t>(N) + 1;
  Series t(n);
  if (n > 1) t[1] = 1;
  Branch b{p, chart, c, {}, {}, N, true};
  if (param == 0) {
    Series psi = implicit_series(h, n);
    b.phi1 = shifted(c[0], t);
    b.phi2 = shifted(c[1], psi);
  } else {
    Series psi = implicit_series(swap_variables(h), n);
    b.phi1 = shifted(c[0], psi);
    b.phi2 = shifted(c[1], t);
  }
  verify_on_curve(g, b);
  return b;
}

LocalBranches local_branches(const MultiPoly& g, Chart chart, const ProjectivePoint& p, int N) {
  if (N < 1) throw DomainError("truncation must be positive");
  auto c = chart_coordinates(p, chart);
  MultiPoly h = translate(g, c);
  if (h.is_zero()) throw DomainError("zero curve");
  LocalBranches out;
  const int order = h.order();
  if (order == 0) throw PreconditionError("point is not on the curve");
  if (order == 1) {
    bool vertical = h.coefficient({0, 1, 0}).is_zero();
    out.branches.push_back(smooth_branch(g, chart, p, vertical ? 1 : 0, N));
    return out;
  }
  CurveSingularity s = local_singularity(g, c, p);
  if (!s.is_node) {
    out.supported = false;
    out.reason = "singular point of order " + std::to_string(order) + " that is not a node";
    return out;
  }
  GaussianRational a = h.coefficient({2, 0, 0}), bq = h.coefficient({1, 1, 0}), cq = h.coefficient({0, 2, 0});
  std::vector<std::optional<GaussianRational>> slopes;  // nullopt is the direction (0, 1)
  if (!cq.is_zero()) {
    auto root = gaussian_sqrt(bq * bq - GaussianRational(4) * a * cq);
    if (!root) {
      out.supported = false;
      out.reason = "node with tangent directions outside Q(i)";
      return out;
    }
    GaussianRational two_c = GaussianRational(2) * cq;
    slopes.emplace_back((-bq + *root) / two_c);
    slopes.emplace_back((-bq - *root) / two_c);
  } else {
    slopes.emplace_back(-a / bq);
    slopes.emplace_back(std::nullopt);
  }
  const std::size_t n = static_cast<std::size_t>(N) + 1;
  Series t(n);
  t[1] = 1;
  MultiPoly w = var2(0), v = var2(1);
  MultiPoly w2 = w * w;
  for (const auto& k : slopes) {
    Branch b{p, chart, c, {}, {}, N, false};
    if (k) {
      std::vector<MultiPoly> values{w, w * (MultiPoly::constant(2, *k) + v)};
      auto blown = exact_divide(substitute(h, values), w2);
      if (!blown) throw InternalError("blow-up of a node is not divisible by w^2");
      Series psi = implicit_series(*blown, n - 1);
      b.phi1 = shifted(c[0], t);
      b.phi2 = shifted(c[1], times_t(*k, psi, n));
    } else {
      std::vector<MultiPoly> values{w * v, w};
      auto blown = exact_divide(substitute(h, values), w2);
      if (!blown) throw InternalError("blow-up of a node is not divisible by w^2");
      Series psi = implicit_series(*blown, n - 1);
      b.phi1 = shifted(c[0], times_t(0, psi, n));
      b.phi2 = shifted(c[1], t);
    }
    verify_on_curve(g, b);
    out.branches.push_back(std::move(b));
  }
  return out;
}

LocalBranches local_branches(const MultiPoly& f, const ProjectivePoint& p, int N) {
  if (f.arity() != 2) throw ArityError("curve must be in x, y");
  Chart c = chart_for(p);
  return local_branches(chart_polynomial(homogenize(f, f.degree()), c), c, p, N);
}

Multiplicity branch_multiplicity(const PlanarField& F, const Branch& B) {
  const int N = B.truncation;
  const std::size_t n = static_cast<std::size_t>(N) + 1;
  Series A1 = series_compose(F.a, B.phi1, B.phi2, n);
  Series A2 = series_compose(F.b, B.phi1, B.phi2, n);
  Series d1 = series_derivative(B.phi1), d2 = series_derivative(B.phi2);
  Series lhs = series_mul(A1, d2, N), rhs = series_mul(A2, d1, N);
  for (int k = 0; k < N; ++k) {
    if (lhs[k] != rhs[k]) throw PreconditionError("pullback is inconsistent: the branch is not invariant");
  }
  int o1 = series_order(d1), o2 = series_order(d2);
  const bool use_first = o1 >= 0 && (o2 < 0 || o1 <= o2);
  const Series& A = use_first ? A1 : A2;
  const Series& d = use_first ? d1 : d2;
  const int e = use_first ? o1 : o2;
  if (e < 0) throw InternalError("branch parameterization is constant");
  for (int k = 0; k < e; ++k) {
    if (!A[k].is_zero()) throw PreconditionError("field is transversal to the branch");
  }
  const std::size_t len = static_cast<std::size_t>(N - e);
  Series a_tail(A.begin() + e, A.end()), d_tail(d.begin() + e, d.end());
  Series R = series_mul(a_tail, series_inverse(d_tail, len), len);
  Multiplicity out;
  out.truncation = N;
  out.mu = series_order(R);
  out.certified = out.mu >= 0;
  return out;
}

int default_truncation(int m, int deg_f) {
  if (const char* env = std::getenv("FOLIA_TRUNCATION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 100000) return static_cast<int>(v);
  }
  return std::max(4, 2 * (m + 2) * std::max(deg_f, 1));
}

std::optional<std::vector<Multiplicity>> multiplicities_at(const PlanarField& F, const MultiPoly& g, Chart chart,
                                                           const ProjectivePoint& p, int N) {
  std::vector<Multiplicity> out;
  for (int attempt = 0; attempt <= 3; ++attempt) {
    LocalBranches lb = local_branches(g, chart, p, N << attempt);
    if (!lb.supported) return std::nullopt;
    out.clear();
    for (const auto& b : lb.branches) out.push_back(branch_multiplicity(F, b));
    if (std::all_of(out.begin(), out.end(), [](const Multiplicity& m) { return m.certified; })) break;
  }
  return out;
}

PointSet foliation_singularities_on(const ProjectiveOneForm& w, const MultiPoly& f) {
  if (f.arity() != 2 || f.degree() < 1) throw DomainError("curve must be a nonconstant polynomial in x, y");
  ProjectiveOneForm s = saturate(w);
  PlanarField affine = chart_field(s, Chart::Z);
  PointSet out;
  AffineZeros z = common_zeros({f, affine.a, affine.b});
  out.residual = z.residual;
  for (const auto& p : z.points) out.points.push_back(ProjectivePoint::affine(p.x, p.y));
  std::vector<MultiPoly> at_infinity;
  for (const auto& c : s.components()) at_infinity.push_back(restrict_to_infinity(c));
  at_infinity.push_back(restrict_to_infinity(homogenize(f, f.degree())));
  MultiPoly g = gcd(std::span<const MultiPoly>(at_infinity));
  if (g.is_zero()) throw DomainError("line at infinity is singular for the foliation");
  if (!g.is_constant()) {
    ProjectiveZeros pz = binary_form_zeros(g);
    out.points.insert(out.points.end(), pz.points.begin(), pz.points.end());
    out.residual += pz.residual;
  }
  return out;
}

EulerReport euler_identity_check(const ProjectiveOneForm& w, const MultiPoly& f, int chi, std::optional<int> truncation) {
  ProjectiveOneForm s = saturate(w);
  EulerReport rep;
  rep.n = f.degree();
  rep.m = s.degree();
  rep.chi_claimed = chi;
  if (!invariance_check(affinize(s), f)) throw PreconditionError("curve is not invariant under the foliation");
  const int N = truncation ? *truncation : default_truncation(rep.m, rep.n);
  PointSet pts = foliation_singularities_on(s, f);
  if (pts.residual > 0) {
    rep.checkable = false;
    rep.reason = std::to_string(pts.residual) + " singular point(s) with coordinates outside Q(i)";
  }
  MultiPoly F = homogenize(f, f.degree());
  for (const auto& p : pts.points) {
    Chart c = chart_for(p);
    auto mus = multiplicities_at(chart_field(s, c), chart_polynomial(F, c), c, p, N);
    if (!mus) {
      rep.checkable = false;
      rep.reason = "unsupported branch at " + describe(p);
      continue;
    }
    for (std::size_t k = 0; k < mus->size(); ++k) {
      const Multiplicity& mu = (*mus)[k];
      rep.table.push_back({p, c, static_cast<int>(k), mu.mu, mu.certified});
      if (!mu.certified) {
        rep.checkable = false;
        rep.reason = "multiplicity not certified at " + describe(p);
        continue;
      }
      rep.sum_mu += mu.mu;
    }
  }
  rep.rhs = rep.sum_mu - rep.n * (rep.m - 1);
  rep.identity_holds = rep.checkable && rep.rhs == chi;
  return rep;
}

EulerReport euler_identity_check(const AffineVectorField& X, const MultiPoly& f, int chi, std::optional<int> truncation) {
  return euler_identity_check(projectivize(X), f, chi, truncation);
}

InfinityBranchData infinity_branch_data(const AffineVectorField& X, const MultiPoly& f, const ProjectivePoint& p,
                                        std::optional<int> truncation) {
  if (!invariance_check(X, f)) throw PreconditionError("curve is not invariant under the field");
  if (!X.r().is_zero()) throw PreconditionError("the inversion chart formula assumes r = 0");
  if (!p.at_infinity()) throw DomainError("point is not on the line at infinity");
  Chart c = chart_for(p);
  MultiPoly g = chart_polynomial(homogenize(f, f.degree()), c);
  auto at = chart_coordinates(p, c);
  if (!g.evaluate(at).is_zero()) throw PreconditionError("point is not on the curve");
  if (partial(g, 0).evaluate(at).is_zero()) throw PreconditionError("curve is not transversal to the line at infinity");
  const int N = truncation ? *truncation : default_truncation(X.degree(), f.degree());
  Branch B = smooth_branch(g, c, p, 1, N);

  PlanarField G = inversion_chart_field(X, c);
  auto factor = exact_divide(G.b, -var2(1));
  if (!factor) throw InternalError("inversion chart field lacks the factor v");
  Series along = series_compose(*factor, B.phi1, B.phi2, static_cast<std::size_t>(N) + 1);
  InfinityBranchData out{p, series_order(along), 0, 0, 0, false};
  if (out.l < 0) throw NumericError("the factor vanishes along the branch up to the truncation order");
  out.mu = out.l + 1;
  Multiplicity mb = branch_multiplicity(G, B);
  Multiplicity mp = branch_multiplicity(chart_field(saturate(projectivize(X)), c), B);
  out.mu_branch = mb.mu;
  out.mu_projective = mp.mu;
  out.consistent = mb.certified && mp.certified && out.mu == mb.mu && mb.mu == mp.mu;
  return out;
}

AffineVectorField hamiltonian_field(const MultiPoly& f) { return {-partial(f, 1), partial(f, 0)}; }

GenusReport genus_and_chi(const MultiPoly& f, std::span<const MultiPoly> components) {
  if (components.empty()) throw DomainError("at least one component is required");
  MultiPoly product = MultiPoly::constant(2, 1);
  for (const auto& c : components) product *= c;
  if (make_monic(product) != make_monic(f)) throw DomainError("components do not multiply to the curve");
  CurveSingularities all = projective_singularities(f);
  if (all.residual > 0) throw PreconditionError("singular points outside Q(i)");
  for (const auto& s : all.points) {
    if (!s.is_node) throw DomainError("curve is not nodal");
  }
  GenusReport rep;
  for (const auto& c : components) {
    const int d = c.degree();
    if (d < 1) throw DomainError("constant component");
    CurveSingularities own = projective_singularities(c);
    if (own.residual > 0) throw PreconditionError("singular points outside Q(i)");
    const int delta = static_cast<int>(own.points.size());
    const int g = (d - 1) * (d - 2) / 2 - delta;
    if (g < 0) throw DomainError("component is reducible (negative genus)");
    rep.degrees.push_back(d);
    rep.nodes.push_back(delta);
    rep.genera.push_back(g);
    rep.chi += 2 - 2 * g;
  }
  return rep;
}

Corollary2Report corollary2_check(const MultiPoly& f) {
  Corollary2Report rep;
  rep.n = f.degree();
  if (rep.n < 1) throw DomainError("curve must have positive degree");
  rep.chi_formula = -rep.n * (rep.n - 3);
  CurveSingularities sing = projective_singularities(f);
  if (!sing.points.empty() || sing.residual > 0) throw PreconditionError("curve is not smooth");
  std::array<int, 2> vars{0, 1};
  ProjectiveZeros inf = binary_form_zeros(change_arity(leading_form(f), 3, vars));
  if (inf.residual > 0 || static_cast<int>(inf.points.size()) != rep.n) {
    throw PreconditionError("curve does not meet Z = 0 transversally in n points of Q(i)");
  }
  AffineVectorField X = hamiltonian_field(f);
  rep.euler = euler_identity_check(X, f, rep.chi_formula);
  bool ok = true;
  for (const auto& p : inf.points) {
    rep.at_infinity.push_back(infinity_branch_data(X, f, p));
    ok = ok && rep.at_infinity.back().consistent && rep.at_infinity.back().mu == 1;
  }
  for (const auto& e : rep.euler.table) ok = ok && e.mu == 1;
  rep.all_mu_one = ok;
  rep.holds = rep.euler.identity_holds && rep.all_mu_one;
  return rep;
}

}  // namespace folia
