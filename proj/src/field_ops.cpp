#include "folia/field_ops.hpp"

#include <algorithm>

#include "folia/errors.hpp"

namespace folia {

namespace {

MultiPoly var2(int k) { return MultiPoly::variable(2, k); }
MultiPoly var3(int k) { return MultiPoly::variable(3, k); }

// Homogenization that tolerates the zero polynomial.
MultiPoly homogenize_or_zero(const MultiPoly& f, int n) {
  return f.is_zero() ? MultiPoly(3) : homogenize(f, n);
}

}  // namespace

AffineVectorField::AffineVectorField(MultiPoly p, MultiPoly q, MultiPoly r)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {
  if (p_.arity() != 2 || q_.arity() != 2 || r_.arity() != 2) throw ArityError("vector field components must be in x, y");
  if (p_.is_zero() && q_.is_zero() && r_.is_zero()) throw DomainError("zero vector field has no degree");
  m_ = std::max({p_.degree(), q_.degree(), r_.degree()});
  if (!r_.is_zero() && (!r_.is_homogeneous() || r_.degree() != m_)) {
    throw DomainError("r must be zero or homogeneous of the field degree");
  }
}

PlanarField AffineVectorField::planar() const { return {p_ + var2(0) * r_, q_ + var2(1) * r_}; }

ProjectiveOneForm::ProjectiveOneForm(MultiPoly P, MultiPoly Q, MultiPoly R) : c_{std::move(P), std::move(Q), std::move(R)} {
  int d = kDegreeOfZero;
  for (const auto& c : c_) {
    if (c.arity() != 3) throw ArityError("one-form components must be in X, Y, Z");
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) throw DomainError("one-form components must be homogeneous");
    if (d != kDegreeOfZero && c.degree() != d) throw DomainError("one-form components differ in degree");
    d = c.degree();
  }
  if (d == kDegreeOfZero) throw DomainError("zero one-form");
  if (d < 1) throw DomainError("one-form components must have degree at least 1");
  if (!(var3(0) * c_[0] + var3(1) * c_[1] + var3(2) * c_[2]).is_zero()) {
    throw DomainError("projective condition XP + YQ + ZR = 0 fails");
  }
  m_ = d - 1;
}

MultiPoly lie_derivative(const PlanarField& X, const MultiPoly& f) {
  return X.a * partial(f, 0) + X.b * partial(f, 1);
}

MultiPoly lie_derivative(const AffineVectorField& X, const MultiPoly& f) { return lie_derivative(X.planar(), f); }

std::optional<CofactorCertificate> invariance_check(const AffineVectorField& X, const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("the zero polynomial is not a curve");
  if (f.arity() != 2) throw ArityError("curve must be in x, y");
  MultiPoly xf = lie_derivative(X, f);
  auto k = exact_divide(xf, f);
  if (!k) return std::nullopt;
  CofactorCertificate cert;
  cert.curve = f;
  cert.cofactor = *k;
  cert.residual_check = (xf - *k * f).is_zero();
  if (!cert.residual_check) throw InternalError("cofactor fails re-multiplication");
  cert.cofactor_degree = k->degree();
  cert.degree_bound = X.r().is_zero() ? X.degree() - 1 : X.degree();
  cert.within_degree_bound = k->is_zero() || k->degree() <= cert.degree_bound;
  return cert;
}

ProjectiveOneForm projectivize(const AffineVectorField& X) {
  const int m = X.degree();
  MultiPoly P = homogenize_or_zero(X.p(), m);
  MultiPoly Q = homogenize_or_zero(X.q(), m);
  MultiPoly R = homogenize_or_zero(X.r(), m);
  MultiPoly Xv = var3(0), Yv = var3(1), Zv = var3(2);
  MultiPoly a = Zv * Q + Yv * R;
  MultiPoly b = -(Zv * P + Xv * R);
  MultiPoly c = Yv * P - Xv * Q;
  if (!(Xv * a + Yv * b + Zv * c).is_zero()) throw InternalError("projectivized form violates the projective condition");
  return {a, b, c};
}

ProjectiveOneForm saturate(const ProjectiveOneForm& w) {
  MultiPoly g = gcd(std::span<const MultiPoly>(w.components()));
  if (g.is_constant()) return w;
  std::array<MultiPoly, 3> out;
  for (int k = 0; k < 3; ++k) {
    auto q = exact_divide(w.components()[k], g);
    if (!q) throw InternalError("gcd does not divide a form component");
    out[k] = *q;
  }
  return {out[0], out[1], out[2]};
}

AffineVectorField affinize(const ProjectiveOneForm& w) {
  ProjectiveOneForm s = saturate(w);
  const int m = s.degree();
  MultiPoly A = -dehomogenize(s.Q());
  MultiPoly B = dehomogenize(s.P());
  MultiPoly top = A.homogeneous_part(m + 1);
  MultiPoly r(2);
  if (!top.is_zero()) {
    auto d = exact_divide(top, var2(0));
    if (!d) throw InternalError("top-degree part of the chart field is not radial");
    r = *d;
  }
  MultiPoly p = A - var2(0) * r;
  MultiPoly q = B - var2(1) * r;
  if (!p.homogeneous_part(m + 1).is_zero() || !q.homogeneous_part(m + 1).is_zero()) {
    throw InternalError("affinization left a term of degree m + 1");
  }
  return {p, q, r};
}

std::array<MultiPoly, 2> affine_one_form(const AffineVectorField& X) {
  PlanarField f = X.planar();
  return {f.b, -f.a};
}

bool infinity_invariant(const AffineVectorField& X) { return X.r().is_zero(); }

MultiPoly divergence(const PlanarField& X) { return partial(X.a, 0) + partial(X.b, 1); }

MultiPoly divergence(const AffineVectorField& X) { return divergence(X.planar()); }

bool iif_check(const AffineVectorField& X, const MultiPoly& V) {
  if (V.is_zero()) throw DomainError("inverse integrating factor must be nonzero");
  return (lie_derivative(X, V) - divergence(X) * V).is_zero();
}

bool darboux_check(std::span<const CofactorCertificate> certs, std::span<const GaussianRational> lambda) {
  if (certs.size() != lambda.size()) throw DomainError("one weight per certificate is required");
  MultiPoly sum(2);
  for (std::size_t k = 0; k < certs.size(); ++k) {
    if (!certs[k].residual_check) throw PreconditionError("certificate was not verified");
    sum += lambda[k] * certs[k].cofactor;
  }
  return sum.is_zero();
}

const char* chart_name(Chart c) {
  switch (c) {
    case Chart::Z: return "Z=1";
    case Chart::Y: return "Y=1";
    case Chart::X: return "X=1";
  }
  return "?";
}

Chart chart_for(const ProjectivePoint& p) {
  if (!p[2].is_zero()) return Chart::Z;
  if (!p[1].is_zero()) return Chart::Y;
  return Chart::X;
}

std::array<GaussianRational, 2> chart_coordinates(const ProjectivePoint& p, Chart c) {
  switch (c) {
    case Chart::Z:
      if (p[2].is_zero()) break;
      return {p[0] / p[2], p[1] / p[2]};
    case Chart::Y:
      if (p[1].is_zero()) break;
      return {p[0] / p[1], p[2] / p[1]};
    case Chart::X:
      if (p[0].is_zero()) break;
      return {p[1] / p[0], p[2] / p[0]};
  }
  throw DomainError("point is not in the requested chart");
}

ProjectivePoint from_chart(Chart c, const GaussianRational& u, const GaussianRational& v) {
  switch (c) {
    case Chart::Z: return {u, v, 1};
    case Chart::Y: return {u, 1, v};
    case Chart::X: return {1, u, v};
  }
  throw DomainError("unknown chart");
}

MultiPoly chart_polynomial(const MultiPoly& F, Chart c) {
  if (F.arity() != 3) throw ArityError("chart restriction needs a polynomial in X, Y, Z");
  MultiPoly one = MultiPoly::constant(2, 1);
  std::vector<MultiPoly> values;
  switch (c) {
    case Chart::Z: values = {var2(0), var2(1), one}; break;
    case Chart::Y: values = {var2(0), one, var2(1)}; break;
    case Chart::X: values = {one, var2(0), var2(1)}; break;
  }
  return substitute(F, values);
}

PlanarField chart_field(const ProjectiveOneForm& w, Chart c) {
  switch (c) {
    case Chart::Z: return {-chart_polynomial(w.Q(), c), chart_polynomial(w.P(), c)};
    case Chart::Y: return {-chart_polynomial(w.R(), c), chart_polynomial(w.P(), c)};
    case Chart::X: return {-chart_polynomial(w.R(), c), chart_polynomial(w.Q(), c)};
  }
  throw DomainError("unknown chart");
}

PlanarField inversion_chart_field(const AffineVectorField& X, Chart c) {
  if (!X.r().is_zero()) throw PreconditionError("the inversion chart formula assumes r = 0");
  if (c == Chart::Z) throw DomainError("inversion chart must be X or Y");
  const int m = X.degree();
  const MultiPoly u = var2(0), v = var2(1);
  // v^m p(1/v, u/v) is the homogenization evaluated at (1, u, v).
  const Chart at = c;
  MultiPoly pt = chart_polynomial(homogenize_or_zero(X.p(), m), at);
  MultiPoly qt = chart_polynomial(homogenize_or_zero(X.q(), m), at);
  if (c == Chart::X) return {qt - u * pt, -(v * pt)};
  return {pt - u * qt, -(v * qt)};
}

}  // namespace folia
