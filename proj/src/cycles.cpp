#include "folia/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "folia/errors.hpp"
#include "folia/kernels.hpp"

namespace folia {

namespace {

using kernels::DensePoly2;

struct RealField {
  DensePoly2 a, b, div;

  explicit RealField(const AffineVectorField& X) {
    if (!X.is_real()) throw DomainError("dynamics needs a real vector field");
    PlanarField p = X.planar();
    a = DensePoly2::from(p.a);
    b = DensePoly2::from(p.b);
    div = DensePoly2::from(divergence(p));
  }
};

double eval1(const DensePoly2& p, double x, double y) {
  double v, e;
  kernels::eval(p, &x, &y, 1, &v, &e);
  return v;
}

struct Sums {
  double D = 0, T = 0;
};

// Midpoint rule over the polyline using every `stride`-th vertex.
Sums midpoint_sums(const RealField& F, const Polyline& oval, std::size_t stride) {
  const std::size_t n = oval.size() - 1;  // distinct vertices
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < n; k += stride) idx.push_back(k);
  idx.push_back(n);
  const std::size_t m = idx.size() - 1;
  std::vector<double> mx(m), my(m), ds(m), a(m), b(m), dv(m), err(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Point2& p = oval[idx[k]];
    const Point2& q = oval[idx[k + 1]];
    mx[k] = 0.5 * (p[0] + q[0]);
    my[k] = 0.5 * (p[1] + q[1]);
    ds[k] = std::hypot(q[0] - p[0], q[1] - p[1]);
  }
  kernels::eval(F.a, mx.data(), my.data(), m, a.data(), err.data());
  kernels::eval(F.b, mx.data(), my.data(), m, b.data(), err.data());
  kernels::eval(F.div, mx.data(), my.data(), m, dv.data(), err.data());
  Sums s;
  for (std::size_t k = 0; k < m; ++k) {
    double speed = std::hypot(a[k], b[k]);
    if (!(speed > 1e-12)) throw NumericError("vector field vanishes on the oval; not a periodic orbit");
    double dt = ds[k] / speed;
    s.D += dv[k] * dt;
    s.T += dt;
  }
  return s;
}

}  // namespace

DivergenceIntegral divergence_integral(const AffineVectorField& X, const Polyline& oval) {
  RealField F(X);
  if (oval.size() < 17) throw DomainError("polyline too short for extrapolation");
  if (oval.front() != oval.back()) throw DomainError("polyline is not closed");
  Sums s1 = midpoint_sums(F, oval, 1), s2 = midpoint_sums(F, oval, 2), s4 = midpoint_sums(F, oval, 4);
  DivergenceIntegral out;
  out.D = (4 * s1.D - s2.D) / 3;
  out.T = (4 * s1.T - s2.T) / 3;
  out.D_coarse = (4 * s2.D - s4.D) / 3;
  out.error = std::fabs(out.D - out.D_coarse);
  out.relative_agreement = out.D != 0 ? out.error / std::fabs(out.D) : std::numeric_limits<double>::infinity();
  return out;
}

const char* stability_name(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::Unstable: return "Unstable";
    case Stability::Undetermined: return "Undetermined";
  }
  return "?";
}

CycleCertificate certify_cycle(const AffineVectorField& X, const Polyline& oval, int oval_id) {
  DivergenceIntegral di = divergence_integral(X, oval);
  CycleCertificate c;
  c.oval_id = oval_id;
  c.T = di.T;
  c.D = di.D;
  c.error = di.error;
  c.hyperbolic = std::fabs(di.D) > 1000 * di.error;
  c.stability = !c.hyperbolic ? Stability::Undetermined : (di.D < 0 ? Stability::Stable : Stability::Unstable);
  return c;
}

std::vector<LocationResult> location_check(const AffineVectorField& X, const MultiPoly& V,
                                           const std::vector<Polyline>& ovals) {
  if (!V.is_real()) throw DomainError("V must have real coefficients");
  if (!iif_check(X, V)) throw PreconditionError("V is not an inverse integrating factor of the field");
  DensePoly2 v = DensePoly2::from(V), vx = DensePoly2::from(partial(V, 0)), vy = DensePoly2::from(partial(V, 1));
  std::vector<LocationResult> out;
  for (std::size_t k = 0; k < ovals.size(); ++k) {
    double vmax = 0, gmax = 0;
    for (const auto& p : ovals[k]) {
      vmax = std::max(vmax, std::fabs(eval1(v, p[0], p[1])));
      gmax = std::max(gmax, std::hypot(eval1(vx, p[0], p[1]), eval1(vy, p[0], p[1])));
    }
    LocationResult r;
    r.oval_id = static_cast<int>(k);
    r.residual = vmax / std::max(1.0, gmax);
    r.pass = r.residual <= 1e-8;
    out.push_back(r);
  }
  return out;
}

std::vector<LocationResult> location_check(const AffineVectorField& X, const MultiPoly& V, const OvalSet& ovals) {
  std::vector<Polyline> lines;
  for (const auto& o : ovals.ovals) lines.push_back(o.vertices);
  return location_check(X, V, lines);
}

std::vector<Point2> integrate_orbit(const AffineVectorField& X, const Point2& x0, double T, double step,
                                    double blowup) {
  RealField F(X);
  if (!(step > 0) || !(T >= 0)) throw DomainError("integration needs step > 0 and T >= 0");
  auto rhs = [&](const Point2& p) { return Point2{eval1(F.a, p[0], p[1]), eval1(F.b, p[0], p[1])}; };
  const long n = static_cast<long>(std::ceil(T / step - 1e-12));
  std::vector<Point2> out{x0};
  Point2 p = x0;
  for (long k = 0; k < n; ++k) {
    double h = std::min(step, T - k * step);
    Point2 k1 = rhs(p);
    Point2 k2 = rhs({p[0] + 0.5 * h * k1[0], p[1] + 0.5 * h * k1[1]});
    Point2 k3 = rhs({p[0] + 0.5 * h * k2[0], p[1] + 0.5 * h * k2[1]});
    Point2 k4 = rhs({p[0] + h * k3[0], p[1] + h * k3[1]});
    for (int c = 0; c < 2; ++c) p[c] += h / 6 * (k1[c] + 2 * k2[c] + 2 * k3[c] + k4[c]);
    if (!std::isfinite(p[0]) || !std::isfinite(p[1]) || std::hypot(p[0], p[1]) > blowup)
      throw NumericError("orbit blows up at t = " + std::to_string((k + 1) * step));
    out.push_back(p);
  }
  return out;
}

}  // namespace folia
