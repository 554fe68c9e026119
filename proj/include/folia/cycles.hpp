#pragma once

#include <optional>
#include <vector>

#include "folia/field_ops.hpp"
#include "folia/realtopo.hpp"

namespace folia {

struct DivergenceIntegral {
  double D = 0;       // Richardson value from the full and half vertex densities
  double T = 0;       // period, extrapolated the same way
  double D_coarse = 0;  // same extrapolation one density lower
  double error = 0;   // |D - D_coarse|, a conservative error estimate
  double relative_agreement = 0;  // error / |D|, infinite when D = 0
};

/// Integral of div X dt around a closed polyline lying on an orbit, by the
/// midpoint rule with dt = |ds| / |X|. Throws NumericError when X vanishes on
/// the polyline and DomainError for non-real fields or short polylines.
DivergenceIntegral divergence_integral(const AffineVectorField& X, const Polyline& oval);

enum class Stability { Stable, Unstable, Undetermined };
const char* stability_name(Stability s);

struct CycleCertificate {
  int oval_id = 0;
  double T = 0;
  double D = 0;
  double error = 0;
  Stability stability = Stability::Undetermined;
  bool hyperbolic = false;  // |D| > 1000 * error; false means inconclusive
  std::optional<double> v_residual;
};

CycleCertificate certify_cycle(const AffineVectorField& X, const Polyline& oval, int oval_id = 0);

struct LocationResult {
  int oval_id = 0;
  double residual = 0;  // max |V| / max(1, max |grad V|) over the vertices
  bool pass = false;    // residual <= 1e-8
};

/// Closed orbits lie in V = 0 when V is an inverse integrating factor.
/// Throws PreconditionError when iif_check(X, V) fails.
std::vector<LocationResult> location_check(const AffineVectorField& X, const MultiPoly& V,
                                           const std::vector<Polyline>& ovals);
std::vector<LocationResult> location_check(const AffineVectorField& X, const MultiPoly& V, const OvalSet& ovals);

/// Fixed-step classical Runge-Kutta; returns every step including x0.
/// Throws NumericError when the norm exceeds blowup.
std::vector<Point2> integrate_orbit(const AffineVectorField& X, const Point2& x0, double T, double step,
                                    double blowup = 1e8);

}  // namespace folia
