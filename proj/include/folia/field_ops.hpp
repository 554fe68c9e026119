#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "folia/multipoly.hpp"
#include "folia/solve.hpp"

namespace folia {

/// Polynomial vector field x' = a, y' = b on some affine chart.
struct PlanarField {
  MultiPoly a{2};
  MultiPoly b{2};
};

/// x' = p + x r, y' = q + y r with r zero or homogeneous of degree m,
/// m = max(deg p, deg q, deg r).
class AffineVectorField {
 public:
  AffineVectorField(MultiPoly p, MultiPoly q, MultiPoly r = MultiPoly(2));

  const MultiPoly& p() const { return p_; }
  const MultiPoly& q() const { return q_; }
  const MultiPoly& r() const { return r_; }
  int degree() const { return m_; }

  /// Components of the planar field, p + x r and q + y r.
  PlanarField planar() const;
  bool is_real() const { return p_.is_real() && q_.is_real() && r_.is_real(); }

 private:
  MultiPoly p_, q_, r_;
  int m_;
};

/// P dX + Q dY + R dZ with P, Q, R homogeneous of degree m + 1 and
/// X P + Y Q + Z R = 0.
class ProjectiveOneForm {
 public:
  ProjectiveOneForm(MultiPoly P, MultiPoly Q, MultiPoly R);

  const MultiPoly& P() const { return c_[0]; }
  const MultiPoly& Q() const { return c_[1]; }
  const MultiPoly& R() const { return c_[2]; }
  const std::array<MultiPoly, 3>& components() const { return c_; }
  int degree() const { return m_; }

  friend bool operator==(const ProjectiveOneForm& a, const ProjectiveOneForm& b) { return a.c_ == b.c_; }

 private:
  std::array<MultiPoly, 3> c_;
  int m_;
};

struct CofactorCertificate {
  MultiPoly curve{2};
  MultiPoly cofactor{2};
  bool residual_check = false;  // X f - K f == 0 verified
  int cofactor_degree = kDegreeOfZero;
  int degree_bound = 0;         // m - 1 when r = 0, m otherwise
  bool within_degree_bound = true;
};

MultiPoly lie_derivative(const AffineVectorField& X, const MultiPoly& f);
MultiPoly lie_derivative(const PlanarField& X, const MultiPoly& f);

/// Cofactor certificate, or nullopt when f is not invariant.
std::optional<CofactorCertificate> invariance_check(const AffineVectorField& X, const MultiPoly& f);

ProjectiveOneForm projectivize(const AffineVectorField& X);

/// Divide P, Q, R by their common factor.
ProjectiveOneForm saturate(const ProjectiveOneForm& w);

/// Affine field in the chart Z = 1 of the saturated form.
AffineVectorField affinize(const ProjectiveOneForm& w);

/// (q + y r) dx - (p + x r) dy as the pair of its coefficients.
std::array<MultiPoly, 2> affine_one_form(const AffineVectorField& X);

bool infinity_invariant(const AffineVectorField& X);

MultiPoly divergence(const AffineVectorField& X);
MultiPoly divergence(const PlanarField& X);

bool iif_check(const AffineVectorField& X, const MultiPoly& V);

bool darboux_check(std::span<const CofactorCertificate> certs, std::span<const GaussianRational> lambda);

// Affine charts of CP(2). Z: coordinates (X, Y) at Z = 1; Y: (X, Z) at Y = 1;
// X: (Y, Z) at X = 1.
enum class Chart { Z, Y, X };

const char* chart_name(Chart c);

/// Preferred chart for a point: Z when finite, then Y, then X.
Chart chart_for(const ProjectivePoint& p);
std::array<GaussianRational, 2> chart_coordinates(const ProjectivePoint& p, Chart c);
ProjectivePoint from_chart(Chart c, const GaussianRational& u, const GaussianRational& v);

/// Restriction of a homogeneous polynomial to a chart, as an arity-2 polynomial.
MultiPoly chart_polynomial(const MultiPoly& F, Chart c);

/// Vector field tangent to the form in a chart: (-Q, P), (-R, P), (-R, Q).
PlanarField chart_field(const ProjectiveOneForm& w, Chart c);

/// Field in u = y/x, v = 1/x (Chart::X) or u = x/y, v = 1/y (Chart::Y),
/// built by direct substitution into p, q. Requires r = 0.
PlanarField inversion_chart_field(const AffineVectorField& X, Chart c);

}  // namespace folia
