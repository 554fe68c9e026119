#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "folia/multipoly.hpp"
#include "folia/upoly.hpp"

namespace folia {

/// Point of CP(2) with the last nonzero coordinate scaled to 1.
class ProjectivePoint {
 public:
  ProjectivePoint(GaussianRational X, GaussianRational Y, GaussianRational Z);
  static ProjectivePoint affine(const GaussianRational& x, const GaussianRational& y) { return {x, y, 1}; }

  const std::array<GaussianRational, 3>& coords() const { return c_; }
  const GaussianRational& operator[](int k) const { return c_[k]; }
  bool at_infinity() const { return c_[2].is_zero(); }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.c_ == b.c_; }

 private:
  std::array<GaussianRational, 3> c_;
};

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p);

struct AffinePoint {
  GaussianRational x, y;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Resultant of two arity-2 polynomials with respect to `var`, as a
/// univariate polynomial in the other variable. Sylvester matrix, Bareiss.
UPoly resultant(const MultiPoly& a, const MultiPoly& b, int var);

struct AffineZeros {
  std::vector<AffinePoint> points;
  int residual = 0;  // zeros that were not resolved inside Q(i)
};

/// Common zeros in Q(i)^2 of finitely many arity-2 polynomials.
/// Throws NonIsolatedError when the zero set contains a curve.
AffineZeros common_zeros(std::vector<MultiPoly> polys);

struct ProjectiveZeros {
  std::vector<ProjectivePoint> points;
  int residual = 0;
};

/// Zeros on CP(1) (written as points (X:Y:0)) of a binary form in X, Y of an
/// arity-3 polynomial. Throws DomainError on the zero form.
ProjectiveZeros binary_form_zeros(const MultiPoly& form);

}  // namespace folia
