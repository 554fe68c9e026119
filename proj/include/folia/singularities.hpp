#pragma once

#include <array>
#include <string>
#include <vector>

#include "folia/field_ops.hpp"
#include "folia/solve.hpp"

namespace folia {

struct PointSet {
  std::vector<ProjectivePoint> points;
  int residual = 0;  // points whose coordinates were not found in Q(i)
};

enum class Verdict { NonDicritical, Dicritical, Unknown };

enum class VerdictReason {
  NonResonantRatio,       // eigenvalue ratio outside Q>0
  StarNode,               // Jacobian is a nonzero multiple of the identity
  ZeroEigenvalue,
  ResonantPositiveRatio,  // ratio in Q>0 without being a star node
};

const char* verdict_name(Verdict v);
const char* reason_name(VerdictReason r);

struct SingularityRecord {
  ProjectivePoint point;
  Chart chart;
  std::array<std::array<GaussianRational, 2>, 2> jacobian;
  Verdict verdict;
  VerdictReason reason;
};

struct CurveSingularity {
  ProjectivePoint point;
  int order = 0;  // multiplicity of the curve at the point
  bool is_node = false;
};

enum class Tristate { False, True, Unknown };

const char* tristate_name(Tristate t);

PointSet affine_singularities(const AffineVectorField& X);

/// Common zeros of P, Q, R on Z = 0.
PointSet infinite_singularities(const ProjectiveOneForm& w);

/// Jacobian of a planar field at a point.
std::array<std::array<GaussianRational, 2>, 2> jacobian_at(const PlanarField& F, const std::array<GaussianRational, 2>& at);

/// Verdict from a 2x2 Jacobian.
std::pair<Verdict, VerdictReason> classify_jacobian(const std::array<std::array<GaussianRational, 2>, 2>& J);

/// Classify a singular point in its preferred chart; infinite points use the
/// saturated projectivization.
SingularityRecord classify_dicritical(const AffineVectorField& X, const ProjectivePoint& p);
/// Same, in an explicitly chosen planar field and chart.
SingularityRecord classify_in_chart(const PlanarField& F, Chart chart, const ProjectivePoint& p);

/// Order of f at the origin after translating the point there, and the node test.
CurveSingularity local_singularity(const MultiPoly& f, const std::array<GaussianRational, 2>& at, const ProjectivePoint& p);

struct CurveSingularities {
  std::vector<CurveSingularity> points;
  int residual = 0;
};

/// Affine singular points of f (f = f_x = f_y = 0).
CurveSingularities curve_singularities(const MultiPoly& f);

/// Singular points of the projective closure on the line Z = 0.
CurveSingularities infinite_curve_singularities(const MultiPoly& f);

Tristate is_nodal(const MultiPoly& f, bool include_infinity);

}  // namespace folia
