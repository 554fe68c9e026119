#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folia/field_ops.hpp"
#include "folia/series.hpp"
#include "folia/singularities.hpp"

namespace folia {

/// Truncated parameterization t -> (phi1(t), phi2(t)) of a local branch, in
/// chart coordinates, known mod t^(N+1).
struct Branch {
  ProjectivePoint base;
  Chart chart;
  std::array<GaussianRational, 2> center;
  Series phi1, phi2;
  int truncation = 0;
  bool smooth = true;  // base is a smooth point of the curve
};

struct LocalBranches {
  bool supported = true;
  std::string reason;
  std::vector<Branch> branches;
};

/// Branches of the chart curve g through the chart point of p. Smooth points
/// give one branch, nodes two; anything else is unsupported.
LocalBranches local_branches(const MultiPoly& g, Chart chart, const ProjectivePoint& p, int N);

/// Branches of the projective closure of an affine curve f at p.
LocalBranches local_branches(const MultiPoly& f, const ProjectivePoint& p, int N);

/// Smooth branch parameterized by chart coordinate `param` (0 or 1).
Branch smooth_branch(const MultiPoly& g, Chart chart, const ProjectivePoint& p, int param, int N);

struct Multiplicity {
  int mu = -1;
  bool certified = false;
  int truncation = 0;
};

/// Order of R where phi^*(F) = R(t) d/dt. Throws PreconditionError when the
/// pullback is inconsistent (branch not invariant).
Multiplicity branch_multiplicity(const PlanarField& F, const Branch& B);

/// Default truncation 2 (m + 2) deg f, or FOLIA_TRUNCATION when set.
int default_truncation(int m, int deg_f);

/// Multiplicities of every branch of g at p, doubling N up to three times
/// while any is uncertified. Unsupported points give nullopt.
std::optional<std::vector<Multiplicity>> multiplicities_at(const PlanarField& F, const MultiPoly& g, Chart chart,
                                                           const ProjectivePoint& p, int N);

struct MultiplicityEntry {
  ProjectivePoint point;
  Chart chart;
  int branch = 0;
  int mu = -1;
  bool certified = false;
};

struct EulerReport {
  int n = 0;
  int m = 0;
  std::vector<MultiplicityEntry> table;
  int sum_mu = 0;
  int chi_claimed = 0;
  int rhs = 0;  // sum_mu - n (m - 1)
  bool checkable = true;
  std::string reason;  // why not checkable
  bool identity_holds = false;
};

/// Singular points of the saturated form on the projective closure of f.
PointSet foliation_singularities_on(const ProjectiveOneForm& w, const MultiPoly& f);

EulerReport euler_identity_check(const ProjectiveOneForm& w, const MultiPoly& f, int chi,
                                 std::optional<int> truncation = std::nullopt);
EulerReport euler_identity_check(const AffineVectorField& X, const MultiPoly& f, int chi,
                                 std::optional<int> truncation = std::nullopt);

struct InfinityBranchData {
  ProjectivePoint point;
  int l = 0;
  int mu = 0;              // l + 1
  int mu_branch = 0;       // branch multiplicity in the inversion chart
  int mu_projective = 0;   // branch multiplicity in the projective chart
  bool consistent = false;
};

InfinityBranchData infinity_branch_data(const AffineVectorField& X, const MultiPoly& f, const ProjectivePoint& p,
                                        std::optional<int> truncation = std::nullopt);

struct GenusReport {
  std::vector<int> degrees;
  std::vector<int> nodes;
  std::vector<int> genera;
  int chi = 0;
};

/// Genus (d-1)(d-2)/2 - delta per component and chi = sum (2 - 2 g_i).
GenusReport genus_and_chi(const MultiPoly& f, std::span<const MultiPoly> components);

struct Corollary2Report {
  int n = 0;
  int chi_formula = 0;  // -n (n - 3)
  EulerReport euler;
  std::vector<InfinityBranchData> at_infinity;
  bool all_mu_one = false;
  bool holds = false;
};

Corollary2Report corollary2_check(const MultiPoly& f);

/// Hamiltonian field (-f_y, f_x).
AffineVectorField hamiltonian_field(const MultiPoly& f);

}  // namespace folia
