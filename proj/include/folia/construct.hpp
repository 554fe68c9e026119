#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "folia/field_ops.hpp"
#include "folia/textio.hpp"

namespace folia {

/// Curves F_i (homogeneous, in X, Y, Z) with weights lambda_i.
struct LogarithmicSpec {
  std::vector<MultiPoly> curves;
  std::vector<GaussianRational> weights;
};

struct LogarithmicForm {
  ProjectiveOneForm form;
  AffineVectorField field;  // affinization of the form
  std::vector<MultiPoly> affine_curves;  // dehomogenized F_i; Z is skipped
  std::vector<GaussianRational> affine_weights;
  std::vector<CofactorCertificate> certificates;  // one per affine curve
  bool line_at_infinity_listed = false;  // Z is one of the F_i
  bool darboux = false;  // sum lambda_i K_i == 0
  bool iif = false;      // product of the affine curves is an inverse integrating factor
  int degree = 0;
};

/// omega = sum_j lambda_j (prod_{i != j} F_i) dF_j. Every certificate is
/// verified before returning; a failure throws InternalError.
LogarithmicForm logarithmic_form(const LogarithmicSpec& spec);

enum class RatioStatus { Satisfied, Violated };
const char* ratio_status_name(RatioStatus s);

struct RatioEntry {
  int i = 0;
  int j = 0;
  GaussianRational ratio;
  RatioStatus status = RatioStatus::Satisfied;
};

/// For each pair i < j: Violated when lambda_i / lambda_j is a negative rational.
std::vector<RatioEntry> ratio_condition_report(std::span<const GaussianRational> lambda);
bool ratio_condition_holds(std::span<const GaussianRational> lambda);

struct EeeSystem {
  AffineVectorField field;
  CofactorCertificate certificate;
};

/// x' = a g - h g_y, y' = b g + h g_x, with cofactor a g_x + b g_y.
EeeSystem eee_system(const MultiPoly& g, const MultiPoly& h, const GaussianRational& a, const GaussianRational& b);

/// Logarithmic form of degree m on the unit circle plus chords, or on three
/// lines when m = 1, in general position with r != 0.
struct Thm2bPreset {
  LogarithmicSpec spec;
  LogarithmicForm result;
};
Thm2bPreset construct_thm2b(int m);

ProjectiveOneForm example1_form(const GaussianRational& alpha, const GaussianRational& beta);

const std::vector<std::string>& gallery_names();
/// Named fixture as a document. Throws DocumentError for unknown names.
SystemDocument gallery(std::string_view name);

}  // namespace folia
