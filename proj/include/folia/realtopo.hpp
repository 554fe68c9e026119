#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "folia/multipoly.hpp"

namespace folia {

using Point2 = std::array<double, 2>;
using Polyline = std::vector<Point2>;

/// Axis-aligned rational rectangle [x0, x1] x [y0, y1].
struct Box {
  mpq_class x0, x1, y0, y1;
};

struct Oval {
  Polyline vertices;  // closed: front() == back()
  bool certified = false;
};

struct OvalSet {
  Box box;          // box actually used, after snapping to dyadic nodes
  int resolution = 0;
  std::vector<Oval> ovals;
  int open_chains = 0;   // components leaving the box
  bool complete = true;  // every cell certified, so no component was missed
  int shifts = 0;        // grid shifts taken to avoid zero nodes
  std::vector<std::string> warnings;

  int certified_count() const;
};

/// True iff the leading form has no real zero off the origin, which makes
/// the real locus bounded. Throws DomainError for non-real coefficients.
bool compactness_check(const MultiPoly& f);

/// Square [-B, B]^2 containing the whole real locus. Requires compactness.
Box default_box(const MultiPoly& f);

/// Adaptive marching squares with exact node signs and exact edge crossing
/// counts; cells are refined up to 6 levels below the base grid.
OvalSet count_ovals(const MultiPoly& f, const std::optional<Box>& box, int resolution);

struct TraceOptions {
  double step = 0.01;
  double min_step = 1e-7;
  long max_steps = 200000;
};

/// Predictor-corrector tracing of the component through seed; the result
/// is closed (front() == back()). Throws NumericError when the seed does not
/// project onto the curve, when a singular point is met, or when the loop
/// does not close within the step budget.
Polyline trace_oval(const MultiPoly& f, const Point2& seed, const TraceOptions& opt = {});

/// Plain text: one "x y" line per vertex, a blank line between ovals.
std::string format_polylines(const std::vector<Polyline>& lines);

}  // namespace folia
