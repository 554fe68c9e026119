#pragma once

#include <cstddef>
#include <vector>

#include "folia/multipoly.hpp"

namespace folia::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
bool avx2_available();
/// AVX2 when the CPU has it, unless FOLIA_ISA=scalar.
Isa active_isa();

/// Real bivariate polynomial in dense double form for batch evaluation.
/// Coefficient of x^i y^j is c[i * (dy + 1) + j].
struct DensePoly2 {
  int dx = 0;
  int dy = 0;
  std::vector<double> c;
  std::vector<double> abs_c;
  std::vector<double> c_lo, c_hi;  // one-ulp enclosure of each exact coefficient
  double gamma = 0;  // relative error factor of one evaluation

  /// Throws DomainError when p has non-real coefficients.
  static DensePoly2 from(const MultiPoly& p);
};

/// value[k] = p(x[k], y[k]) by nested Horner; |value - exact| <= bound[k],
/// where exact is the value at the exact rational coefficients.
void eval_scalar(const DensePoly2& p, const double* x, const double* y, std::size_t n, double* value, double* bound);
void eval_avx2(const DensePoly2& p, const double* x, const double* y, std::size_t n, double* value, double* bound);
void eval(const DensePoly2& p, const double* x, const double* y, std::size_t n, double* value, double* bound);
void eval(Isa isa, const DensePoly2& p, const double* x, const double* y, std::size_t n, double* value, double* bound);

}  // namespace folia::kernels
