#include <cmath>

#include "folia/errors.hpp"
#include "folia/kernels.hpp"
#include "kernel_common.hpp"

namespace folia::kernels {

DensePoly2 DensePoly2::from(const MultiPoly& p) {
  if (p.arity() != 2) throw ArityError("dense evaluation needs a polynomial in x, y");
  if (!p.is_real()) throw DomainError("dense evaluation needs real coefficients");
  DensePoly2 d;
  d.dx = std::max(p.degree_in(0), 0);
  d.dy = std::max(p.degree_in(1), 0);
  d.c.assign(static_cast<std::size_t>(d.dx + 1) * (d.dy + 1), 0.0);
  for (const auto& [e, v] : p.terms()) d.c[e[0] * (d.dy + 1) + e[1]] = v.re().get_d();
  d.abs_c.resize(d.c.size());
  d.c_lo.resize(d.c.size());
  d.c_hi.resize(d.c.size());
  for (std::size_t k = 0; k < d.c.size(); ++k) {
    d.abs_c[k] = std::fabs(d.c[k]);
    d.c_lo[k] = d.c[k] == 0.0 ? 0.0 : std::nextafter(d.c[k], -INFINITY);
    d.c_hi[k] = d.c[k] == 0.0 ? 0.0 : std::nextafter(d.c[k], INFINITY);
  }
  const double u = 0x1p-53;
  const double steps = 2.0 * (d.dx + d.dy) + 3.0;
  d.gamma = steps * u / (1.0 - steps * u);
  return d;
}

void eval_scalar(const DensePoly2& p, const double* x, const double* y, std::size_t n, double* value, double* bound) {
  const int dy1 = p.dy + 1;
  for (std::size_t k = 0; k < n; ++k) {
    const double xv = x[k], yv = y[k];
    const double ax = std::fabs(xv), ay = std::fabs(yv);
    double acc = 0.0, acc_abs = 0.0;
    for (int i = p.dx; i >= 0; --i) {
      const double* row = &p.c[i * dy1];
      const double* arow = &p.abs_c[i * dy1];
      double inner = 0.0, inner_abs = 0.0;
      for (int j = p.dy; j >= 0; --j) {
        inner = inner * yv + row[j];
        inner_abs = inner_abs * ay + arow[j];
      }
      acc = acc * xv + inner;
      acc_abs = acc_abs * ax + inner_abs;
    }
    value[k] = acc;
    bound[k] = detail::finish_bound(acc_abs, p.gamma);
  }
}

}  // namespace folia::kernels
