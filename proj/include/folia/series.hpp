#pragma once

#include <vector>

#include "folia/gaussian_rational.hpp"
#include "folia/multipoly.hpp"

namespace folia {

/// Truncated power series in t: coefficients of t^0 .. t^(n-1), known mod t^n.
using Series = std::vector<GaussianRational>;

Series series_mul(const Series& a, const Series& b, std::size_t n);
/// 1/a mod t^n. Requires a[0] != 0.
Series series_inverse(const Series& a, std::size_t n);
Series series_derivative(const Series& a);
/// Index of the first nonzero coefficient, or -1 when all known ones vanish.
int series_order(const Series& a);
/// g(a(t), b(t)) mod t^n for an arity-2 polynomial g.
Series series_compose(const MultiPoly& g, const Series& a, const Series& b, std::size_t n);

/// Power series psi with psi(0) = 0 and g(t, psi(t)) = 0 mod t^n, by Newton
/// iteration. Requires g(0,0) = 0 and dg/dy(0,0) != 0.
Series implicit_series(const MultiPoly& g, std::size_t n);

}  // namespace folia
