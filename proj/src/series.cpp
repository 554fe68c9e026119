#include "folia/series.hpp"

#include <algorithm>

#include "folia/errors.hpp"

namespace folia {

Series series_mul(const Series& a, const Series& b, std::size_t n) {
  Series out(n);
  for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series series_inverse(const Series& a, std::size_t n) {
  if (a.empty() || a[0].is_zero()) throw DomainError("series is not invertible");
  Series out(n);
  GaussianRational inv0 = a[0].inverse();
  for (std::size_t k = 0; k < n; ++k) {
    GaussianRational acc = k == 0 ? GaussianRational(1) : GaussianRational(0);
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc -= a[j] * out[k - j];
    out[k] = acc * inv0;
  }
  return out;
}

Series series_derivative(const Series& a) {
  Series out(a.empty() ? 0 : a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) out[k - 1] = a[k] * GaussianRational(static_cast<long>(k));
  return out;
}

int series_order(const Series& a) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].is_zero()) return static_cast<int>(k);
  }
  return -1;
}

Series series_compose(const MultiPoly& g, const Series& a, const Series& b, std::size_t n) {
  if (g.arity() != 2) throw ArityError("series composition needs an arity-2 polynomial");
  const int da = std::max(g.degree_in(0), 0), db = std::max(g.degree_in(1), 0);
  std::vector<Series> pa{Series{1}}, pb{Series{1}};
  for (int k = 1; k <= da; ++k) pa.push_back(series_mul(pa.back(), a, n));
  for (int k = 1; k <= db; ++k) pb.push_back(series_mul(pb.back(), b, n));
  Series out(n);
  for (const auto& [e, c] : g.terms()) {
    Series t = series_mul(pa[e[0]], pb[e[1]], n);
    for (std::size_t k = 0; k < n; ++k) {
      if (!t[k].is_zero()) out[k] += c * t[k];
    }
  }
  return out;
}

Series implicit_series(const MultiPoly& g, std::size_t n) {
  std::array<GaussianRational, 2> origin{0, 0};
  if (!g.evaluate(origin).is_zero()) throw PreconditionError("curve does not pass through the base point");
  MultiPoly gy = partial(g, 1);
  if (gy.evaluate(origin).is_zero()) throw PreconditionError("implicit variable has zero derivative");
  Series t(std::max<std::size_t>(n, 2));
  t[1] = 1;
  Series psi(n);
  std::size_t prec = 1;
  // Newton on series doubles the number of correct coefficients per step.
  for (int guard = 0; guard < 64; ++guard) {
    prec = std::min(2 * prec, n);
    Series value = series_compose(g, t, psi, prec);
    if (series_order(value) < 0 && prec == n) break;
    Series slope = series_compose(gy, t, psi, prec);
    Series step = series_mul(value, series_inverse(slope, prec), prec);
    for (std::size_t k = 0; k < prec; ++k) psi[k] -= step[k];
  }
  if (series_order(series_compose(g, t, psi, n)) >= 0) throw InternalError("implicit series did not converge");
  return psi;
}

}  // namespace folia
