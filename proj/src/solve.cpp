#include "folia/solve.hpp"

#include <algorithm>
#include <ostream>

#include "folia/errors.hpp"

namespace folia {

ProjectivePoint::ProjectivePoint(GaussianRational X, GaussianRational Y, GaussianRational Z) : c_{X, Y, Z} {
  int last = 2;
  while (last >= 0 && c_[last].is_zero()) --last;
  if (last < 0) throw DomainError("projective point with all coordinates zero");
  GaussianRational inv = c_[last].inverse();
  for (auto& c : c_) c *= inv;
}

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) {
  return os << "(" << p[0] << ":" << p[1] << ":" << p[2] << ")";
}

namespace {

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  UDivision qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw InternalError("Bareiss step is not exact");
  return qr.quotient;
}

UPoly bareiss_determinant(std::vector<std::vector<UPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly::constant(1);
  UPoly prev = UPoly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  UPoly det = m[n - 1][n - 1];
  return negate ? GaussianRational(-1) * det : det;
}

// Coefficients of p in `var`, each as a univariate polynomial in the other variable.
std::vector<UPoly> univariate_coefficients(const MultiPoly& p, int var) {
  const int other = 1 - var;
  std::vector<UPoly> out;
  for (const auto& c : coefficients_in(p, var)) out.push_back(to_upoly(c, other));
  return out;
}

UPoly specialize(const MultiPoly& p, int var, const GaussianRational& value) {
  // Univariate polynomial in `var` after fixing the other variable.
  const int other = 1 - var;
  std::vector<GaussianRational> c(std::max(p.degree_in(var), 0) + 1);
  for (const auto& [e, v] : p.terms()) c[e[var]] += v * pow(value, e[other]);
  return UPoly(std::move(c));
}

void add_unique(std::vector<AffinePoint>& pts, const AffinePoint& p) {
  if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
}

// Zeros of polys[0] = polys[1] = ... = 0 when polys[0], polys[1] are coprime.
AffineZeros solve_coprime(const std::vector<MultiPoly>& polys) {
  AffineZeros out;
  UPoly res = resultant(polys[0], polys[1], 1);
  if (res.is_zero()) throw NonIsolatedError("resultant vanishes identically");
  if (res.degree() <= 0) return out;
  GaussianRoots xs = gaussian_roots(res);
  if (xs.residual > 0) {
    // Only x-values shared with every other resultant can carry a common zero.
    UPoly shared = xs.unresolved;
    for (std::size_t k = 2; k < polys.size() && shared.degree() > 0; ++k) {
      UPoly other = resultant(polys[0], polys[k], 1);
      if (!other.is_zero()) shared = gcd(shared, other);
    }
    out.residual += std::max(shared.degree(), 0);
  }
  for (const auto& x0 : xs.roots) {
    UPoly h;
    for (const auto& p : polys) h = gcd(h, specialize(p, 1, x0));
    if (h.is_zero()) throw NonIsolatedError("a vertical line lies in the zero set");
    if (h.degree() <= 0) continue;
    GaussianRoots ys = gaussian_roots(h);
    out.residual += ys.residual;
    for (const auto& y0 : ys.roots) add_unique(out.points, {x0, y0});
  }
  return out;
}

bool vanishes_at(const MultiPoly& p, const AffinePoint& pt) {
  std::array<GaussianRational, 2> v{pt.x, pt.y};
  return p.evaluate(v).is_zero();
}

}  // namespace

UPoly resultant(const MultiPoly& a, const MultiPoly& b, int var) {
  if (a.arity() != 2 || b.arity() != 2) throw ArityError("resultant needs arity-2 polynomials");
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UPoly> ca = univariate_coefficients(a, var);
  std::vector<UPoly> cb = univariate_coefficients(b, var);
  const int m = static_cast<int>(ca.size()) - 1;
  const int n = static_cast<int>(cb.size()) - 1;
  if (m == 0 && n == 0) return UPoly::constant(1);
  const int size = m + n;
  std::vector<std::vector<UPoly>> syl(size, std::vector<UPoly>(size));
  // Rows hold coefficients from the highest power down.
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) syl[r][r + k] = ca[m - k];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) syl[n + r][r + k] = cb[n - k];
  }
  return bareiss_determinant(std::move(syl));
}

AffineZeros common_zeros(std::vector<MultiPoly> polys) {
  std::erase_if(polys, [](const MultiPoly& p) { return p.is_zero(); });
  if (polys.empty()) throw NonIsolatedError("every polynomial vanishes identically");
  for (const auto& p : polys) {
    if (p.arity() != 2) throw ArityError("common_zeros needs arity-2 polynomials");
    if (p.is_constant()) return {};
  }
  if (polys.size() == 1) throw NonIsolatedError("a single curve is not a finite set");

  MultiPoly g = gcd(polys[0], polys[1]);
  AffineZeros out;
  if (g.is_constant()) {
    out = solve_coprime(polys);
    std::erase_if(out.points, [&](const AffinePoint& pt) {
      return std::any_of(polys.begin(), polys.end(), [&](const MultiPoly& p) { return !vanishes_at(p, pt); });
    });
    return out;
  }
  // Split along the shared factor: V(f, g, ...) = V(c, ...) u V(f/c, g/c, ...).
  std::vector<MultiPoly> with_factor{g};
  std::vector<MultiPoly> without{*exact_divide(polys[0], g), *exact_divide(polys[1], g)};
  for (std::size_t k = 2; k < polys.size(); ++k) {
    with_factor.push_back(polys[k]);
    without.push_back(polys[k]);
  }
  if (with_factor.size() == 1) throw NonIsolatedError("the polynomials share a common factor");
  AffineZeros a = common_zeros(std::move(with_factor));
  AffineZeros b = common_zeros(std::move(without));
  out = a;
  for (const auto& p : b.points) add_unique(out.points, p);
  out.residual += b.residual;
  return out;
}

ProjectiveZeros binary_form_zeros(const MultiPoly& form) {
  if (form.is_zero()) throw DomainError("zeros of the zero binary form");
  if (form.arity() != 3 || form.degree_in(2) > 0 || !form.is_homogeneous()) {
    throw DomainError("expected a binary form in X and Y");
  }
  ProjectiveZeros out;
  std::vector<GaussianRational> c(form.degree() + 1);
  for (const auto& [e, v] : form.terms()) c[e[0]] = v;
  UPoly u(std::move(c));
  if (u.degree() < form.degree()) out.points.emplace_back(1, 0, 0);
  if (u.degree() > 0) {
    GaussianRoots r = gaussian_roots(u);
    out.residual = r.residual;
    for (const auto& x : r.roots) out.points.emplace_back(x, 1, 0);
  }
  return out;
}

}  // namespace folia
