#include "folia/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "folia/errors.hpp"

namespace folia {

namespace {

using cld = std::complex<long double>;

cld to_cld(const GaussianRational& z) {
  return {static_cast<long double>(z.re().get_d()), static_cast<long double>(z.im().get_d())};
}

}  // namespace

UPoly::UPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational UPoly::evaluate(const GaussianRational& t) const {
  GaussianRational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

std::complex<long double> UPoly::evaluate(std::complex<long double> t) const {
  cld acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + to_cld(*it);
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<GaussianRational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * GaussianRational(static_cast<long>(k)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  GaussianRational inv = c_.back().inverse();
  return inv * *this;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<GaussianRational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<GaussianRational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] - b[k];
  return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

UPoly operator*(const GaussianRational& s, const UPoly& a) {
  std::vector<GaussianRational> out = a.c_;
  for (auto& c : out) c *= s;
  return UPoly(std::move(out));
}

UDivision divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("univariate division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<GaussianRational> rem = a.coeffs();
  const int db = b.degree();
  const GaussianRational lead_inv = b.leading().inverse();
  std::vector<GaussianRational> quo(std::max(a.degree() - db + 1, 0));
  for (int k = a.degree() - db; k >= 0; --k) {
    GaussianRational c = rem[k + db] * lead_inv;
    quo[k] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = gcd(p, p.derivative());
  return divmod(p, g).quotient.monic();
}

UPoly to_upoly(const MultiPoly& p, int var) {
  std::vector<GaussianRational> c(std::max(p.degree_in(var), -1) + 1);
  for (const auto& [e, v] : p.terms()) {
    for (int k = 0; k < p.arity(); ++k) {
      if (k != var && e[k] != 0) throw DomainError("polynomial is not univariate in the requested variable");
    }
    c[e[var]] = v;
  }
  return UPoly(std::move(c));
}

MultiPoly from_upoly(const UPoly& p, int arity, int var) {
  MultiPoly out(arity);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    Exponent e{0, 0, 0};
    e[var] = static_cast<unsigned>(k);
    out.add_term(e, p.coeffs()[k]);
  }
  return out;
}

std::vector<std::complex<long double>> numeric_roots(const UPoly& p) {
  const int n = p.degree();
  if (n < 1) throw DomainError("numeric_roots needs degree >= 1");
  std::vector<cld> a(n + 1);
  for (int k = 0; k <= n; ++k) a[k] = to_cld(p.coeffs()[k]) / to_cld(p.leading());
  if (n == 1) return {-a[0]};
  long double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(a[k]));
  radius = std::min(1.0L + radius, 1e12L);
  std::vector<cld> z(n);
  for (int k = 0; k < n; ++k) {
    long double angle = 2.0L * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = std::polar(radius * 0.5L + 0.25L, angle);
  }
  auto eval = [&](cld t, cld& dv) {
    cld v = a[n];
    dv = 0;
    for (int k = n - 1; k >= 0; --k) {
      dv = dv * t + v;
      v = v * t + a[k];
    }
    return v;
  };
  for (int iter = 0; iter < 1000; ++iter) {
    long double worst = 0;
    for (int k = 0; k < n; ++k) {
      cld dv;
      cld v = eval(z[k], dv);
      if (v == cld(0)) continue;
      cld ratio = dv == cld(0) ? cld(1e-3L) : v / dv;
      cld sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      }
      cld w = ratio / (1.0L - ratio * sum);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / (1.0L + std::abs(z[k])));
    }
    if (worst < 1e-19L) break;
  }
  for (auto& t : z) {
    for (int k = 0; k < 3; ++k) {
      cld dv;
      cld v = eval(t, dv);
      if (dv == cld(0)) break;
      t -= v / dv;
    }
  }
  return z;
}

GaussianRoots gaussian_roots(const UPoly& p) {
  GaussianRoots out;
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  UPoly s = squarefree_part(p);
  while (s.degree() > 0) {
    const int d = s.degree();
    if (d == 1) {
      out.roots.push_back(-s[0] / s[1]);
      break;
    }
    if (d == 2) {
      GaussianRational disc = s[1] * s[1] - GaussianRational(4) * s[2] * s[0];
      auto sq = gaussian_sqrt(disc);
      if (!sq) {
        out.residual += 2;
        out.unresolved = s.monic();
        break;
      }
      GaussianRational two_a = GaussianRational(2) * s[2];
      out.roots.push_back((-s[1] + *sq) / two_a);
      out.roots.push_back((-s[1] - *sq) / two_a);
      break;
    }
    std::vector<GaussianRational> found;
    for (const auto& z : numeric_roots(s)) {
      long double scale = std::max(1.0L, std::abs(z));
      for (long double tol : {1e-15L, 1e-12L, 1e-9L, 1e-7L}) {
        long double t = tol * scale;
        mpq_class re = std::fabs(z.real()) < t ? mpq_class(0) : rationalize(z.real(), t);
        mpq_class im = std::fabs(z.imag()) < t ? mpq_class(0) : rationalize(z.imag(), t);
        GaussianRational cand(re, im);
        if (std::find(found.begin(), found.end(), cand) != found.end()) break;
        if (s.evaluate(cand).is_zero()) {
          found.push_back(cand);
          break;
        }
      }
    }
    if (found.empty()) {
      out.residual += d;
      out.unresolved = s.monic();
      break;
    }
    for (const auto& r : found) {
      out.roots.push_back(r);
      UDivision qr = divmod(s, UPoly({-r, 1}));
      if (!qr.remainder.is_zero()) throw InternalError("verified root does not divide");
      s = qr.quotient;
    }
  }
  return out;
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::from_real(const UPoly& p) {
  std::vector<mpq_class> c;
  for (const auto& z : p.coeffs()) {
    if (!z.is_real()) throw DomainError("polynomial has non-real coefficients");
    c.push_back(z.re());
  }
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpq_class QPoly::evaluate(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

int QPoly::sign_at(const mpq_class& t) const { return sgn(evaluate(t)); }

QPoly QPoly::derivative() const {
  std::vector<mpq_class> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return QPoly(std::move(d));
}

namespace {

QPoly qrem(const QPoly& a, const QPoly& b) {
  if (a.degree() < b.degree()) return a;
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    mpq_class c = rem[k + db] / b.coeffs().back();
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  rem.resize(std::max(db, 0));
  return QPoly(std::move(rem));
}

QPoly qgcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

QPoly qquo(const QPoly& a, const QPoly& b) {
  if (a.degree() < b.degree()) return QPoly();
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  std::vector<mpq_class> quo(std::max(a.degree() - db + 1, 0));
  for (int k = a.degree() - db; k >= 0; --k) {
    mpq_class c = rem[k + db] / b.coeffs().back();
    quo[k] = c;
    for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  return QPoly(std::move(quo));
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) { return qgcd(a, b); }

SturmSequence::SturmSequence(const QPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  QPoly s = p;
  if (p.degree() > 0) s = qquo(p, qgcd(p, p.derivative()));
  seq_.push_back(s);
  if (s.degree() <= 0) return;
  seq_.push_back(s.derivative());
  while (true) {
    QPoly r = qrem(seq_[seq_.size() - 2], seq_.back());
    if (r.is_zero()) break;
    std::vector<mpq_class> neg = r.coeffs();
    for (auto& c : neg) c = -c;
    seq_.emplace_back(std::move(neg));
  }
}

int SturmSequence::variations_at(const mpq_class& t) const {
  int count = 0, last = 0;
  for (const auto& q : seq_) {
    int s = q.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_infinity(int sign) const {
  int count = 0, last = 0;
  for (const auto& q : seq_) {
    int s = sgn(q.coeffs().back());
    if (sign < 0 && q.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_roots(const mpq_class& a, const mpq_class& b) const {
  if (b < a) throw DomainError("empty interval");
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_real_roots() const { return variations_at_infinity(-1) - variations_at_infinity(1); }

}  // namespace folia
