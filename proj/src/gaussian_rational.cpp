#include "folia/gaussian_rational.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "folia/errors.hpp"

namespace folia {

GaussianRational::GaussianRational(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_fraction(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(q);
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(i)");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DomainError("division by zero in Q(i)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::debug_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  if (z.is_real()) return os << z.re().get_str();
  if (sgn(z.re()) == 0) return os << z.im().get_str() << "i";
  os << z.re().get_str();
  if (sgn(z.im()) > 0) os << "+";
  return os << z.im().get_str() << "i";
}

GaussianRational pow(GaussianRational base, unsigned exponent) {
  GaussianRational result(1);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num();
  mpz_class d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z) {
  if (z.is_zero()) return GaussianRational(0);
  // (x + iy)^2 = a + ib  =>  x^2 = (a + |z|)/2, y^2 = (|z| - a)/2.
  auto modulus = rational_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto x = rational_sqrt((z.re() + *modulus) / 2);
  auto y = rational_sqrt((*modulus - z.re()) / 2);
  if (!x || !y) return std::nullopt;
  mpq_class yy = *y;
  if (sgn(z.im()) < 0) yy = -yy;
  GaussianRational root(*x, yy);
  if (sgn(root.re()) == 0 && sgn(root.im()) < 0) root = -root;
  if (root * root != z) throw InternalError("gaussian_sqrt produced a wrong root");
  return root;
}

mpq_class rationalize(long double v, long double tol, long max_den) {
  if (!std::isfinite(v)) throw NumericError("cannot rationalize a non-finite value");
  // Continued-fraction convergents h/k.
  long double x = v;
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  long double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    mpq_class cand(h, k);
    cand.canonicalize();
    long double err = std::fabs(static_cast<long double>(cand.get_d()) - v);
    if (err <= tol || frac == 0.0L) return cand;
    long double inv = 1.0L / frac;
    auto a = static_cast<long>(std::floor(inv));
    frac = inv - std::floor(inv);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) return cand;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  mpq_class cand(h, k);
  cand.canonicalize();
  return cand;
}

}  // namespace folia
