#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace folia {

/// Exact element of Q(i). Both parts are GMP rationals kept canonical.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: literals convert freely
  GaussianRational(const mpq_class& re) : re_(re) { re_.canonicalize(); }  // NOLINT
  GaussianRational(const mpq_class& re, const mpq_class& im);

  static GaussianRational imaginary_unit() { return {0, 1}; }
  static GaussianRational from_fraction(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_imaginary() const { return sgn(re_) == 0 && sgn(im_) != 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  // |z|^2, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Plain debugging form, e.g. "1/2+3i". Canonical text syntax lives in textio.
  std::string debug_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

GaussianRational pow(GaussianRational base, unsigned exponent);

/// Exact square root of a nonnegative rational, if it is a rational square.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

/// A square root of z inside Q(i), if one exists. The root with positive real
/// part (or positive imaginary part when the real part vanishes) is returned.
std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z);

/// Best rational approximation of v with |v - p/q| <= tol, smallest q first.
mpq_class rationalize(long double v, long double tol, long max_den = 100000000L);

}  // namespace folia
