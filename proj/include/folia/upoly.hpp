#pragma once

#include <complex>
#include <vector>

#include "folia/gaussian_rational.hpp"
#include "folia/multipoly.hpp"

namespace folia {

/// Dense univariate polynomial over Q(i), lowest coefficient first, trimmed.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<GaussianRational> coeffs);
  static UPoly constant(const GaussianRational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({0, 1}); }

  const std::vector<GaussianRational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kDegreeOfZero : static_cast<int>(c_.size()) - 1; }
  const GaussianRational& leading() const { return c_.back(); }
  GaussianRational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational(0); }

  GaussianRational evaluate(const GaussianRational& t) const;
  std::complex<long double> evaluate(std::complex<long double> t) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const GaussianRational& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

struct UDivision {
  UPoly quotient;
  UPoly remainder;
};

UDivision divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);

/// Univariate view of a polynomial that only involves variable `var`.
UPoly to_upoly(const MultiPoly& p, int var);
MultiPoly from_upoly(const UPoly& p, int arity, int var);

/// All complex roots, numerically (Aberth iteration). Precondition: degree >= 1.
std::vector<std::complex<long double>> numeric_roots(const UPoly& p);

struct GaussianRoots {
  std::vector<GaussianRational> roots;  // distinct, exact
  int residual = 0;                     // number of roots left outside Q(i)
  UPoly unresolved = UPoly::constant(1);  // monic factor carrying those roots
};

/// Distinct roots lying in Q(i). Candidates come from numeric roots and are
/// only accepted after exact verification; linear and quadratic leftovers are
/// solved in closed form.
GaussianRoots gaussian_roots(const UPoly& p);

/// Polynomial with rational coefficients, for real root counting.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly from_real(const UPoly& p);  // throws DomainError on complex coefficients

  const std::vector<mpq_class>& coeffs() const { return c_; }
  int degree() const { return c_.empty() ? kDegreeOfZero : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  int sign_at(const mpq_class& t) const;
  mpq_class evaluate(const mpq_class& t) const;
  QPoly derivative() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Greatest common divisor, up to a rational factor.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Sturm sequence of the squarefree part of p.
class SturmSequence {
 public:
  explicit SturmSequence(const QPoly& p);
  /// Distinct real roots in the half-open interval (a, b].
  int count_roots(const mpq_class& a, const mpq_class& b) const;
  /// Distinct real roots on the whole line.
  int count_real_roots() const;

 private:
  int variations_at(const mpq_class& t) const;
  int variations_at_infinity(int sign) const;
  std::vector<QPoly> seq_;
};

}  // namespace folia
