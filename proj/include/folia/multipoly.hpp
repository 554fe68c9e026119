#pragma once

#include <array>
#include <climits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "folia/gaussian_rational.hpp"

namespace folia {

using Exponent = std::array<unsigned, 3>;

inline unsigned total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

/// Graded lexicographic order, largest first: total degree, then exponent of
/// the first variable, then the second. x^2 > x*y > y^2 > x > y > 1.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Degree of the zero polynomial.
inline constexpr int kDegreeOfZero = INT_MIN;

/// Sparse polynomial over Q(i) in 2 (x, y) or 3 (X, Y, Z) variables.
/// No zero coefficient is ever stored; terms iterate in graded-lex order.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, GaussianRational, GradedLexGreater>;

  explicit MultiPoly(int arity = 2);

  static MultiPoly constant(int arity, const GaussianRational& c);
  static MultiPoly variable(int arity, int index);
  static MultiPoly monomial(int arity, const Exponent& e, const GaussianRational& c = 1);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_real() const;

  /// Total degree; kDegreeOfZero for the zero polynomial.
  int degree() const;
  /// Degree in one variable; kDegreeOfZero for zero.
  int degree_in(int var) const;
  /// Smallest total degree among the terms (the order at the origin).
  int order() const;
  bool is_homogeneous() const;

  GaussianRational coefficient(const Exponent& e) const;
  /// Leading term in graded-lex order. Precondition: nonzero.
  const std::pair<const Exponent, GaussianRational>& leading_term() const;

  /// Add c*m, dropping the term if it cancels.
  void add_term(const Exponent& e, const GaussianRational& c);

  /// Homogeneous part of total degree d.
  MultiPoly homogeneous_part(int d) const;

  /// Value at a point with arity() coordinates.
  GaussianRational evaluate(std::span<const GaussianRational> point) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const GaussianRational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const GaussianRational& c) { return a *= c; }
  friend MultiPoly operator*(const GaussianRational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  void check_same_arity(const MultiPoly& o) const;

  int arity_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

MultiPoly partial(const MultiPoly& p, int var);

/// F(X,Y,Z) = Z^n f(X/Z, Y/Z). Throws DomainError when n < deg f.
MultiPoly homogenize(const MultiPoly& f, int n);

/// Substitute Z = 1.
MultiPoly dehomogenize(const MultiPoly& F);

/// Exact quotient a/b, or nullopt when b does not divide a.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Top-degree homogeneous part. Throws DomainError on zero input.
MultiPoly leading_form(const MultiPoly& f);

/// Monic (leading coefficient 1) associate; zero stays zero.
MultiPoly make_monic(const MultiPoly& p);

/// Monic gcd by primitive pseudo-remainder sequences in the last variable.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly gcd(std::span<const MultiPoly> polys);

/// True when f has no repeated factor. Throws DomainError on zero input.
bool is_squarefree(const MultiPoly& f);

/// f with variable k replaced by values[k]; all values share one arity.
MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> values);

/// f(v + shift): moves `shift` to the origin.
MultiPoly translate(const MultiPoly& f, std::span<const GaussianRational> shift);

/// Coefficients of p viewed as a polynomial in `var`, index = power of var.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, int var);

/// Re-express an arity-2 polynomial in three variables (or back), mapping
/// variable i of the source to target_vars[i] of the target.
MultiPoly change_arity(const MultiPoly& p, int target_arity, std::span<const int> target_vars);

}  // namespace folia
