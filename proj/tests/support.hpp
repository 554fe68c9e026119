#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "folia/multipoly.hpp"

namespace folia::testing {

// Minimum number of randomized cases in every property suite.
inline constexpr int kCases = 200;

// Records the case count so the acceptance run can check it from the report.
inline void record_cases(int n) { ::testing::Test::RecordProperty("cases", n); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  bool coin() { return uniform(0, 1) == 1; }

  mpq_class rational(long range = 5, long max_den = 3) {
    mpq_class q(uniform(-range, range), uniform(1, max_den));
    q.canonicalize();
    return q;
  }
  mpq_class nonzero_rational(long range = 5, long max_den = 3) {
    for (;;) {
      mpq_class q = rational(range, max_den);
      if (sgn(q) != 0) return q;
    }
  }
  GaussianRational number(bool complex, long range = 5) {
    return complex ? GaussianRational(rational(range), rational(range)) : GaussianRational(rational(range));
  }
  GaussianRational nonzero_number(bool complex, long range = 5) {
    for (;;) {
      GaussianRational z = number(complex, range);
      if (!z.is_zero()) return z;
    }
  }

  /// Random polynomial with up to `terms` terms of total degree <= deg.
  MultiPoly poly(int arity, int deg, int terms, bool complex = false) {
    MultiPoly p(arity);
    for (int k = 0; k < terms; ++k) {
      Exponent e{0, 0, 0};
      int d = static_cast<int>(uniform(0, deg));
      for (int s = 0; s < d; ++s) e[uniform(0, arity - 1)]++;
      p.add_term(e, number(complex));
    }
    return p;
  }

  /// Random homogeneous polynomial of degree deg in X, Y, Z, nonzero.
  MultiPoly homogeneous(int deg, int terms, bool complex = false) {
    for (;;) {
      MultiPoly p(3);
      for (int k = 0; k < terms; ++k) {
        Exponent e{0, 0, 0};
        for (int s = 0; s < deg; ++s) e[uniform(0, 2)]++;
        p.add_term(e, number(complex));
      }
      if (!p.is_zero()) return p;
    }
  }

  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

inline MultiPoly var(int arity, int k) { return MultiPoly::variable(arity, k); }
inline MultiPoly cst(int arity, const GaussianRational& c) { return MultiPoly::constant(arity, c); }

}  // namespace folia::testing
