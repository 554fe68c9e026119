#pragma once

#include <span>
#include <string>
#include <vector>

namespace folia {

struct BoundReport {
  std::string theorem;
  int m = -1;  // foliation degree, -1 when not an input
  int n = -1;  // curve degree, -1 when not an input
  bool r_zero = true;
  std::vector<int> orders;     // singular orders (harnack)
  std::vector<int> partition;  // degree partition (mk)
  long value = 0;
  long raw = 0;  // unclamped formula value
  bool clamped = false;
  std::string note;
};

/// (n-1)(n-2)/2 + [n even] - sum nu (nu - 1), clamped at 0.
BoundReport harnack_bound(int n, std::span<const int> orders);

/// m + 2, with the logarithmic-type note for equality.
BoundReport nodal_degree_bound(int m);
BoundReport nondicritical_degree_bound(int m);

/// (m-1)(m-2)/2 + [m even].
BoundReport thm1_bound(int m);
/// m(m-1)/2 + [m even] when r = 0, (m+1)m/2 + [m even] otherwise.
BoundReport thm2_bound(int m, bool r_zero);
/// Same formula as thm1_bound; m >= 2.
BoundReport thm4_bound(int m);

struct MkValue {
  int m = 0;
  int k = 0;
  std::vector<int> partition;
  long value = 0;     // sum over parts of (d-1)(d-2)/2 + [d even]
  long envelope = 0;  // (m+2-k)(m+1-k)/2 + sum [d even]
};

/// Oval total for a partition of m + 2 into k >= 3 parts.
MkValue mk_value(int m, std::span<const int> partition);

/// Maximum of mk_value over every k in 3..m+2 and every partition; ties go
/// to the smallest k.
MkValue mk_argmax(int m);

}  // namespace folia
