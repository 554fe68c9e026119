#include "folia/bounds.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "folia/errors.hpp"

namespace folia {

namespace {

long even_bonus(long d) { return d % 2 == 0 ? 1 : 0; }

long harnack_part(long d) { return (d - 1) * (d - 2) / 2 + even_bonus(d); }

}  // namespace

BoundReport harnack_bound(int n, std::span<const int> orders) {
  if (n < 1) throw DomainError("curve degree must be positive");
  BoundReport r;
  r.theorem = "harnack";
  r.n = n;
  r.orders.assign(orders.begin(), orders.end());
  r.raw = harnack_part(n);
  for (int nu : orders) {
    if (nu < 2) throw DomainError("singular orders are at least 2");
    r.raw -= static_cast<long>(nu) * (nu - 1);
  }
  r.clamped = r.raw < 0;
  r.value = std::max(0L, r.raw);
  return r;
}

BoundReport nodal_degree_bound(int m) {
  if (m < 0) throw DomainError("foliation degree must be nonnegative");
  BoundReport r;
  r.theorem = "degree-nodal";
  r.m = m;
  r.value = r.raw = m + 2;
  r.note = "equality forces a reducible curve and a logarithmic foliation with sum lambda_i deg F_i = 0";
  return r;
}

BoundReport nondicritical_degree_bound(int m) {
  if (m < 0) throw DomainError("foliation degree must be nonnegative");
  BoundReport r;
  r.theorem = "degree-nondicritical";
  r.m = m;
  r.value = r.raw = m + 2;
  return r;
}

BoundReport thm1_bound(int m) {
  if (m < 1) throw DomainError("field degree must be at least 1");
  BoundReport r;
  r.theorem = "t1";
  r.m = m;
  r.value = r.raw = harnack_part(m);
  return r;
}

BoundReport thm2_bound(int m, bool r_zero) {
  if (m < 1) throw DomainError("field degree must be at least 1");
  BoundReport r;
  r.theorem = "t2";
  r.m = m;
  r.r_zero = r_zero;
  const long mm = m;
  r.value = r.raw = (r_zero ? mm * (mm - 1) / 2 : (mm + 1) * mm / 2) + even_bonus(mm);
  return r;
}

BoundReport thm4_bound(int m) {
  if (m < 2) throw DomainError("this bound needs m >= 2");
  BoundReport r = thm1_bound(m);
  r.theorem = "t4";
  return r;
}

MkValue mk_value(int m, std::span<const int> partition) {
  const int k = static_cast<int>(partition.size());
  if (m < 1) throw DomainError("field degree must be at least 1");
  if (k < 3 || k > m + 2) throw DomainError("number of curves must lie in 3..m+2");
  if (std::any_of(partition.begin(), partition.end(), [](int d) { return d < 1; })) {
    throw DomainError("curve degrees must be positive");
  }
  if (std::accumulate(partition.begin(), partition.end(), 0) != m + 2) {
    throw DomainError("curve degrees must sum to m + 2");
  }
  MkValue out{m, k, {partition.begin(), partition.end()}, 0, 0};
  long bonus = 0;
  for (int d : partition) {
    out.value += harnack_part(d);
    bonus += even_bonus(d);
  }
  out.envelope = static_cast<long>(m + 2 - k) * (m + 1 - k) / 2 + bonus;
  return out;
}

MkValue mk_argmax(int m) {
  if (m < 1) throw DomainError("field degree must be at least 1");
  MkValue best;
  best.value = -1;
  std::vector<int> parts;
  // Partitions in nonincreasing order.
  std::function<void(int, int)> walk = [&](int remaining, int largest) {
    if (remaining == 0) {
      if (parts.size() < 3) return;
      MkValue v = mk_value(m, parts);
      if (v.value > best.value || (v.value == best.value && v.k < best.k)) best = v;
      return;
    }
    for (int d = std::min(remaining, largest); d >= 1; --d) {
      parts.push_back(d);
      walk(remaining - d, d);
      parts.pop_back();
    }
  };
  walk(m + 2, m + 2);
  return best;
}

}  // namespace folia
