#include "folia/multipoly.hpp"

#include <algorithm>

#include "folia/errors.hpp"
#include "folia/upoly.hpp"

namespace folia {

namespace {

void check_arity(int arity) {
  if (arity != 2 && arity != 3) throw ArityError("polynomial arity must be 2 or 3");
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

bool divides(const Exponent& a, const Exponent& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

// Leading coefficient of p with respect to `var`, as a polynomial free of var.
MultiPoly leading_coefficient_in(const MultiPoly& p, int var) {
  int d = p.degree_in(var);
  MultiPoly lc(p.arity());
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<int>(e[var]) == d) {
      Exponent reduced = e;
      reduced[var] = 0;
      lc.add_term(reduced, c);
    }
  }
  return lc;
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int var) {
  const int db = b.degree_in(var);
  const MultiPoly lcb = leading_coefficient_in(b, var);
  MultiPoly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    Exponent shift{0, 0, 0};
    shift[var] = static_cast<unsigned>(dr - db);
    MultiPoly t = leading_coefficient_in(r, var) * MultiPoly::monomial(r.arity(), shift) * b;
    r = lcb * r - t;
  }
  return r;
}

int main_variable(const MultiPoly& a, const MultiPoly& b) {
  for (int v = a.arity() - 1; v >= 0; --v) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  return -1;
}

MultiPoly content_in(const MultiPoly& p, int var) {
  MultiPoly g(p.arity());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly primitive_part(const MultiPoly& p, int var) {
  MultiPoly c = content_in(p, var);
  auto q = exact_divide(p, c);
  if (!q) throw InternalError("content does not divide polynomial");
  return make_monic(*q);
}

}  // namespace

MultiPoly::MultiPoly(int arity) : arity_(arity) { check_arity(arity); }

MultiPoly MultiPoly::constant(int arity, const GaussianRational& c) {
  MultiPoly p(arity);
  p.add_term({0, 0, 0}, c);
  return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
  if (index < 0 || index >= arity) throw ArityError("variable index out of range");
  Exponent e{0, 0, 0};
  e[index] = 1;
  return monomial(arity, e);
}

MultiPoly MultiPoly::monomial(int arity, const Exponent& e, const GaussianRational& c) {
  MultiPoly p(arity);
  if (arity == 2 && e[2] != 0) throw ArityError("third exponent used in an arity-2 monomial");
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool MultiPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

int MultiPoly::degree() const {
  if (terms_.empty()) return kDegreeOfZero;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

int MultiPoly::degree_in(int var) const {
  if (var < 0 || var >= arity_) throw ArityError("variable index out of range");
  if (terms_.empty()) return kDegreeOfZero;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return static_cast<int>(d);
}

int MultiPoly::order() const {
  if (terms_.empty()) return kDegreeOfZero;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return degree() == order();
}

GaussianRational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

const std::pair<const Exponent, GaussianRational>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return *terms_.begin();
}

void MultiPoly::add_term(const Exponent& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (arity_ == 2 && e[2] != 0) throw ArityError("third exponent used in an arity-2 polynomial");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(total_degree(e)) == d) out.terms_.emplace(e, c);
  }
  return out;
}

GaussianRational MultiPoly::evaluate(std::span<const GaussianRational> point) const {
  if (static_cast<int>(point.size()) != arity_) throw ArityError("evaluation point has wrong dimension");
  // Cache powers per variable; degrees are small.
  std::array<std::vector<GaussianRational>, 3> powers;
  for (int v = 0; v < arity_; ++v) {
    int d = std::max(degree_in(v), 0);
    powers[v].reserve(d + 1);
    powers[v].emplace_back(1);
    for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * point[v]);
  }
  GaussianRational acc(0);
  for (const auto& [e, c] : terms_) {
    GaussianRational t = c;
    for (int v = 0; v < arity_; ++v) {
      if (e[v] != 0) t *= powers[v][e[v]];
    }
    acc += t;
  }
  return acc;
}

void MultiPoly::check_same_arity(const MultiPoly& o) const {
  if (arity_ != o.arity_) throw ArityError("polynomial arity mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_arity(b);
  MultiPoly out(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result = MultiPoly::constant(base.arity(), 1);
  MultiPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

MultiPoly partial(const MultiPoly& p, int var) {
  if (var < 0 || var >= p.arity()) throw ArityError("variable index out of range");
  MultiPoly out(p.arity());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.add_term(d, c * GaussianRational(static_cast<long>(e[var])));
  }
  return out;
}

MultiPoly homogenize(const MultiPoly& f, int n) {
  if (f.arity() != 2) throw ArityError("homogenize expects an affine (x, y) polynomial");
  if (!f.is_zero() && n < f.degree()) throw DomainError("homogenization degree below polynomial degree");
  if (n < 0) throw DomainError("negative homogenization degree");
  MultiPoly out(3);
  for (const auto& [e, c] : f.terms()) {
    out.add_term({e[0], e[1], static_cast<unsigned>(n) - e[0] - e[1]}, c);
  }
  return out;
}

MultiPoly dehomogenize(const MultiPoly& F) {
  if (F.arity() != 3) throw ArityError("dehomogenize expects a projective (X, Y, Z) polynomial");
  MultiPoly out(2);
  for (const auto& [e, c] : F.terms()) out.add_term({e[0], e[1], 0}, c);
  return out;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity() != b.arity()) throw ArityError("polynomial arity mismatch");
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  MultiPoly q(a.arity());
  MultiPoly r = a;
  const auto& [lead_e, lead_c] = b.leading_term();
  const GaussianRational lead_inv = lead_c.inverse();
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading_term();
    if (!divides(lead_e, re)) return std::nullopt;
    Exponent e{re[0] - lead_e[0], re[1] - lead_e[1], re[2] - lead_e[2]};
    MultiPoly t = MultiPoly::monomial(a.arity(), e, rc * lead_inv);
    q += t;
    r -= t * b;
  }
  return q;
}

MultiPoly leading_form(const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("leading form of the zero polynomial");
  return f.homogeneous_part(f.degree());
}

MultiPoly make_monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  const GaussianRational& lc = p.leading_term().second;
  if (lc.is_one()) return p;
  return p * lc.inverse();
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, int var) {
  int d = p.degree_in(var);
  std::vector<MultiPoly> out(std::max(d, -1) + 1, MultiPoly(p.arity()));
  for (const auto& [e, c] : p.terms()) {
    Exponent reduced = e;
    reduced[var] = 0;
    out[e[var]].add_term(reduced, c);
  }
  return out;
}

namespace {

// A common factor involving variable v survives specializing the other
// variables wherever the leading coefficient of a in v stays nonzero. So a
// trivial univariate gcd for every v proves a and b coprime.
bool specialization_proves_coprime(const MultiPoly& a, const MultiPoly& b) {
  const int n = a.arity();
  for (int v = 0; v < n; ++v) {
    if (a.degree_in(v) <= 0 || b.degree_in(v) <= 0) continue;
    bool proven = false;
    for (int attempt = 0; attempt < 3 && !proven; ++attempt) {
      std::vector<MultiPoly> values;
      for (int w = 0; w < n; ++w) {
        values.push_back(w == v ? MultiPoly::variable(n, v)
                                : MultiPoly::constant(n, GaussianRational(2 + 3 * w + 7 * attempt)));
      }
      MultiPoly sa = substitute(a, values), sb = substitute(b, values);
      if (sa.degree_in(v) != a.degree_in(v)) continue;
      proven = gcd(to_upoly(sa, v), to_upoly(sb, v)).degree() == 0;
    }
    if (!proven) return false;
  }
  return true;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity() != b.arity()) throw ArityError("polynomial arity mismatch");
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.arity(), 1);
  if (specialization_proves_coprime(a, b)) return MultiPoly::constant(a.arity(), 1);
  const int var = main_variable(a, b);
  if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

  MultiPoly content = gcd(content_in(a, var), content_in(b, var));
  MultiPoly pa = primitive_part(a, var);
  MultiPoly pb = primitive_part(b, var);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (true) {
    MultiPoly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      pb = MultiPoly::constant(a.arity(), 1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, var);
  }
  return make_monic(content * pb);
}

MultiPoly gcd(std::span<const MultiPoly> polys) {
  if (polys.empty()) throw DomainError("gcd of an empty list");
  MultiPoly g(polys.front().arity());
  for (const auto& p : polys) {
    g = gcd(g, p);
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

bool is_squarefree(const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree test of the zero polynomial");
  if (f.is_constant()) return true;
  MultiPoly g = f;
  for (int v = 0; v < f.arity(); ++v) {
    g = gcd(g, partial(f, v));
    if (g.is_constant()) return true;
  }
  return g.is_constant();
}

MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> values) {
  if (static_cast<int>(values.size()) != f.arity()) throw ArityError("substitution needs one value per variable");
  const int target = values.front().arity();
  for (const auto& v : values) {
    if (v.arity() != target) throw ArityError("substitution values disagree in arity");
  }
  std::array<std::vector<MultiPoly>, 3> powers;
  for (int v = 0; v < f.arity(); ++v) {
    int d = std::max(f.degree_in(v), 0);
    powers[v].push_back(MultiPoly::constant(target, 1));
    for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * values[v]);
  }
  MultiPoly out(target);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (int v = 0; v < f.arity(); ++v) {
      if (e[v] != 0) t *= powers[v][e[v]];
    }
    out += t;
  }
  return out;
}

MultiPoly translate(const MultiPoly& f, std::span<const GaussianRational> shift) {
  if (static_cast<int>(shift.size()) != f.arity()) throw ArityError("shift has wrong dimension");
  std::vector<MultiPoly> values;
  for (int v = 0; v < f.arity(); ++v) {
    values.push_back(MultiPoly::variable(f.arity(), v) + MultiPoly::constant(f.arity(), shift[v]));
  }
  return substitute(f, values);
}

MultiPoly change_arity(const MultiPoly& p, int target_arity, std::span<const int> target_vars) {
  if (static_cast<int>(target_vars.size()) != p.arity()) throw ArityError("variable map has wrong size");
  MultiPoly out(target_arity);
  for (const auto& [e, c] : p.terms()) {
    Exponent t{0, 0, 0};
    for (int v = 0; v < p.arity(); ++v) {
      if (e[v] == 0) continue;
      int tv = target_vars[v];
      if (tv < 0 || tv >= target_arity) throw ArityError("variable dropped while it still occurs");
      t[tv] += e[v];
    }
    out.add_term(t, c);
  }
  return out;
}

}  // namespace folia
