#include "folia/realtopo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <tuple>
#include <unordered_map>

#include "folia/errors.hpp"
#include "folia/interval.hpp"
#include "folia/kernels.hpp"
#include "folia/upoly.hpp"

namespace folia {

int OvalSet::certified_count() const {
  return static_cast<int>(std::count_if(ovals.begin(), ovals.end(), [](const Oval& o) { return o.certified; }));
}

namespace {

using kernels::DensePoly2;

void require_real(const MultiPoly& f) {
  if (f.arity() != 2) throw ArityError("real curves are polynomials in x, y");
  if (!f.is_real()) throw DomainError("real topology needs real coefficients");
}

// Coefficients of a real polynomial as exact rationals, dense in (x, y).
struct ExactPoly {
  int dx = 0, dy = 0;
  std::vector<mpq_class> c;

  explicit ExactPoly(const MultiPoly& f) {
    dx = std::max(f.degree_in(0), 0);
    dy = std::max(f.degree_in(1), 0);
    c.assign(static_cast<std::size_t>(dx + 1) * (dy + 1), 0);
    for (const auto& [e, v] : f.terms()) c[e[0] * (dy + 1) + e[1]] = v.re();
  }

  int sign_at(const mpq_class& x, const mpq_class& y) const {
    mpq_class acc = 0;
    for (int i = dx; i >= 0; --i) {
      mpq_class inner = 0;
      for (int j = dy; j >= 0; --j) inner = inner * y + c[i * (dy + 1) + j];
      acc = acc * x + inner;
    }
    return sgn(acc);
  }

  // Restriction to y = t (orient 0) or x = t (orient 1).
  QPoly restrict(int orient, const mpq_class& t) const {
    std::vector<mpq_class> out(orient == 0 ? dx + 1 : dy + 1, 0);
    for (int i = 0; i <= dx; ++i) {
      for (int j = 0; j <= dy; ++j) {
        const mpq_class& v = c[i * (dy + 1) + j];
        if (sgn(v) == 0) continue;
        if (orient == 0) {
          mpq_class p = v;
          for (int k = 0; k < j; ++k) p *= t;
          out[i] += p;
        } else {
          mpq_class p = v;
          for (int k = 0; k < i; ++k) p *= t;
          out[j] += p;
        }
      }
    }
    return QPoly(std::move(out));
  }
};

double eval_double(const DensePoly2& p, double x, double y) {
  double v, b;
  kernels::eval_scalar(p, &x, &y, 1, &v, &b);
  return v;
}

// ---------------------------------------------------------------------------
// Compactness and the default box.

QPoly leading_restriction(const MultiPoly& fn) {
  // fn(t, 1)
  std::vector<mpq_class> c(fn.degree() + 1, 0);
  for (const auto& [e, v] : fn.terms()) c[e[0]] += v.re();
  return QPoly(std::move(c));
}

// Rigorous lower bound for |fn| on the boundary of [-1, 1]^2.
double leading_form_minimum(const MultiPoly& fn) {
  DensePoly2 d = DensePoly2::from(fn);
  double best = INFINITY;
  struct Piece {
    double a, b;
    int side;
    int depth;
  };
  std::vector<Piece> stack;
  for (int side = 0; side < 4; ++side)
    for (int k = 0; k < 64; ++k) stack.push_back({-1.0 + k / 32.0, -1.0 + (k + 1) / 32.0, side, 0});
  while (!stack.empty()) {
    Piece p = stack.back();
    stack.pop_back();
    Interval t(p.a, p.b);
    Interval fixed(p.side % 2 == 0 ? -1.0 : 1.0);
    Interval v = p.side < 2 ? eval_interval(d, fixed, t) : eval_interval(d, t, fixed);
    if (v.excludes_zero()) {
      best = std::min(best, v.mig());
    } else if (p.depth < 40) {
      double mid = 0.5 * (p.a + p.b);
      stack.push_back({p.a, mid, p.side, p.depth + 1});
      stack.push_back({mid, p.b, p.side, p.depth + 1});
    } else {
      throw NumericError("leading form too close to zero on the unit square");
    }
  }
  return best;
}

}  // namespace

bool compactness_check(const MultiPoly& f) {
  require_real(f);
  if (f.is_zero()) throw DomainError("the zero polynomial is not a curve");
  if (f.is_constant()) return true;
  MultiPoly fn = leading_form(f);
  if (fn.coefficient({static_cast<unsigned>(fn.degree()), 0, 0}).is_zero()) return false;
  return SturmSequence(leading_restriction(fn)).count_real_roots() == 0;
}

Box default_box(const MultiPoly& f) {
  if (!compactness_check(f)) throw PreconditionError("real locus is not compact; supply a box");
  if (f.is_constant()) return {-1, 1, -1, 1};
  const int n = f.degree();
  double mn = leading_form_minimum(leading_form(f));
  mpq_class lower_sum = 0;
  for (const auto& [e, v] : f.terms())
    if (static_cast<int>(total_degree(e)) < n) lower_sum += abs(v.re());
  double A = lower_sum.get_d() * (1 + 0x1p-50);
  double rho = std::max(1.0, A / mn * (1 + 0x1p-50));
  double B = std::ceil(rho * 1.05 * 16.0) / 16.0;
  mpq_class b(B);
  return {-b, b, -b, b};
}

namespace {

constexpr int kMaxDepth = 6;
constexpr long kFine = 1L << kMaxDepth;

// A grid node is an exact root, or an edge carries a multiple root: shift.
struct GridDegenerate {};

using CrossKey = std::tuple<int, long, long, int>;  // orient, line, fine index, multiplicity slot

struct Segment {
  CrossKey a, b;
  bool certified;
};

class Marcher {
 public:
  Marcher(const MultiPoly& f, const mpq_class& x0, const mpq_class& y0, const mpq_class& fine_x,
          const mpq_class& fine_y, int n)
      : exact_(f),
        d_(DensePoly2::from(f)),
        dfx_(DensePoly2::from(partial(f, 0))),
        dfy_(DensePoly2::from(partial(f, 1))),
        x0_(x0),
        y0_(y0),
        fx_(fine_x),
        fy_(fine_y),
        n_(n),
        side_(static_cast<long>(n) * kFine),
        x0d_(x0.get_d()),
        y0d_(y0.get_d()),
        fxd_(fine_x.get_d()),
        fyd_(fine_y.get_d()) {
    if (qx(side_) != x0 + side_ * fine_x || qy(side_) != y0 + side_ * fine_y)
      throw InternalError("grid nodes are not exact doubles");
  }

  void run() {
    base_signs();
    for (long j = 0; j < n_; ++j)
      for (long i = 0; i < n_; ++i) process(i * kFine, j * kFine, kFine, 0);
  }

  std::vector<Segment> segments;
  std::map<CrossKey, Point2> positions;
  int uncertified_empty = 0;
  int uncertified_pairing = 0;

 private:
  // Exact: every node value is a short dyadic number.
  double cx(long X) const { return x0d_ + static_cast<double>(X) * fxd_; }
  double cy(long Y) const { return y0d_ + static_cast<double>(Y) * fyd_; }
  mpq_class qx(long X) const { return mpq_class(cx(X)); }
  mpq_class qy(long Y) const { return mpq_class(cy(Y)); }

  void base_signs() {
    const long m = n_ + 1;
    base_.assign(static_cast<std::size_t>(m * m), 0);
    std::vector<double> xs(m), ys(m), val(m), bnd(m);
    for (long i = 0; i < m; ++i) xs[i] = cx(i * kFine);
    for (long j = 0; j < m; ++j) {
      std::fill(ys.begin(), ys.end(), cy(j * kFine));
      kernels::eval(d_, xs.data(), ys.data(), m, val.data(), bnd.data());
      for (long i = 0; i < m; ++i) {
        int s = val[i] > bnd[i] ? 1 : (val[i] < -bnd[i] ? -1 : exact_.sign_at(qx(i * kFine), qy(j * kFine)));
        if (s == 0) throw GridDegenerate{};
        base_[j * m + i] = static_cast<signed char>(s);
      }
    }
  }

  int sign(long X, long Y) {
    if (X % kFine == 0 && Y % kFine == 0) return base_[(Y / kFine) * (n_ + 1) + X / kFine];
    const long key = X * (side_ + 1) + Y;
    auto it = sub_.find(key);
    if (it != sub_.end()) return it->second;
    double x = cx(X), y = cy(Y), v, b;
    kernels::eval(d_, &x, &y, 1, &v, &b);
    int s = v > b ? 1 : (v < -b ? -1 : exact_.sign_at(qx(X), qy(Y)));
    if (s == 0) throw GridDegenerate{};
    sub_.emplace(key, static_cast<signed char>(s));
    return s;
  }

  // Node on a line: orient 0 is horizontal (Y fixed), 1 vertical (X fixed).
  int line_sign(int orient, long line, long t) { return orient == 0 ? sign(t, line) : sign(line, t); }

  struct Line {
    std::unique_ptr<SturmSequence> sturm;
    std::unique_ptr<SturmSequence> multiple;  // roots of gcd(g, g')
    bool constant = false;
  };

  Line& line_data(int orient, long line) {
    auto key = std::make_pair(orient, line);
    auto it = lines_.find(key);
    if (it != lines_.end()) return it->second;
    Line L;
    QPoly g = exact_.restrict(orient, orient == 0 ? qy(line) : qx(line));
    if (g.degree() <= 0) {
      L.constant = true;
    } else {
      L.sturm = std::make_unique<SturmSequence>(g);
      QPoly m = gcd(g, g.derivative());
      if (m.degree() > 0) L.multiple = std::make_unique<SturmSequence>(m);
    }
    return lines_.emplace(key, std::move(L)).first->second;
  }

  // Number of distinct roots strictly inside the segment [a, b] of a line.
  int count(int orient, long line, long a, long b) {
    int sa = line_sign(orient, line, a), sb = line_sign(orient, line, b);
    Interval xi, yi;
    if (orient == 0) {
      xi = Interval(cx(a), cx(b));
      yi = Interval(cy(line));
    } else {
      xi = Interval(cx(line));
      yi = Interval(cy(a), cy(b));
    }
    if (eval_interval(d_, xi, yi).excludes_zero()) return 0;
    if (eval_interval(orient == 0 ? dfx_ : dfy_, xi, yi).excludes_zero()) return sa != sb ? 1 : 0;
    Line& L = line_data(orient, line);
    if (L.constant) return 0;
    mpq_class ta = orient == 0 ? qx(a) : qy(a), tb = orient == 0 ? qx(b) : qy(b);
    if (L.multiple && L.multiple->count_roots(ta, tb) > 0) throw GridDegenerate{};
    int c = L.sturm->count_roots(ta, tb);
    if ((c % 2 == 1) != (sa != sb)) throw GridDegenerate{};
    return c;
  }

  Point2 point_on(int orient, long line, double t) const {
    return orient == 0 ? Point2{t, cy(line)} : Point2{cx(line), t};
  }

  // Geometry only: float bisection inside one finest sub-edge.
  Point2 place(int orient, long line, long idx, int slot, int slots) {
    double a = orient == 0 ? cx(idx) : cy(idx), b = orient == 0 ? cx(idx + 1) : cy(idx + 1);
    if (slots == 1) {
      Point2 pa = point_on(orient, line, a);
      double fa = eval_double(d_, pa[0], pa[1]);
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (a + b);
        Point2 pm = point_on(orient, line, mid);
        double fm = eval_double(d_, pm[0], pm[1]);
        if ((fm > 0) == (fa > 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      return point_on(orient, line, 0.5 * (a + b));
    }
    return point_on(orient, line, a + (b - a) * (slot + 1) / (slots + 1));
  }

  // Crossing keys on [a, b], in increasing order along the line.
  void locate(int orient, long line, long a, long b, int c, std::vector<CrossKey>& out) {
    if (c == 0) return;
    if (b - a == 1) {
      for (int j = 0; j < c; ++j) {
        CrossKey k{orient, line, a, j};
        out.push_back(k);
        if (!positions.count(k)) positions.emplace(k, place(orient, line, a, j, c));
      }
      return;
    }
    long mid = (a + b) / 2;
    int left;
    if (c == 1) {
      left = line_sign(orient, line, a) != line_sign(orient, line, mid) ? 1 : 0;
    } else {
      left = count(orient, line, a, mid);
    }
    locate(orient, line, a, mid, left, out);
    locate(orient, line, mid, b, c - left, out);
  }

  void process(long ix, long iy, long size, int depth) {
    Interval xi(cx(ix), cx(ix + size)), yi(cy(iy), cy(iy + size));
    // Corner signs first: they are needed by every branch and may force a shift.
    int s00 = sign(ix, iy);
    (void)sign(ix + size, iy);
    (void)sign(ix, iy + size);
    (void)sign(ix + size, iy + size);
    if (eval_interval(d_, xi, yi).excludes_zero()) return;

    int cb = count(0, iy, ix, ix + size);
    int cr = count(1, ix + size, iy, iy + size);
    int ct = count(0, iy + size, ix, ix + size);
    int cl = count(1, ix, iy, iy + size);
    int total = cb + cr + ct + cl;
    bool gradient_ok =
        eval_interval(dfx_, xi, yi).excludes_zero() || eval_interval(dfy_, xi, yi).excludes_zero();

    if ((total == 0 || total == 2) && gradient_ok) {
      if (total == 2) {
        std::vector<CrossKey> keys;
        locate(0, iy, ix, ix + size, cb, keys);
        locate(1, ix + size, iy, iy + size, cr, keys);
        locate(0, iy + size, ix, ix + size, ct, keys);
        locate(1, ix, iy, iy + size, cl, keys);
        segments.push_back({keys[0], keys[1], true});
      }
      return;
    }
    if (depth < kMaxDepth) {
      long h = size / 2;
      process(ix, iy, h, depth + 1);
      process(ix + h, iy, h, depth + 1);
      process(ix, iy + h, h, depth + 1);
      process(ix + h, iy + h, h, depth + 1);
      return;
    }
    if (total == 0) {
      ++uncertified_empty;
      return;
    }
    // Counterclockwise boundary order: bottom, right, top reversed, left reversed.
    std::vector<CrossKey> ring, tmp;
    locate(0, iy, ix, ix + size, cb, ring);
    locate(1, ix + size, iy, iy + size, cr, ring);
    locate(0, iy + size, ix, ix + size, ct, tmp);
    ring.insert(ring.end(), tmp.rbegin(), tmp.rend());
    tmp.clear();
    locate(1, ix, iy, iy + size, cl, tmp);
    ring.insert(ring.end(), tmp.rbegin(), tmp.rend());
    // Each crossing flips the sign; pair from the first + to - crossing.
    const int k = static_cast<int>(ring.size());
    int start = 0;
    for (int i = 0; i < k; ++i) {
      int before = (i % 2 == 0) ? s00 : -s00;
      if (before > 0) {
        start = i;
        break;
      }
    }
    for (int i = 0; i + 1 < k; i += 2)
      segments.push_back({ring[(start + i) % k], ring[(start + i + 1) % k], false});
    ++uncertified_pairing;
  }

  ExactPoly exact_;
  DensePoly2 d_, dfx_, dfy_;
  mpq_class x0_, y0_, fx_, fy_;
  long n_;
  long side_;
  double x0d_, y0d_, fxd_, fyd_;
  std::vector<signed char> base_;
  std::unordered_map<long, signed char> sub_;
  std::map<std::pair<int, long>, Line> lines_;
};

mpq_class snap_down(const mpq_class& v, int bits) {
  mpz_class scaled = v.get_num() * (mpz_class(1) << bits);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v.get_den().get_mpz_t());
  mpq_class out(q, mpz_class(1) << bits);
  out.canonicalize();
  return out;
}

mpq_class snap_up(const mpq_class& v, int bits) {
  mpz_class scaled = v.get_num() * (mpz_class(1) << bits);
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v.get_den().get_mpz_t());
  mpq_class out(q, mpz_class(1) << bits);
  out.canonicalize();
  return out;
}

}  // namespace

OvalSet count_ovals(const MultiPoly& f, const std::optional<Box>& box_in, int resolution) {
  require_real(f);
  if (f.is_zero()) throw DomainError("the zero polynomial is not a curve");
  if (resolution < 1 || resolution > 4096) throw DomainError("resolution must be in 1..4096");
  Box box = box_in ? *box_in : default_box(f);
  if (box.x1 <= box.x0 || box.y1 <= box.y0) throw DomainError("empty box");
  if (abs(box.x0) > 1e6 || abs(box.x1) > 1e6 || abs(box.y0) > 1e6 || abs(box.y1) > 1e6)
    throw DomainError("box coordinates must stay within 1e6");

  OvalSet out;
  out.resolution = resolution;
  if (f.is_constant()) {
    out.box = box;
    return out;
  }
  // Nodes are dyadic rationals, hence exact doubles.
  constexpr int kBits = 20;
  const mpq_class step_x = snap_up((box.x1 - box.x0) / resolution, kBits);
  const mpq_class step_y = snap_up((box.y1 - box.y0) / resolution, kBits);
  const mpq_class fine_x = step_x / kFine, fine_y = step_y / kFine;
  mpq_class x0 = snap_down(box.x0, kBits), y0 = snap_down(box.y0, kBits);

  for (int attempt = 0; attempt < 8; ++attempt) {
    mpq_class sx = x0 - fine_x * mpq_class(5 * attempt) / 16;
    mpq_class sy = y0 - fine_y * mpq_class(3 * attempt) / 16;
    Marcher m(f, sx, sy, fine_x, fine_y, resolution);
    try {
      m.run();
    } catch (const GridDegenerate&) {
      ++out.shifts;
      continue;
    }
    out.box = {sx, sx + step_x * resolution, sy, sy + step_y * resolution};

    // Join segments through shared crossing keys.
    std::map<CrossKey, std::vector<int>> incident;
    for (int s = 0; s < static_cast<int>(m.segments.size()); ++s) {
      incident[m.segments[s].a].push_back(s);
      incident[m.segments[s].b].push_back(s);
    }
    bool branching = false;
    for (const auto& [k, v] : incident)
      if (v.size() > 2) branching = true;
    if (branching) out.warnings.push_back("a crossing joins more than two segments; topology unreliable");

    std::vector<bool> used(m.segments.size(), false);
    for (int s0 = 0; s0 < static_cast<int>(m.segments.size()); ++s0) {
      if (used[s0]) continue;
      // Walk forward from s0's b end, then backward from its a end if open.
      std::vector<CrossKey> chain{m.segments[s0].a, m.segments[s0].b};
      bool certified = m.segments[s0].certified;
      used[s0] = true;
      bool closed = false;
      auto walk = [&](CrossKey at, std::vector<CrossKey>& seq) {
        while (true) {
          int next = -1;
          for (int s : incident[at])
            if (!used[s]) {
              next = s;
              break;
            }
          if (next < 0) return false;
          used[next] = true;
          certified = certified && m.segments[next].certified;
          at = m.segments[next].a == at ? m.segments[next].b : m.segments[next].a;
          if (at == chain.front() && &seq == &chain) return true;
          seq.push_back(at);
        }
      };
      closed = walk(chain.back(), chain);
      if (!closed) {
        std::vector<CrossKey> back;
        walk(chain.front(), back);
        ++out.open_chains;
        continue;
      }
      Oval o;
      for (const auto& k : chain) o.vertices.push_back(m.positions.at(k));
      o.vertices.push_back(o.vertices.front());
      o.certified = certified;
      out.ovals.push_back(std::move(o));
    }
    if (out.open_chains > 0) out.warnings.push_back(std::to_string(out.open_chains) + " branch(es) leave the box");
    if (m.uncertified_empty > 0) {
      out.complete = false;
      out.warnings.push_back(std::to_string(m.uncertified_empty) +
                             " cell(s) at maximum depth could hide a small component");
    }
    if (m.uncertified_pairing > 0) {
      out.complete = false;
      out.warnings.push_back(std::to_string(m.uncertified_pairing) +
                             " cell(s) at maximum depth paired crossings without certificate");
    }
    return out;
  }
  throw NumericError("grid keeps meeting the curve degenerately after 8 shifts");
}

// ---------------------------------------------------------------------------
// Tracing.

namespace {

struct Tracer {
  DensePoly2 f, fx, fy;

  explicit Tracer(const MultiPoly& p)
      : f(DensePoly2::from(p)), fx(DensePoly2::from(partial(p, 0))), fy(DensePoly2::from(partial(p, 1))) {}

  // Newton projection along the gradient; nullopt when it does not converge.
  std::optional<Point2> project(Point2 p) const {
    for (int it = 0; it < 40; ++it) {
      double v = eval_double(f, p[0], p[1]);
      double gx = eval_double(fx, p[0], p[1]), gy = eval_double(fy, p[0], p[1]);
      double g2 = gx * gx + gy * gy;
      if (!(g2 > 0) || !std::isfinite(g2)) return std::nullopt;
      double dx = v * gx / g2, dy = v * gy / g2;
      p[0] -= dx;
      p[1] -= dy;
      if (std::hypot(dx, dy) <= 1e-15 * std::max(1.0, std::hypot(p[0], p[1]))) return p;
    }
    return std::nullopt;
  }

  Point2 tangent(const Point2& p) const {
    double gx = eval_double(fx, p[0], p[1]), gy = eval_double(fy, p[0], p[1]);
    double n = std::hypot(gx, gy);
    return {-gy / n, gx / n};
  }
};

}  // namespace

Polyline trace_oval(const MultiPoly& f, const Point2& seed, const TraceOptions& opt) {
  require_real(f);
  if (f.degree() < 1) throw DomainError("cannot trace a constant");
  if (!(opt.step > 0) || !(opt.min_step > 0) || opt.min_step > opt.step) throw DomainError("bad step sizes");
  Tracer tr(f);
  auto start = tr.project(seed);
  if (!start) throw NumericError("seed does not project onto the curve");
  if (std::hypot((*start)[0] - seed[0], (*start)[1] - seed[1]) > 0.1)
    throw NumericError("seed is too far from the curve");

  Polyline out{*start};
  Point2 p = *start;
  double h = opt.step, travelled = 0;
  for (long k = 0; k < opt.max_steps; ++k) {
    Point2 t = tr.tangent(p);
    Point2 q{p[0] + h * t[0], p[1] + h * t[1]};
    Interval bx(std::min(p[0], q[0]) - h, std::max(p[0], q[0]) + h);
    Interval by(std::min(p[1], q[1]) - h, std::max(p[1], q[1]) + h);
    if (!eval_interval(tr.fx, bx, by).excludes_zero() && !eval_interval(tr.fy, bx, by).excludes_zero()) {
      h *= 0.5;
      if (h < opt.min_step) throw NumericError("tracing reached a singular point of the curve");
      continue;
    }
    auto c = tr.project(q);
    if (!c || std::hypot((*c)[0] - q[0], (*c)[1] - q[1]) > 0.5 * h) {
      h *= 0.5;
      if (h < opt.min_step) throw NumericError("corrector failed near a singular point");
      continue;
    }
    travelled += std::hypot((*c)[0] - p[0], (*c)[1] - p[1]);
    p = *c;
    if (travelled > 4 * opt.step && std::hypot(p[0] - out.front()[0], p[1] - out.front()[1]) < h) {
      out.push_back(out.front());
      return out;
    }
    out.push_back(p);
    h = std::min(opt.step, 2 * h);
  }
  throw NumericError("oval did not close within the step budget");
}

std::string format_polylines(const std::vector<Polyline>& lines) {
  std::string out;
  char buf[64];
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (k > 0) out += '\n';
    for (const auto& v : lines[k]) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g\n", v[0], v[1]);
      out += buf;
    }
  }
  return out;
}

}  // namespace folia
