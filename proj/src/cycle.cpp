#include "flatcycle/cycle.hpp"

#include <cmath>
#include <sstream>

namespace flatcycle {

Point Point::of_doubles(const std::vector<double>& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (double d : v) c.push_back(rat_of_double(d));
  return Point(std::move(c));
}

std::vector<double> Point::coords_double() const {
  std::vector<double> v;
  v.reserve(x.size());
  for (const Rat& q : x) v.push_back(to_double(q));
  return v;
}

bool Point::operator<(const Point& o) const {
  if (x.size() != o.x.size()) return x.size() < o.x.size();
  for (size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], o.x[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

double dist(const Point& a, const Point& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.x.size(); ++i) {
    double d = to_double(a.x[i]) - to_double(b.x[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

double dist_l1(const Point& a, const Point& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.x.size(); ++i)
    s += std::fabs(to_double(a.x[i]) - to_double(b.x[i]));
  return s;
}

double norm2(const Point& a) {
  double s = 0.0;
  for (const Rat& q : a.x) {
    double d = to_double(q);
    s += d * d;
  }
  return std::sqrt(s);
}

namespace detail {
ZeroCycle raw_cycle(int n, Mode mode, std::map<Point, Rat> atoms) {
  ZeroCycle out(n, mode);
  out.atoms_ = std::move(atoms);
  return out;
}
}  // namespace detail

Rat ZeroCycle::chi() const {
  Rat s = 0;
  for (const auto& [p, w] : atoms_) s += w;
  return s;
}

Rat ZeroCycle::mass() const {
  Rat s = 0;
  for (const auto& [p, w] : atoms_) s += rat_abs(w);
  return s;
}

double OneChain::mass() const { return to_double(mass_exact()); }

Rat OneChain::mass_exact() const {
  // Euclidean lengths are irrational in general, so only the 1d case admits a
  // truly exact mass; higher dimensions embed the double length (dyadic).
  Rat s = 0;
  for (const Segment& seg : segments) {
    if (n == 1) {
      s += rat_abs(seg.coef) * rat_abs(seg.b.x[0] - seg.a.x[0]);
    } else {
      s += rat_abs(seg.coef) * rat_of_double(dist(seg.a, seg.b));
    }
  }
  return s;
}

namespace {

const Rat kOne = 1;
const Rat kMinusOne = -1;

// Clamps a coordinate that is within kCubeOvershoot of the cube; anything
// farther out is an input error.
Rat check_coord(const Rat& c) {
  if (c > kOne) {
    if (to_double(c - kOne) > tol::kCubeOvershoot)
      throw OutOfCube("coordinate " + rat_to_string(c) + " exceeds [-1,1]");
    return kOne;
  }
  if (c < kMinusOne) {
    if (to_double(kMinusOne - c) > tol::kCubeOvershoot)
      throw OutOfCube("coordinate " + rat_to_string(c) + " exceeds [-1,1]");
    return kMinusOne;
  }
  return c;
}

void prune_zeros(std::map<Point, Rat>& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second == 0)
      it = m.erase(it);
    else
      ++it;
  }
}

ZeroCycle build(int n, const std::vector<std::pair<Point, Rat>>& atoms,
                Mode mode, bool check_chi) {
  std::map<Point, Rat> merged;
  for (const auto& [p, w] : atoms) {
    if (p.dim() != n)
      throw DimensionMismatch("atom of dimension " + std::to_string(p.dim()) +
                              " in ambient dimension " + std::to_string(n));
    if (w == 0) continue;
    Point q = p;
    for (Rat& c : q.x) {
      c.canonicalize();  // tolerate unreduced caller fractions
      c = check_coord(c);
    }
    Rat wc = w;
    wc.canonicalize();
    merged[q] += wc;
  }
  prune_zeros(merged);
  ZeroCycle out = detail::raw_cycle(n, mode, std::move(merged));
  if (check_chi) {
    Rat c = out.chi();
    if (c != 0) {
      if (mode == Mode::Rational)
        throw ChiNonZero("weights sum to " + rat_to_string(c) +
                         ", expected exactly 0");
      double imbalance = std::fabs(to_double(c));
      double scale = to_double(out.mass());
      if (imbalance > tol::kChiRel * scale)
        throw ChiNonZero("weights sum to " + std::to_string(imbalance) +
                         " which exceeds the float-mode tolerance");
    }
  }
  return out;
}

}  // namespace

ZeroCycle make_cycle(int n, const std::vector<std::pair<Point, Rat>>& atoms,
                     Mode mode) {
  return build(n, atoms, mode, /*check_chi=*/true);
}

ZeroCycle make_measure(int n, const std::vector<std::pair<Point, Rat>>& atoms,
                       Mode mode) {
  return build(n, atoms, mode, /*check_chi=*/false);
}

ZeroCycle embed_free(int n, const std::vector<std::pair<Point, Rat>>& pts,
                     Mode mode) {
  std::vector<std::pair<Point, Rat>> atoms = pts;
  Rat total = 0;
  for (const auto& [p, w] : pts) total += w;
  Point origin(std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
  atoms.emplace_back(origin, -total);
  return make_cycle(n, atoms, mode);
}

ZeroCycle combine(const Rat& alpha, const ZeroCycle& t1, const Rat& beta,
                  const ZeroCycle& t2) {
  if (!t1.empty() && !t2.empty() && t1.n() != t2.n())
    throw DimensionMismatch("combine of dimensions " + std::to_string(t1.n()) +
                            " and " + std::to_string(t2.n()));
  int n = t1.empty() ? t2.n() : t1.n();
  Mode mode =
      (t1.mode() == Mode::Float || t2.mode() == Mode::Float) ? Mode::Float
                                                             : Mode::Rational;
  std::map<Point, Rat> dst;
  if (alpha != 0)
    for (const auto& [p, w] : t1.atoms()) dst[p] += alpha * w;
  if (beta != 0)
    for (const auto& [p, w] : t2.atoms()) dst[p] += beta * w;
  for (auto it = dst.begin(); it != dst.end();) {
    if (it->second == 0)
      it = dst.erase(it);
    else
      ++it;
  }
  return detail::raw_cycle(n, mode, std::move(dst));
}

Point clamp(const Point& p) {
  Point q = p;
  for (Rat& c : q.x) {
    if (c > kOne) c = kOne;
    if (c < kMinusOne) c = kMinusOne;
  }
  return q;
}

ZeroCycle clamp(const ZeroCycle& m) {
  std::map<Point, Rat> dst;
  for (const auto& [p, w] : m.atoms()) dst[clamp(p)] += w;
  for (auto it = dst.begin(); it != dst.end();) {
    if (it->second == 0)
      it = dst.erase(it);
    else
      ++it;
  }
  return detail::raw_cycle(m.n(), m.mode(), std::move(dst));
}

ZeroCycle boundary(const OneChain& s) {
  std::vector<std::pair<Point, Rat>> atoms;
  atoms.reserve(2 * s.segments.size());
  for (const Segment& seg : s.segments) {
    if (seg.coef == 0) continue;
    atoms.emplace_back(seg.b, seg.coef);
    atoms.emplace_back(seg.a, -seg.coef);
  }
  return make_cycle(s.n, atoms, s.mode);
}

OneChain cone(const ZeroCycle& t, const Point& a) {
  require_chi_zero(t, "cone");
  if (!t.empty() && a.dim() != t.n())
    throw DimensionMismatch("cone vertex dimension mismatch");
  OneChain out;
  out.n = t.empty() ? a.dim() : t.n();
  out.mode = t.mode();
  for (const auto& [p, w] : t.atoms()) {
    if (p == a) continue;  // zero-length segment carries no mass, no boundary
    out.segments.push_back(Segment{a, p, w});
  }
  return out;
}

void require_chi_zero(const ZeroCycle& t, const char* who) {
  Rat c = t.chi();
  if (c == 0) return;
  if (t.mode() == Mode::Float) {
    double imbalance = std::fabs(to_double(c));
    if (imbalance <= tol::kChiRel * to_double(t.mass())) return;
  }
  throw ChiNonZero(std::string(who) + ": input has chi = " + rat_to_string(c));
}

}  // namespace flatcycle
