// Value types for 0-cycles and 1-chains on the cube [-1,1]^n, plus the
// elementary operations: augmentation, mass, boundary, cone, clamp, and the
// free-space embedding. All types are immutable values; operations are pure.
//
// Two arithmetic modes share one representation: weights and coordinates are
// always exact rationals (a double is a dyadic rational, so float inputs
// embed exactly). The mode only changes the χ tolerance at construction time
// and how JSON is rendered. Cancellation, atom merging, and lattice
// membership are therefore exact in both modes.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "flatcycle/errors.hpp"
#include "flatcycle/numeric.hpp"

namespace flatcycle {

enum class Mode { Rational, Float };

// Tolerances, all pinned here.
namespace tol {
inline constexpr double kChiRel = 1e-12;       // float-mode χ slack, relative to mass
inline constexpr double kCubeOvershoot = 1e-12;  // accepted coordinate overshoot
inline constexpr double kGapRel = 1e-9;        // default duality-gap tolerance
inline constexpr double kCertify = 1e-9;       // certification residual bound
inline constexpr double kExact1d = 1e-12;      // 1d closed form vs solver
}  // namespace tol

struct Point {
  std::vector<Rat> x;

  Point() = default;
  explicit Point(std::vector<Rat> coords) : x(std::move(coords)) {}
  static Point of_doubles(const std::vector<double>& v);

  int dim() const { return static_cast<int>(x.size()); }
  double coord(int i) const { return to_double(x[static_cast<size_t>(i)]); }
  std::vector<double> coords_double() const;

  bool operator==(const Point& o) const { return x == o.x; }
  bool operator<(const Point& o) const;  // lexicographic, exact
};

double dist(const Point& a, const Point& b);    // Euclidean
double dist_l1(const Point& a, const Point& b);
double norm2(const Point& a);

class ZeroCycle;
namespace detail {
ZeroCycle raw_cycle(int n, Mode mode, std::map<Point, Rat> atoms);
}

// Finite signed atomic measure. The factory make_cycle enforces the χ
// invariant; atoms() is canonically sorted, holds no zeros, no duplicates.
class ZeroCycle {
 public:
  ZeroCycle() : n_(0), mode_(Mode::Rational) {}
  ZeroCycle(int n, Mode mode) : n_(n), mode_(mode) {}

  int n() const { return n_; }
  Mode mode() const { return mode_; }
  const std::map<Point, Rat>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  size_t size() const { return atoms_.size(); }

  Rat chi() const;
  Rat mass() const;

  bool operator==(const ZeroCycle& o) const {
    return n_ == o.n_ && atoms_ == o.atoms_;
  }

 private:
  int n_;
  Mode mode_;
  std::map<Point, Rat> atoms_;

  friend ZeroCycle detail::raw_cycle(int, Mode, std::map<Point, Rat>);
};

struct Segment {
  Point a;
  Point b;
  Rat coef;
};

// Weighted union of oriented segments; the filling witnesses live here.
struct OneChain {
  int n = 0;
  Mode mode = Mode::Rational;
  std::vector<Segment> segments;

  double mass() const;
  Rat mass_exact() const;
};

// Builds a cycle: merges duplicate points by summing weights, drops zeros,
// enforces the χ invariant (exactly in rational mode, within kChiRel·mass in
// float mode). Coordinates more than kCubeOvershoot outside the cube raise
// OutOfCube; overshoot within tolerance is clamped.
ZeroCycle make_cycle(int n, const std::vector<std::pair<Point, Rat>>& atoms,
                     Mode mode);

// Same canonicalization without the χ check (signed measures that are not
// cycles, e.g. single atoms for chi/mass arithmetic).
ZeroCycle make_measure(int n, const std::vector<std::pair<Point, Rat>>& atoms,
                       Mode mode);

// Σθᵢ·[[xᵢ]] − (Σθᵢ)·[[0]]; χ = 0 by construction.
ZeroCycle embed_free(int n, const std::vector<std::pair<Point, Rat>>& pts,
                     Mode mode = Mode::Rational);

inline Rat chi(const ZeroCycle& m) { return m.chi(); }
inline Rat mass(const ZeroCycle& m) { return m.mass(); }

// αT₁ + βT₂ with merged atoms and zero-weight pruning.
ZeroCycle combine(const Rat& alpha, const ZeroCycle& t1, const Rat& beta,
                  const ZeroCycle& t2);

// Coordinate-wise nearest-point projection onto the cube.
ZeroCycle clamp(const ZeroCycle& m);
Point clamp(const Point& p);

// ∂(Σ coefᵢ·[[aᵢ,bᵢ]]) = Σ coefᵢ·([[bᵢ]] − [[aᵢ]]); exact cancellation.
ZeroCycle boundary(const OneChain& s);

// Cone with vertex a over a cycle: one segment a→x per atom, coefficient θ.
// Requires χ(T) = 0 (in-mode); then boundary(cone(T,a)) = T.
OneChain cone(const ZeroCycle& t, const Point& a);

// Shared χ-precondition check used by the solvers.
void require_chi_zero(const ZeroCycle& t, const char* who);

}  // namespace flatcycle
