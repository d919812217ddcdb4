// Grid skeletons on the cube: the (2k+1)^n vertex lattice, its axis edges,
// vertex snapping, the separating direction used to reduce grid cycles to the
// line, the exact 1d filling, and the two-sided mass/norm comparison.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "flatcycle/cycle.hpp"
#include "flatcycle/transport.hpp"

namespace flatcycle {

inline constexpr long kDefaultGridCap = 1L << 22;

struct GridSpec {
  int n = 1;
  long k = 1;

  double eps_k() const { return 1.0 / static_cast<double>(k); }
  Rat eps_k_exact() const { return Rat(1, k); }
  Int num_points() const;  // (2k+1)^n
  Int num_edges() const;   // n·2k·(2k+1)^(n-1)
};

using GridIndex = std::vector<long>;

// Grid-supported signed measure: weight per integer index, point = index/k.
// Use the validating factory for cycles (χ = 0); quantization intermediates
// may carry nonzero χ and are built with make_grid_measure.
struct GridCycle {
  GridSpec spec;
  std::map<GridIndex, Rat> theta;

  Rat chi() const;
  Rat mass() const;
  ZeroCycle to_cycle(Mode mode = Mode::Rational) const;
  Point point_of(const GridIndex& idx) const;
  bool operator==(const GridCycle& o) const {
    return spec.n == o.spec.n && spec.k == o.spec.k && theta == o.theta;
  }
};

GridCycle make_grid_cycle(const GridSpec& spec,
                          const std::vector<std::pair<GridIndex, Rat>>& theta);
GridCycle make_grid_measure(const GridSpec& spec,
                            const std::vector<std::pair<GridIndex, Rat>>& theta);

// All lattice points index/k in lexicographic index order.
std::vector<Point> grid_points(const GridSpec& spec, long cap = kDefaultGridCap);
std::vector<GridIndex> grid_indices(const GridSpec& spec,
                                    long cap = kDefaultGridCap);

// All adjacent index pairs at distance 1/k (differ by one in one coordinate).
std::vector<std::pair<GridIndex, GridIndex>> grid_edges(
    const GridSpec& spec, long cap = kDefaultGridCap);

struct SnapResult {
  GridCycle snapped;
  double bound = 0.0;  // Σ|θ|·dist(x, target) ≥ gnorm(T − snapped)
};

// Moves every atom to its nearest lattice point (ties toward −∞ per
// coordinate), merging weights exactly; χ is preserved.
SnapResult snap(const ZeroCycle& t, const GridSpec& spec);

struct SeparatingDirection {
  std::vector<double> u;  // unit vector
  double alpha_k = 0.0;
  double rho = 0.0;  // guaranteed pairwise separation of ⟨·,u⟩ on the lattice
};

// A direction whose inner products separate all lattice points by at least
// rho = ε_k^n/(2√2·5^(n−1)) (for n = 1, rho is the exact spacing 1/k).
SeparatingDirection separating_direction(const GridSpec& spec);

struct SeparationCheck {
  double min_abs_projection = 0.0;
  double rho = 0.0;
  long pairs = 0;
  bool pass = false;
};

// Exhaustive |⟨x−y,u⟩| ≥ rho over all distinct lattice point pairs.
SeparationCheck check_separation(const GridSpec& spec, long cap = kDefaultGridCap);

// The unique compactly supported 1d filling: Σ γᵢ·[[xᵢ,xᵢ₊₁]] over the sorted
// support with γᵢ the negative prefix sums. boundary(line_fill(P)) = P and
// mass(line_fill(P)) = gnorm_1d(P), both exact.
OneChain line_fill(const ZeroCycle& p);
OneChain line_fill(const GridCycle& p);

struct SandwichReport {
  double g = 0.0;     // gnorm, certified
  double m = 0.0;     // mass
  double left_slack = 0.0;   // m − g/√n  (≥ 0 expected)
  double right_slack = 0.0;  // c(n)·k^{2n}·g − m  (≥ 0 expected)
  double c_n = 0.0;
  bool pass = false;
};

// Two-sided comparison g/√n ≤ m ≤ c(n)·k^(2n)·g on a grid cycle, with the
// explicit constant c(1) = 3, c(n) = 2√2·5^(n−1)·3^n.
SandwichReport verify_92(const GridCycle& p, double tol = 1e-9);

double sandwich_constant(int n);  // the c(n) above

}  // namespace flatcycle
