// The mass-at-scale functional κ(T,ε): least mass of a cycle within certified
// transport distance ε of T, computed as one LP over a candidate support
// (a,b node splittings plus a complete flow graph with a single transport
// budget row). The value is an upper bound on the unrestricted infimum and
// tightens as the candidate support refines.
//
// Also here: the discrete divergence-representation (Beckmann) problem on the
// grid edge skeleton, and the L1 modulus of an edge field under lattice
// shifts.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flatcycle/grid.hpp"
#include "flatcycle/transport.hpp"

namespace flatcycle {

struct SupportPolicy {
  bool include_grid = false;
  long grid_k = 0;
  std::vector<Point> extra;  // shared candidate sets for comparisons

  static SupportPolicy support_only() { return {}; }
  static SupportPolicy with_grid(long k) { return {true, k, {}}; }
};

struct KappaEstimate {
  double eps = 0.0;
  double value = 0.0;      // mass of the witness
  ZeroCycle witness;       // χ = 0 exactly; gnorm(T − witness) ≤ eps (certified)
  double witness_gdist = 0.0;
  SupportPolicy policy;
  int lp_pivots = 0;
};

// Requires χ(T) = 0 and eps > 0. The witness is re-certified with an
// independent gnorm call before returning.
KappaEstimate kappa(const ZeroCycle& t, double eps,
                    const SupportPolicy& policy = {}, double tol = 1e-9);

std::vector<KappaEstimate> kappa_curve(const ZeroCycle& t,
                                       const std::vector<double>& eps_list,
                                       const SupportPolicy& policy = {},
                                       double tol = 1e-9);

struct PropertyCheck {
  std::string name;
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool all_pass() const;
};

// Subadditivity, scaling, and the triangle-style comparison for the
// estimator, all evaluated on one shared candidate support so the three LP
// values are comparable like-for-like.
PropertyReport verify_80(const ZeroCycle& t1, const ZeroCycle& t2, double eps1,
                         double eps2, const Rat& lambda, double tol = 1e-7);

// Signed flow per lattice edge; the edge (base, axis) is oriented toward
// +axis and base is its lower endpoint.
struct GridVectorField {
  GridSpec spec;
  std::map<std::pair<GridIndex, int>, Rat> flow;

  Rat l1_exact() const;  // Σ|f|·(1/k)
  double l1() const;
};

struct BeckmannResult {
  GridVectorField field;
  double value = 0.0;       // Σ|f_e|·(1/k), the optimal divergence cost
  GridCycle snapped;        // the grid cycle the field represents
  double gnorm_snapped = 0.0;
};

// Snaps T to the grid, then finds the minimum-L1 edge flow whose discrete
// divergence is the snapped cycle. Grid paths realize the ℓ1 metric, so
// gnorm(snapped) ≤ value ≤ √n·gnorm(snapped).
BeckmannResult beckmann(const ZeroCycle& t, const GridSpec& spec,
                        double tol = 1e-9);

// Exact divergence of a field: index → Σ_axis f(v−e_a,a) − f(v,a).
std::map<GridIndex, Rat> divergence(const GridVectorField& eta);

struct ModulusCurve {
  std::vector<std::pair<double, double>> samples;  // (r, osc value)
};

// osc₁(η, r): max L1 difference between the field and a lattice translate of
// length ≤ r, zero-extended outside the cube.
ModulusCurve osc1(const GridVectorField& eta, const std::vector<double>& r_list);

}  // namespace flatcycle
