// Exact evaluation of the flat/Kantorovich–Rubinstein norm of an atomic
// 0-cycle as a transportation problem between its negative and positive
// parts, with a primal plan, dual 1-Lipschitz potentials on the support, and
// a certified duality gap.
//
// The solver is a transportation-table network simplex: flows are exact
// rationals (marginals hold exactly), costs and duals are doubles. Entering
// variables use a most-negative rule with lexicographic ties and fall back to
// Bland's rule after a degenerate streak, so runs are deterministic and
// termination is guaranteed.
#pragma once

#include <string>
#include <vector>

#include "flatcycle/cycle.hpp"

namespace flatcycle {

struct PlanEntry {
  Point from;  // source: atom of the negative part
  Point to;    // sink: atom of the positive part
  Rat flow;    // > 0
};

struct Potential {
  Point x;
  double value;
};

struct TransportSolution {
  double value = 0.0;  // Σ flow·|to−from|
  double dual = 0.0;   // ⟨u, T⟩
  double gap = 0.0;    // value − dual, clipped at 0
  std::vector<PlanEntry> plan;
  std::vector<Potential> potentials;
  int pivots = 0;
};

// Certified norm computation. Requires χ(T) = 0 (mode tolerance applies).
// The returned plan satisfies: row marginals = negative part, column
// marginals = positive part (exact rationals); potentials are 1-Lipschitz on
// the support; gap ≤ tol·max(1,value).
TransportSolution gnorm(const ZeroCycle& t, double tol = tol::kGapRel);

// Closed-form 1d value: sort atoms, prefix sums, Σ|γᵢ|·(xᵢ₊₁−xᵢ).
// Exact rational; callers needing a double convert once.
Rat gnorm_1d_exact(const ZeroCycle& t);
double gnorm_1d(const ZeroCycle& t);

struct CertifyCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;  // violation amount; <= bound means pass
  double bound = 0.0;
};

struct CertifyReport {
  std::vector<CertifyCheck> checks;
  bool all_pass() const;
};

// Re-verifies every TransportSolution invariant from scratch: marginals
// (exact), Lipschitz feasibility on all support pairs, plan-cost recompute,
// dual value recompute, gap. Failures are report entries, never exceptions.
CertifyReport certify(const ZeroCycle& t, const TransportSolution& sol,
                      double tol = tol::kCertify);

struct IsoperimetricCheck {
  double gnorm_value = 0.0;
  double cone_bound = 0.0;  // max over atoms |x−a| · mass(T)
  bool pass = false;
};

// gnorm(T) ≤ max|x−a|·mass(T) + 1e-9 (the cone over T fills it).
IsoperimetricCheck isoperimetric_check(const ZeroCycle& t, const Point& a);

// One segment per plan entry; boundary(plan_to_chain(sol)) equals the input
// cycle and its mass is the plan value.
OneChain plan_to_chain(const TransportSolution& sol, int n,
                       Mode mode = Mode::Rational);

// Lower-level entry point: balanced transportation problem with an explicit
// cost matrix (row-major m×n). Flows are exact rationals. Used by gnorm
// (Euclidean costs) and the grid divergence solver (ℓ1 costs).
struct TableCell {
  int i = 0;
  int j = 0;
  Rat flow;
};

struct TableSolution {
  std::vector<TableCell> cells;  // positive-flow cells, sorted by (i,j)
  std::vector<double> row_duals;
  std::vector<double> col_duals;
  double value = 0.0;
  int pivots = 0;
};

TableSolution solve_transport_table(const std::vector<Rat>& supply,
                                    const std::vector<Rat>& demand,
                                    const std::vector<double>& cost,
                                    int iter_cap = 0);

}  // namespace flatcycle
