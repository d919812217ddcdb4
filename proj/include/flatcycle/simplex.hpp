// Dense two-phase primal simplex for the small LPs in this project (the
// budgeted mass-minimization behind the κ estimator). Minimizes c·x over
// {x ≥ 0 : equality and ≤ rows}. Deterministic: most-negative entering with
// lowest-index ties, Bland's rule after a degenerate streak.
#pragma once

#include <utility>
#include <vector>

namespace flatcycle {

enum class RowKind { Eq, Le };

struct LpRow {
  std::vector<std::pair<int, double>> coeffs;  // sparse (var, coefficient)
  double rhs = 0.0;
  RowKind kind = RowKind::Eq;
};

struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;  // dense, size num_vars; minimized
  std::vector<LpRow> rows;
};

struct LpSolution {
  bool feasible = false;
  bool bounded = true;
  double value = 0.0;
  std::vector<double> x;
  int pivots = 0;
};

LpSolution solve_lp(const LinearProgram& lp, double tol = 1e-9,
                    int iter_cap = 200000);

}  // namespace flatcycle
