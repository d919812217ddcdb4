#include "flatcycle/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flatcycle/errors.hpp"

namespace flatcycle {

namespace {

class Tableau {
 public:
  // columns: structural vars, then slacks, then artificials, then rhs
  Tableau(const LinearProgram& lp) {
    m_ = static_cast<int>(lp.rows.size());
    int slacks = 0;
    for (const LpRow& r : lp.rows)
      if (r.kind == RowKind::Le) ++slacks;
    nv_ = lp.num_vars;
    ns_ = slacks;
    na_ = m_;
    cols_ = nv_ + ns_ + na_ + 1;
    a_.assign(static_cast<size_t>(m_) * cols_, 0.0);
    basis_.assign(static_cast<size_t>(m_), -1);

    int slack_at = nv_;
    for (int i = 0; i < m_; ++i) {
      const LpRow& r = lp.rows[static_cast<size_t>(i)];
      for (auto [v, c] : r.coeffs) at(i, v) += c;
      at(i, rhs_col()) = r.rhs;
      if (r.kind == RowKind::Le) at(i, slack_at++) = 1.0;
      // normalize to b >= 0 so the artificial basis is feasible
      if (at(i, rhs_col()) < 0.0)
        for (int j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
      at(i, nv_ + ns_ + i) = 1.0;
      basis_[static_cast<size_t>(i)] = nv_ + ns_ + i;
    }

    scale_ = 1.0;
    for (double v : a_) scale_ = std::max(scale_, std::fabs(v));
  }

  int rhs_col() const { return cols_ - 1; }
  double& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  // reduced-cost row for cost vector c over all columns (artificials get
  // `art_cost`); obj[cols_-1] holds -objective_value
  void build_objective(const std::vector<double>& c, double art_cost) {
    obj_.assign(static_cast<size_t>(cols_), 0.0);
    for (int j = 0; j < nv_ && j < static_cast<int>(c.size()); ++j)
      obj_[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
    for (int j = nv_ + ns_; j < cols_ - 1; ++j) obj_[static_cast<size_t>(j)] = art_cost;
    for (int i = 0; i < m_; ++i) {
      double cb = obj_basis(c, art_cost, basis_[static_cast<size_t>(i)]);
      if (cb == 0.0) continue;
      for (int j = 0; j < cols_; ++j) obj_[static_cast<size_t>(j)] -= cb * at(i, j);
    }
  }

  // Runs the pivot loop on the current objective. Returns false if unbounded.
  bool optimize(double tol, int iter_cap, int* pivots, bool allow_artificial) {
    int streak = 0;
    bool bland = false;
    double eps = tol * scale_;
    for (;;) {
      int enter = -1;
      double best = -eps;
      int limit = allow_artificial ? cols_ - 1 : nv_ + ns_;
      for (int j = 0; j < limit; ++j) {
        double rc = obj_[static_cast<size_t>(j)];
        if (rc < best) {
          enter = j;
          best = rc;
          if (bland) break;
        }
      }
      if (enter < 0) return true;
      if (++(*pivots) > iter_cap)
        throw SolverStall("simplex hit the iteration cap",
                          -obj_[static_cast<size_t>(rhs_col())], 0.0);

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        double aij = at(i, enter);
        if (aij <= eps) continue;
        double ratio = at(i, rhs_col()) / aij;
        if (ratio < best_ratio - 1e-15 ||
            (ratio <= best_ratio + 1e-15 &&
             (leave < 0 || basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave)]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;  // unbounded direction

      pivot(leave, enter);
      bool degenerate = best_ratio <= eps;
      streak = degenerate ? streak + 1 : 0;
      if (streak >= 40) bland = true;
    }
  }

  void pivot(int row, int col) {
    double p = at(row, col);
    for (int j = 0; j < cols_; ++j) at(row, j) /= p;
    at(row, col) = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == row) continue;
      double f = at(i, col);
      if (f == 0.0) continue;
      for (int j = 0; j < cols_; ++j) at(i, j) -= f * at(row, j);
      at(i, col) = 0.0;
    }
    double f = obj_[static_cast<size_t>(col)];
    if (f != 0.0) {
      for (int j = 0; j < cols_; ++j) obj_[static_cast<size_t>(j)] -= f * at(row, j);
      obj_[static_cast<size_t>(col)] = 0.0;
    }
    basis_[static_cast<size_t>(row)] = col;
  }

  double objective_value() const { return -obj_[static_cast<size_t>(rhs_col())]; }

  // After phase 1: force artificials out of the basis where possible; rows
  // that admit no pivot are redundant and harmless at zero level.
  void expel_artificials(double tol) {
    double eps = tol * scale_;
    for (int i = 0; i < m_; ++i) {
      if (basis_[static_cast<size_t>(i)] < nv_ + ns_) continue;
      for (int j = 0; j < nv_ + ns_; ++j) {
        if (std::fabs(at(i, j)) > eps) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<double> extract(int nvars) const {
    std::vector<double> x(static_cast<size_t>(nvars), 0.0);
    for (int i = 0; i < m_; ++i) {
      int b = basis_[static_cast<size_t>(i)];
      if (b < nvars) x[static_cast<size_t>(b)] = at(i, rhs_col());
    }
    return x;
  }

  int num_structural_and_slack() const { return nv_ + ns_; }

 private:
  static double obj_basis(const std::vector<double>& c, double art_cost, int col) {
    if (col < static_cast<int>(c.size())) return c[static_cast<size_t>(col)];
    return art_cost;  // only artificials carry cost outside the structural range
  }

  int m_ = 0, nv_ = 0, ns_ = 0, na_ = 0, cols_ = 0;
  double scale_ = 1.0;
  std::vector<double> a_;
  std::vector<double> obj_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, double tol, int iter_cap) {
  LpSolution out;
  if (lp.rows.empty()) {
    out.feasible = true;
    out.x.assign(static_cast<size_t>(lp.num_vars), 0.0);
    out.value = 0.0;
    return out;
  }
  Tableau tab(lp);

  // phase 1: minimize the artificial total
  std::vector<double> zero(static_cast<size_t>(lp.num_vars), 0.0);
  tab.build_objective(zero, 1.0);
  if (!tab.optimize(tol, iter_cap, &out.pivots, /*allow_artificial=*/true))
    throw SolverStall("phase-1 simplex unbounded", 0.0, 0.0);
  if (tab.objective_value() > 1e-7) {
    out.feasible = false;
    return out;
  }
  tab.expel_artificials(tol);

  // phase 2: the real objective over structural and slack columns
  std::vector<double> cost = lp.objective;
  cost.resize(static_cast<size_t>(tab.num_structural_and_slack()), 0.0);
  tab.build_objective(cost, 0.0);
  if (!tab.optimize(tol, iter_cap, &out.pivots, /*allow_artificial=*/false)) {
    out.feasible = true;
    out.bounded = false;
    return out;
  }

  out.feasible = true;
  out.x = tab.extract(lp.num_vars);
  out.value = tab.objective_value();
  return out;
}

}  // namespace flatcycle
