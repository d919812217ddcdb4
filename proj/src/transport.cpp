#include "flatcycle/transport.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <tuple>

namespace flatcycle {

namespace {

struct Cell {
  int i;  // source row
  int j;  // sink column
  Rat flow;
};

// Transportation table with an explicit spanning-tree basis. Nodes are rows
// 0..m-1 and columns m..m+n-1.
class TransportTable {
 public:
  TransportTable(std::vector<Rat> supply, std::vector<Rat> demand,
                 std::vector<double> cost)
      : supply_(std::move(supply)),
        demand_(std::move(demand)),
        cost_(std::move(cost)),
        m_(static_cast<int>(supply_.size())),
        n_(static_cast<int>(demand_.size())) {
    cost_scale_ = 0.0;
    for (double c : cost_) cost_scale_ = std::max(cost_scale_, std::fabs(c));
    in_basis_.assign(static_cast<size_t>(m_) * n_, 0);
  }

  int pivots = 0;

  void solve(double enter_tol, int iter_cap) {
    northwest_corner();
    int degenerate_streak = 0;
    bool bland = false;
    for (;;) {
      compute_duals();
      auto [ei, ej, red] = pick_entering(enter_tol, bland);
      (void)red;
      if (ei < 0) return;  // optimal
      if (++pivots > iter_cap)
        throw SolverStall("transport solver hit the iteration cap",
                          primal_value(), dual_value());
      bool degenerate = pivot(ei, ej);
      degenerate_streak = degenerate ? degenerate_streak + 1 : 0;
      if (degenerate_streak >= 30) bland = true;  // anti-cycling fallback
    }
  }

  double primal_value() const {
    std::vector<const Cell*> cs;
    cs.reserve(basis_.size());
    for (const Cell& c : basis_)
      if (c.flow > 0) cs.push_back(&c);
    std::sort(cs.begin(), cs.end(), [](const Cell* a, const Cell* b) {
      return a->i != b->i ? a->i < b->i : a->j < b->j;
    });
    long double acc = 0.0L;
    for (const Cell* c : cs)
      acc += static_cast<long double>(to_double(c->flow)) * cost_[idx(c->i, c->j)];
    return static_cast<double>(acc);
  }

  double dual_value() const {
    long double acc = 0.0L;
    for (int i = 0; i < m_; ++i)
      acc += static_cast<long double>(to_double(supply_[static_cast<size_t>(i)])) *
             u_[static_cast<size_t>(i)];
    for (int j = 0; j < n_; ++j)
      acc += static_cast<long double>(to_double(demand_[static_cast<size_t>(j)])) *
             v_[static_cast<size_t>(j)];
    return static_cast<double>(acc);
  }

  const std::vector<Cell>& basis() const { return basis_; }
  const std::vector<double>& row_duals() const { return u_; }
  const std::vector<double>& col_duals() const { return v_; }
  double cost(int i, int j) const { return cost_[idx(i, j)]; }
  double cost_scale() const { return cost_scale_; }

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) +
           static_cast<size_t>(j);
  }

  void northwest_corner() {
    std::vector<Rat> s = supply_;
    std::vector<Rat> d = demand_;
    int i = 0, j = 0;
    for (;;) {
      Rat f = std::min(s[static_cast<size_t>(i)], d[static_cast<size_t>(j)]);
      basis_.push_back(Cell{i, j, f});
      in_basis_[idx(i, j)] = 1;
      s[static_cast<size_t>(i)] -= f;
      d[static_cast<size_t>(j)] -= f;
      if (i == m_ - 1 && j == n_ - 1) break;
      if (s[static_cast<size_t>(i)] == 0 && i < m_ - 1)
        ++i;
      else
        ++j;
    }
  }

  void rebuild_adjacency() {
    adj_.assign(static_cast<size_t>(m_ + n_), {});
    for (size_t c = 0; c < basis_.size(); ++c) {
      adj_[static_cast<size_t>(basis_[c].i)].push_back(static_cast<int>(c));
      adj_[static_cast<size_t>(m_ + basis_[c].j)].push_back(static_cast<int>(c));
    }
  }

  void compute_duals() {
    rebuild_adjacency();
    u_.assign(static_cast<size_t>(m_), 0.0);
    v_.assign(static_cast<size_t>(n_), 0.0);
    std::vector<char> seen(static_cast<size_t>(m_ + n_), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      int node = queue.front();
      queue.pop_front();
      for (int c : adj_[static_cast<size_t>(node)]) {
        const Cell& cell = basis_[static_cast<size_t>(c)];
        int other = (node < m_) ? m_ + cell.j : cell.i;
        if (seen[static_cast<size_t>(other)]) continue;
        seen[static_cast<size_t>(other)] = 1;
        if (other >= m_)
          v_[static_cast<size_t>(other - m_)] =
              cost(cell.i, cell.j) - u_[static_cast<size_t>(cell.i)];
        else
          u_[static_cast<size_t>(other)] =
              cost(cell.i, cell.j) - v_[static_cast<size_t>(cell.j)];
        queue.push_back(other);
      }
    }
  }

  // (i, j, reduced cost) of the entering cell, or i = -1 when optimal.
  std::tuple<int, int, double> pick_entering(double tol, bool bland) const {
    int bi = -1, bj = -1;
    double best = -tol;
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (in_basis_[idx(i, j)]) continue;
        double r =
            cost(i, j) - u_[static_cast<size_t>(i)] - v_[static_cast<size_t>(j)];
        if (r < best) {
          best = r;
          bi = i;
          bj = j;
          if (bland) return {bi, bj, best};  // first negative in scan order
        }
      }
    return {bi, bj, best};
  }

  // Pivot on entering cell (ei,ej). Returns true if the step was degenerate.
  bool pivot(int ei, int ej) {
    // unique tree path from row node ei to column node m_+ej
    std::vector<int> parent_node(static_cast<size_t>(m_ + n_), -1);
    std::vector<int> parent_cell(static_cast<size_t>(m_ + n_), -1);
    std::deque<int> queue{ei};
    parent_node[static_cast<size_t>(ei)] = ei;
    while (!queue.empty()) {
      int node = queue.front();
      queue.pop_front();
      if (node == m_ + ej) break;
      for (int c : adj_[static_cast<size_t>(node)]) {
        const Cell& cell = basis_[static_cast<size_t>(c)];
        int other = (node < m_) ? m_ + cell.j : cell.i;
        if (parent_node[static_cast<size_t>(other)] >= 0) continue;
        parent_node[static_cast<size_t>(other)] = node;
        parent_cell[static_cast<size_t>(other)] = c;
        queue.push_back(other);
      }
    }
    std::vector<int> path;
    for (int node = m_ + ej; node != ei;
         node = parent_node[static_cast<size_t>(node)])
      path.push_back(parent_cell[static_cast<size_t>(node)]);
    std::reverse(path.begin(), path.end());
    // path[0] shares row ei with the entering cell; even positions give back
    // what the entering cell adds, so they decrease

    Rat delta;
    int leave = -1;
    for (size_t t = 0; t < path.size(); t += 2) {
      const Cell& cell = basis_[static_cast<size_t>(path[t])];
      if (leave < 0 || cell.flow < delta ||
          (cell.flow == delta &&
           std::make_pair(cell.i, cell.j) <
               std::make_pair(basis_[static_cast<size_t>(leave)].i,
                              basis_[static_cast<size_t>(leave)].j))) {
        delta = cell.flow;
        leave = path[t];
      }
    }
    bool degenerate = (delta == 0);
    for (size_t t = 0; t < path.size(); ++t) {
      Cell& cell = basis_[static_cast<size_t>(path[t])];
      if (t % 2 == 0)
        cell.flow -= delta;
      else
        cell.flow += delta;
    }
    Cell& lv = basis_[static_cast<size_t>(leave)];
    in_basis_[idx(lv.i, lv.j)] = 0;
    in_basis_[idx(ei, ej)] = 1;
    lv = Cell{ei, ej, delta};  // reuse the slot
    return degenerate;
  }

  std::vector<Rat> supply_, demand_;
  std::vector<double> cost_;
  int m_, n_;
  double cost_scale_;
  std::vector<Cell> basis_;
  std::vector<char> in_basis_;
  std::vector<std::vector<int>> adj_;
  std::vector<double> u_, v_;
};

}  // namespace

TableSolution solve_transport_table(const std::vector<Rat>& supply,
                                    const std::vector<Rat>& demand,
                                    const std::vector<double>& cost,
                                    int iter_cap) {
  if (supply.empty() || demand.empty())
    throw BadParams("transport table needs at least one row and one column");
  if (cost.size() != supply.size() * demand.size())
    throw BadParams("cost matrix size mismatch");
  TransportTable table(supply, demand, cost);
  double enter_tol = 1e-12 * (1.0 + table.cost_scale());
  if (iter_cap <= 0)
    iter_cap = 10000 + 200 * static_cast<int>(supply.size() + demand.size());
  table.solve(enter_tol, iter_cap);

  TableSolution out;
  out.pivots = table.pivots;
  out.value = table.primal_value();
  out.row_duals = table.row_duals();
  out.col_duals = table.col_duals();
  for (const Cell& c : table.basis())
    if (c.flow > 0) out.cells.push_back(TableCell{c.i, c.j, c.flow});
  std::sort(out.cells.begin(), out.cells.end(),
            [](const TableCell& a, const TableCell& b) {
              return a.i != b.i ? a.i < b.i : a.j < b.j;
            });
  return out;
}

TransportSolution gnorm(const ZeroCycle& t, double tol) {
  require_chi_zero(t, "gnorm");
  TransportSolution sol;
  if (t.empty()) return sol;

  std::vector<Point> src, snk;
  std::vector<Rat> supply, demand;
  for (const auto& [p, w] : t.atoms()) {
    if (w > 0) {
      snk.push_back(p);
      demand.push_back(w);
    } else {
      src.push_back(p);
      supply.push_back(-w);
    }
  }
  if (src.empty() || snk.empty())
    throw ChiNonZero("gnorm: cycle has a one-sided support");

  // Float mode admits a tiny χ imbalance; balance the table exactly with an
  // exact rational rescale of the demand side.
  Rat total_s = 0, total_d = 0;
  for (const Rat& s : supply) total_s += s;
  for (const Rat& d : demand) total_d += d;
  if (total_s != total_d) {
    Rat scale = total_s / total_d;
    for (Rat& d : demand) d *= scale;
  }

  std::vector<double> cost(src.size() * snk.size());
  for (size_t i = 0; i < src.size(); ++i)
    for (size_t j = 0; j < snk.size(); ++j)
      cost[i * snk.size() + j] = dist(src[i], snk[j]);

  TableSolution table = solve_transport_table(supply, demand, cost);
  sol.pivots = table.pivots;
  sol.value = table.value;
  for (const TableCell& c : table.cells)
    sol.plan.push_back(PlanEntry{src[static_cast<size_t>(c.i)],
                                 snk[static_cast<size_t>(c.j)], c.flow});
  std::sort(sol.plan.begin(), sol.plan.end(),
            [](const PlanEntry& a, const PlanEntry& b) {
              if (a.from == b.from) return a.to < b.to;
              return a.from < b.from;
            });

  // 1-Lipschitz potential on the whole support as the inf-convolution of the
  // row duals with the metric; its pairing with T matches the plan value.
  const std::vector<double>& u = table.row_duals;
  auto phi = [&](const Point& z) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < src.size(); ++i)
      best = std::min(best, -u[i] + dist(z, src[i]));
    return best;
  };
  long double dual_acc = 0.0L;
  for (const auto& [p, w] : t.atoms()) {
    double val = phi(p);
    sol.potentials.push_back(Potential{p, val});
    dual_acc += static_cast<long double>(val) * to_double(w);
  }
  sol.dual = static_cast<double>(dual_acc);
  sol.gap = std::max(0.0, sol.value - sol.dual);

  double gap_bound = tol * std::max(1.0, std::fabs(sol.value));
  if (std::fabs(sol.value - sol.dual) > gap_bound)
    throw SolverStall("gnorm: duality gap above tolerance", sol.value,
                      sol.dual);
  return sol;
}

Rat gnorm_1d_exact(const ZeroCycle& t) {
  if (t.n() != 1 && !t.empty())
    throw DimensionMismatch("gnorm_1d requires ambient dimension 1");
  require_chi_zero(t, "gnorm_1d");
  if (t.empty()) return Rat(0);
  // atoms() already iterates in coordinate order
  Rat value = 0;
  Rat gamma = 0;
  const Point* prev = nullptr;
  for (const auto& [p, w] : t.atoms()) {
    if (prev != nullptr) value += rat_abs(gamma) * (p.x[0] - prev->x[0]);
    gamma -= w;
    prev = &p;
  }
  return value;
}

double gnorm_1d(const ZeroCycle& t) { return to_double(gnorm_1d_exact(t)); }

bool CertifyReport::all_pass() const {
  for (const CertifyCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

CertifyReport certify(const ZeroCycle& t, const TransportSolution& sol,
                      double tol) {
  CertifyReport rep;
  double scale = std::max(1.0, std::fabs(sol.value));

  // plan marginals vs the cycle's parts, exact rational comparison
  std::map<Point, Rat> out_flow, in_flow;
  for (const PlanEntry& e : sol.plan) {
    out_flow[e.from] += e.flow;
    in_flow[e.to] += e.flow;
  }
  Rat marg_err = 0;
  for (const auto& [p, w] : t.atoms()) {
    if (w > 0)
      marg_err += rat_abs(in_flow[p] - w);
    else
      marg_err += rat_abs(out_flow[p] + w);
  }
  for (const auto& [p, f] : in_flow)
    if (t.atoms().find(p) == t.atoms().end()) marg_err += rat_abs(f);
  for (const auto& [p, f] : out_flow)
    if (t.atoms().find(p) == t.atoms().end()) marg_err += rat_abs(f);
  double marg_bound =
      (t.mode() == Mode::Rational) ? 0.0 : 3e-12 * to_double(t.mass());
  bool marg_pass = (t.mode() == Mode::Rational)
                       ? (marg_err == 0)
                       : (to_double(marg_err) <= marg_bound);
  rep.checks.push_back(CertifyCheck{"plan_marginals", marg_pass,
                                    to_double(marg_err), marg_bound});

  bool nonneg = true;
  for (const PlanEntry& e : sol.plan)
    if (e.flow < 0) nonneg = false;
  rep.checks.push_back(
      CertifyCheck{"flows_nonnegative", nonneg, nonneg ? 0.0 : 1.0, 0.0});

  // plan cost recompute, independent accumulation order
  long double cost_acc = 0.0L;
  for (auto it = sol.plan.rbegin(); it != sol.plan.rend(); ++it)
    cost_acc +=
        static_cast<long double>(to_double(it->flow)) * dist(it->from, it->to);
  double cost_resid = std::fabs(static_cast<double>(cost_acc) - sol.value);
  rep.checks.push_back(CertifyCheck{"plan_cost", cost_resid <= tol * scale,
                                    cost_resid, tol * scale});

  // potentials 1-Lipschitz on every support pair
  double lip_viol = 0.0;
  for (size_t a = 0; a < sol.potentials.size(); ++a)
    for (size_t b = a + 1; b < sol.potentials.size(); ++b) {
      double d = dist(sol.potentials[a].x, sol.potentials[b].x);
      double diff =
          std::fabs(sol.potentials[a].value - sol.potentials[b].value);
      lip_viol = std::max(lip_viol, diff - d);
    }
  rep.checks.push_back(CertifyCheck{"potential_lipschitz",
                                    lip_viol <= tol * scale, lip_viol,
                                    tol * scale});

  // dual pairing recompute
  std::map<Point, double> pot;
  for (const Potential& p : sol.potentials) pot[p.x] = p.value;
  long double dual_acc = 0.0L;
  bool covered = true;
  for (const auto& [p, w] : t.atoms()) {
    auto it = pot.find(p);
    if (it == pot.end()) {
      covered = false;
      continue;
    }
    dual_acc += static_cast<long double>(it->second) * to_double(w);
  }
  double dual_resid = std::fabs(static_cast<double>(dual_acc) - sol.dual);
  rep.checks.push_back(CertifyCheck{"potentials_cover_support", covered,
                                    covered ? 0.0 : 1.0, 0.0});
  rep.checks.push_back(CertifyCheck{"dual_value", dual_resid <= tol * scale,
                                    dual_resid, tol * scale});

  double gap = sol.value - static_cast<double>(dual_acc);
  rep.checks.push_back(CertifyCheck{"duality_gap", std::fabs(gap) <= tol * scale,
                                    std::fabs(gap), tol * scale});
  return rep;
}

IsoperimetricCheck isoperimetric_check(const ZeroCycle& t, const Point& a) {
  require_chi_zero(t, "isoperimetric_check");
  IsoperimetricCheck out;
  double reach = 0.0;
  for (const auto& [p, w] : t.atoms()) reach = std::max(reach, dist(p, a));
  out.gnorm_value = t.empty() ? 0.0 : gnorm(t).value;
  out.cone_bound = reach * to_double(t.mass());
  out.pass = out.gnorm_value <= out.cone_bound + 1e-9;
  return out;
}

OneChain plan_to_chain(const TransportSolution& sol, int n, Mode mode) {
  OneChain out;
  out.n = n;
  out.mode = mode;
  for (const PlanEntry& e : sol.plan) {
    if (e.flow == 0) continue;
    out.segments.push_back(Segment{e.from, e.to, e.flow});
  }
  return out;
}

}  // namespace flatcycle
