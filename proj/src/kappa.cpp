#include "flatcycle/kappa.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "flatcycle/simplex.hpp"

namespace flatcycle {

namespace {

// Candidate support: supp(T), optional lattice, optional shared extras.
std::vector<Point> candidate_support(const ZeroCycle& t,
                                     const SupportPolicy& policy) {
  std::set<Point> pts;
  for (const auto& [p, w] : t.atoms()) pts.insert(p);
  for (const Point& p : policy.extra) pts.insert(p);
  if (policy.include_grid) {
    GridSpec spec{t.n(), policy.grid_k};
    for (const Point& p : grid_points(spec)) pts.insert(p);
  }
  return {pts.begin(), pts.end()};
}

}  // namespace

KappaEstimate kappa(const ZeroCycle& t, double eps, const SupportPolicy& policy,
                    double tol) {
  require_chi_zero(t, "kappa");
  if (!(eps > 0)) throw BadEps("kappa requires eps > 0");

  KappaEstimate out;
  out.eps = eps;
  out.policy = policy;
  if (t.empty()) {
    out.witness = ZeroCycle(t.n(), t.mode());
    return out;
  }

  std::vector<Point> pts = candidate_support(t, policy);
  int m = static_cast<int>(pts.size());
  std::map<Point, int> index;
  for (int i = 0; i < m; ++i) index[pts[static_cast<size_t>(i)]] = i;

  // variables: a_0..a_{m-1}, b_0..b_{m-1}, then the flow block f[p][q]
  // (p*m+q, diagonal unused). Node balance: inflow − outflow + a − b = θ.
  auto var_a = [](int i) { return 2 * i; };
  auto var_b = [](int i) { return 2 * i + 1; };
  auto var_f = [m](int p, int q) { return 2 * m + p * m + q; };

  LinearProgram lp;
  lp.num_vars = 2 * m + m * m;
  lp.objective.assign(static_cast<size_t>(lp.num_vars), 0.0);
  for (int i = 0; i < m; ++i) {
    lp.objective[static_cast<size_t>(var_a(i))] = 1.0;
    lp.objective[static_cast<size_t>(var_b(i))] = 1.0;
  }

  std::vector<double> theta(static_cast<size_t>(m), 0.0);
  for (const auto& [p, w] : t.atoms())
    theta[static_cast<size_t>(index[p])] = to_double(w);

  for (int i = 0; i < m; ++i) {
    LpRow row;
    row.kind = RowKind::Eq;
    row.rhs = theta[static_cast<size_t>(i)];
    row.coeffs.emplace_back(var_a(i), 1.0);
    row.coeffs.emplace_back(var_b(i), -1.0);
    for (int q = 0; q < m; ++q) {
      if (q == i) continue;
      row.coeffs.emplace_back(var_f(q, i), 1.0);   // inflow
      row.coeffs.emplace_back(var_f(i, q), -1.0);  // outflow
    }
    lp.rows.push_back(std::move(row));
  }
  LpRow budget;
  budget.kind = RowKind::Le;
  budget.rhs = eps;
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      if (p == q) continue;
      budget.coeffs.emplace_back(
          var_f(p, q), dist(pts[static_cast<size_t>(p)], pts[static_cast<size_t>(q)]));
    }
  lp.rows.push_back(std::move(budget));

  LpSolution sol = solve_lp(lp, 1e-11);
  if (!sol.feasible)
    throw SolverStall("kappa LP infeasible (unexpected: T itself is a witness)",
                      0.0, 0.0);
  out.lp_pivots = sol.pivots;

  // Witness assembly: prune solver dust, then repair χ exactly by adjusting
  // the heaviest atom (the residual is float noise from the LP).
  double scale = std::max(1.0, to_double(t.mass()));
  double prune = 1e-11 * scale;
  std::vector<std::pair<Point, Rat>> atoms;
  for (int i = 0; i < m; ++i) {
    double w = sol.x[static_cast<size_t>(var_a(i))] - sol.x[static_cast<size_t>(var_b(i))];
    if (std::fabs(w) <= prune) continue;
    atoms.emplace_back(pts[static_cast<size_t>(i)], rat_of_double(w));
  }
  Rat chi_resid = 0;
  for (const auto& [p, w] : atoms) chi_resid += w;
  if (chi_resid != 0 && !atoms.empty()) {
    size_t heaviest = 0;
    for (size_t i = 1; i < atoms.size(); ++i)
      if (rat_abs(atoms[i].second) > rat_abs(atoms[heaviest].second))
        heaviest = i;
    atoms[heaviest].second -= chi_resid;
  }
  out.witness = make_cycle(t.n(), atoms, t.mode());
  out.value = to_double(out.witness.mass());

  // independent certification of the witness constraints
  ZeroCycle diff = combine(1, t, -1, out.witness);
  out.witness_gdist = diff.empty() ? 0.0 : gnorm(diff).value;
  double slack = std::max(tol, 1e-7) * std::max(1.0, eps) +
                 std::max(tol, 1e-7) * scale;
  if (out.witness_gdist > eps + slack)
    throw SolverStall("kappa witness failed re-certification",
                      out.witness_gdist, eps);
  return out;
}

std::vector<KappaEstimate> kappa_curve(const ZeroCycle& t,
                                       const std::vector<double>& eps_list,
                                       const SupportPolicy& policy, double tol) {
  std::vector<KappaEstimate> out;
  out.reserve(eps_list.size());
  for (double e : eps_list) out.push_back(kappa(t, e, policy, tol));
  return out;
}

bool PropertyReport::all_pass() const {
  for (const PropertyCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

PropertyReport verify_80(const ZeroCycle& t1, const ZeroCycle& t2, double eps1,
                         double eps2, const Rat& lambda, double tol) {
  PropertyReport rep;
  // shared candidate support so the LP values are comparable
  SupportPolicy shared;
  for (const auto& [p, w] : t1.atoms()) shared.extra.push_back(p);
  for (const auto& [p, w] : t2.atoms()) shared.extra.push_back(p);

  double k1 = kappa(t1, eps1, shared).value;
  double k2 = kappa(t2, eps2, shared).value;

  // subadditivity
  ZeroCycle sum = combine(1, t1, 1, t2);
  double ksum = kappa(sum, eps1 + eps2, shared).value;
  rep.checks.push_back(
      PropertyCheck{"subadditivity", ksum <= k1 + k2 + tol, ksum, k1 + k2});

  // scaling identity
  double lam_abs = std::fabs(to_double(lambda));
  if (lambda != 0) {
    ZeroCycle scaled = combine(lambda, t1, 0, ZeroCycle(t1.n(), t1.mode()));
    double kscaled = kappa(scaled, lam_abs * eps1, shared).value;
    rep.checks.push_back(PropertyCheck{"scaling",
                                       std::fabs(kscaled - lam_abs * k1) <=
                                           tol * std::max(1.0, lam_abs * k1),
                                       kscaled, lam_abs * k1});
  }

  // triangle-style comparison: with d = G(t1−t2), κ(t1, d⁺+ε₂) ≤ κ(t2, ε₂)
  ZeroCycle diff = combine(1, t1, -1, t2);
  double d = diff.empty() ? 0.0 : gnorm(diff).value;
  double kt = kappa(t1, d * (1.0 + 1e-9) + eps2 + tol, shared).value;
  rep.checks.push_back(
      PropertyCheck{"triangle_comparison", kt <= k2 + tol, kt, k2});
  return rep;
}

Rat GridVectorField::l1_exact() const {
  Rat s = 0;
  for (const auto& [e, f] : flow) s += rat_abs(f);
  return s / Rat(spec.k);
}

double GridVectorField::l1() const { return to_double(l1_exact()); }

std::map<GridIndex, Rat> divergence(const GridVectorField& eta) {
  std::map<GridIndex, Rat> div;
  for (const auto& [e, f] : eta.flow) {
    if (f == 0) continue;
    const GridIndex& base = e.first;
    GridIndex head = base;
    ++head[static_cast<size_t>(e.second)];
    div[head] += f;
    div[base] -= f;
  }
  for (auto it = div.begin(); it != div.end();) {
    if (it->second == 0)
      it = div.erase(it);
    else
      ++it;
  }
  return div;
}

BeckmannResult beckmann(const ZeroCycle& t, const GridSpec& spec, double tol) {
  require_chi_zero(t, "beckmann");
  BeckmannResult out;
  out.field.spec = spec;
  SnapResult snapped = snap(t, spec);
  out.snapped = snapped.snapped;
  if (out.snapped.theta.empty()) return out;

  // balanced table between the negative and positive parts under the ℓ1
  // metric, which grid paths realize exactly
  std::vector<GridIndex> src, snk;
  std::vector<Rat> supply, demand;
  for (const auto& [i, w] : out.snapped.theta) {
    if (w > 0) {
      snk.push_back(i);
      demand.push_back(w);
    } else {
      src.push_back(i);
      supply.push_back(-w);
    }
  }
  if (src.empty() || snk.empty()) return out;  // everything cancelled in the snap
  Rat total_s = 0, total_d = 0;
  for (const Rat& s : supply) total_s += s;
  for (const Rat& d : demand) total_d += d;
  if (total_s != total_d) {
    Rat scale = total_s / total_d;
    for (Rat& d : demand) d *= scale;
  }

  std::vector<double> cost(src.size() * snk.size());
  for (size_t i = 0; i < src.size(); ++i)
    for (size_t j = 0; j < snk.size(); ++j) {
      long l1 = 0;
      for (int a = 0; a < spec.n; ++a)
        l1 += std::labs(src[i][static_cast<size_t>(a)] - snk[j][static_cast<size_t>(a)]);
      cost[i * snk.size() + j] = static_cast<double>(l1) / static_cast<double>(spec.k);
    }
  TableSolution table = solve_transport_table(supply, demand, cost);

  // route every plan cell along the axis-ordered staircase path
  for (const TableCell& c : table.cells) {
    GridIndex cur = src[static_cast<size_t>(c.i)];
    const GridIndex& dst = snk[static_cast<size_t>(c.j)];
    for (int a = 0; a < spec.n; ++a) {
      while (cur[static_cast<size_t>(a)] < dst[static_cast<size_t>(a)]) {
        out.field.flow[{cur, a}] += c.flow;
        ++cur[static_cast<size_t>(a)];
      }
      while (cur[static_cast<size_t>(a)] > dst[static_cast<size_t>(a)]) {
        --cur[static_cast<size_t>(a)];
        out.field.flow[{cur, a}] -= c.flow;
      }
    }
  }
  for (auto it = out.field.flow.begin(); it != out.field.flow.end();) {
    if (it->second == 0)
      it = out.field.flow.erase(it);
    else
      ++it;
  }

  out.value = out.field.l1();
  ZeroCycle s_cycle = out.snapped.to_cycle();
  out.gnorm_snapped = s_cycle.empty() ? 0.0 : gnorm(s_cycle, tol).value;
  return out;
}

ModulusCurve osc1(const GridVectorField& eta,
                  const std::vector<double>& r_list) {
  ModulusCurve out;
  const Rat inv_k(1, eta.spec.k);
  for (double r : r_list) {
    double best = 0.0;
    if (r > 0 && !eta.flow.empty()) {
      double rk = r * static_cast<double>(eta.spec.k);
      long range = static_cast<long>(std::floor(rk + 1e-12));
      GridIndex h(static_cast<size_t>(eta.spec.n), -range);
      for (;;) {
        double len_sq = 0.0;
        for (long c : h) len_sq += static_cast<double>(c) * static_cast<double>(c);
        bool admissible = len_sq <= rk * rk + 1e-9;
        bool zero = std::all_of(h.begin(), h.end(), [](long c) { return c == 0; });
        if (admissible && !zero) {
          // L1 difference of the field and its translate, zero-extended
          std::set<std::pair<GridIndex, int>> keys;
          for (const auto& [e, f] : eta.flow) {
            keys.insert(e);
            GridIndex moved = e.first;
            for (int a = 0; a < eta.spec.n; ++a)
              moved[static_cast<size_t>(a)] += h[static_cast<size_t>(a)];
            keys.insert({moved, e.second});
          }
          Rat diff = 0;
          for (const auto& key : keys) {
            GridIndex back = key.first;
            for (int a = 0; a < eta.spec.n; ++a)
              back[static_cast<size_t>(a)] -= h[static_cast<size_t>(a)];
            auto it1 = eta.flow.find(key);
            auto it2 = eta.flow.find({back, key.second});
            Rat f1 = it1 == eta.flow.end() ? Rat(0) : it1->second;
            Rat f2 = it2 == eta.flow.end() ? Rat(0) : it2->second;
            diff += rat_abs(f1 - f2);
          }
          best = std::max(best, to_double(diff * inv_k));
        }
        int axis = eta.spec.n - 1;
        while (axis >= 0) {
          if (++h[static_cast<size_t>(axis)] <= range) break;
          h[static_cast<size_t>(axis)] = -range;
          --axis;
        }
        if (axis < 0) break;
      }
    }
    out.samples.emplace_back(r, best);
  }
  return out;
}

}  // namespace flatcycle
