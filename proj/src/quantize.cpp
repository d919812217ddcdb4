#include "flatcycle/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flatcycle/generators.hpp"

namespace flatcycle {

Rat eps_hat(int n, long k, const Rat& eps) {
  if (!(eps > 0) || eps > 1) throw BadEps("eps must lie in (0,1]");
  if (n < 1 || k < 1) throw BadParams("eps_hat needs n ≥ 1 and k ≥ 1");
  Rat denom = Rat(2 * n) * Rat(int_pow(2 * k + 1, n));
  return eps / denom;
}

QuantLattice make_lattice(int n, long k, const Rat& eps) {
  QuantLattice lat;
  lat.n = n;
  lat.k = k;
  lat.eps = eps;
  lat.eps_hat = eps_hat(n, k, eps);
  return lat;
}

Int QuantizedCycle::chi_mult() const {
  Int s = 0;
  for (const auto& [i, m] : mult) s += m;
  return s;
}

Rat QuantizedCycle::mass() const {
  Int s = 0;
  for (const auto& [i, m] : mult) s += abs(m);
  return Rat(s) * lattice.eps_hat;
}

bool QuantizedCycle::is_member() const {
  return chi_mult() == 0 && mass() <= lattice.mass_cap();
}

GridCycle QuantizedCycle::to_grid() const {
  std::vector<std::pair<GridIndex, Rat>> theta;
  theta.reserve(mult.size());
  for (const auto& [i, m] : mult)
    theta.emplace_back(i, Rat(m) * lattice.eps_hat);
  return make_grid_measure(lattice.grid(), theta);
}

ZeroCycle QuantizedCycle::to_cycle(Mode mode) const {
  return to_grid().to_cycle(mode);
}

QuantizedCycle quantize_multiplicities(const GridCycle& r,
                                       const QuantLattice& lattice,
                                       const GridIndex& x0) {
  if (r.spec.n != lattice.n || r.spec.k != lattice.k)
    throw DimensionMismatch("grid cycle does not live on the lattice's grid");
  QuantizedCycle out;
  out.lattice = lattice;
  for (const auto& [i, w] : r.theta) {
    Int m = round_nearest_tie_to_zero(w / lattice.eps_hat);
    if (m != 0) out.mult[i] = m;
  }
  Int correction = out.chi_mult();
  if (correction != 0) {
    if (static_cast<int>(x0.size()) != lattice.n)
      throw DimensionMismatch("x0 dimension mismatch");
    out.mult[x0] -= correction;
    if (out.mult[x0] == 0) out.mult.erase(x0);
  }
  return out;
}

ConstantsTable ConstantsTable::make(int n) {
  ConstantsTable t;
  t.n = n;
  double n4 = std::pow(static_cast<double>(n), 4);
  t.c_def = 2.0 * n4;
  t.c_95 = 4.0 * n4;
  t.c_92 = sandwich_constant(n);
  t.c_94 = 1.0 / (2.0 * n * std::pow(3.0, n) * t.c_92);
  return t;
}

bool check_condition_A(int n, long k, double eps, double gnorm_value,
                       double kappa_value) {
  ConstantsTable c = ConstantsTable::make(n);
  return c.c_95 * (gnorm_value + kappa_value) <
         static_cast<double>(k) * eps;
}

std::optional<QuantizedCycle> as_class_member(const ZeroCycle& t,
                                              const QuantLattice& lattice) {
  if (t.chi() != 0) return std::nullopt;
  if (!t.empty() && t.n() != lattice.n) return std::nullopt;
  QuantizedCycle out;
  out.lattice = lattice;
  for (const auto& [p, w] : t.atoms()) {
    GridIndex idx(static_cast<size_t>(lattice.n));
    for (int a = 0; a < lattice.n; ++a) {
      Rat scaled = p.x[static_cast<size_t>(a)] * lattice.k;
      if (scaled.get_den() != 1) return std::nullopt;  // off the grid
      idx[static_cast<size_t>(a)] = scaled.get_num().get_si();
    }
    Rat m = w / lattice.eps_hat;
    if (m.get_den() != 1) return std::nullopt;  // not a lattice multiple
    out.mult[idx] = Int(m.get_num());
  }
  if (out.mass() > lattice.mass_cap()) return std::nullopt;
  return out;
}

DeformResult deform(const ZeroCycle& t, long k, const Rat& eps, double tol) {
  require_chi_zero(t, "deform");
  int n = t.empty() ? 1 : t.n();
  QuantLattice lattice = make_lattice(n, k, eps);
  DeformResult out;

  if (auto member = as_class_member(t, lattice)) {
    out.P = *member;
    out.shortcut = true;
    out.membership = true;
    out.gnorm_t = t.empty() ? 0.0 : gnorm(t, tol).value;
    out.kappa_value = 0.0;
    out.condition_a =
        check_condition_A(n, k, to_double(eps), out.gnorm_t, out.kappa_value);
    return out;
  }

  double eps_d = to_double(eps);
  out.gnorm_t = t.empty() ? 0.0 : gnorm(t, tol).value;

  // stage 1: mass reduction through the κ witness at scale ε
  KappaEstimate est = kappa(t, eps_d, SupportPolicy{}, tol);
  out.kappa_value = est.value;
  out.condition_a = check_condition_A(n, k, eps_d, out.gnorm_t, out.kappa_value);
  out.stage_reduce = est.witness_gdist;

  // stage 2: vertex snap onto the grid
  SnapResult snapped = snap(est.witness, lattice.grid());
  ZeroCycle snapped_cycle = snapped.snapped.to_cycle(t.mode());
  ZeroCycle snap_diff = combine(1, est.witness, -1, snapped_cycle);
  out.stage_snap = snap_diff.empty() ? 0.0 : gnorm(snap_diff, tol).value;

  // stage 3: multiplicity rounding with χ-correction at the smallest
  // occupied index (deterministic)
  GridIndex x0(static_cast<size_t>(n), 0);
  if (!snapped.snapped.theta.empty()) x0 = snapped.snapped.theta.begin()->first;
  out.P = quantize_multiplicities(snapped.snapped, lattice, x0);
  ZeroCycle round_diff = combine(1, snapped_cycle, -1, out.P.to_cycle(t.mode()));
  out.stage_round = round_diff.empty() ? 0.0 : gnorm(round_diff, tol).value;

  out.error = out.stage_reduce + out.stage_snap + out.stage_round;
  out.membership = out.P.is_member();
  return out;
}

PropertyReport verify_94(const QuantLattice& lattice, int samples,
                         uint64_t seed, double tol) {
  PropertyReport rep;
  Rng rng(seed);
  double keps = to_double(lattice.mass_cap());
  double sqrt_n = std::sqrt(static_cast<double>(lattice.n));
  ConstantsTable cn = ConstantsTable::make(lattice.n);
  double sep_floor = to_double(lattice.eps) * cn.c_94 /
                         std::pow(static_cast<double>(lattice.k),
                                  3 * lattice.n) -
                     1e-9;
  double worst_mass = 0.0, worst_norm = 0.0;
  double worst_sep = std::numeric_limits<double>::infinity();
  bool mass_ok = true, norm_ok = true, sep_ok = true;
  int pairs = 0;
  while (pairs < samples) {
    QuantizedCycle a = gen_class_member(lattice, 4, rng);
    QuantizedCycle b = gen_class_member(lattice, 4, rng);
    for (const QuantizedCycle* m : {&a, &b}) {
      double mm = to_double(m->mass());
      worst_mass = std::max(worst_mass, mm);
      if (!m->is_member()) mass_ok = false;
      ZeroCycle cyc = m->to_cycle();
      double g = cyc.empty() ? 0.0 : gnorm(cyc, tol).value;
      worst_norm = std::max(worst_norm, g - sqrt_n * keps);
      if (g > sqrt_n * keps + tol) norm_ok = false;
    }
    if (a == b) continue;
    ZeroCycle diff = combine(1, a.to_cycle(), -1, b.to_cycle());
    double g = diff.empty() ? 0.0 : gnorm(diff, tol).value;
    worst_sep = std::min(worst_sep, g);
    if (g < sep_floor) sep_ok = false;
    ++pairs;
  }
  rep.checks.push_back(
      PropertyCheck{"mass cap", mass_ok, worst_mass, keps});
  rep.checks.push_back(
      PropertyCheck{"norm bound", norm_ok, worst_norm, 0.0});
  rep.checks.push_back(PropertyCheck{"separation floor", sep_ok, sep_floor,
                                     worst_sep});
  return rep;
}

ConsequenceCheck check_B_implies_C(const ZeroCycle& t, long k, const Rat& eps,
                                   const QuantizedCycle& p, double tol) {
  require_chi_zero(t, "check_B_implies_C");
  int n = t.empty() ? p.lattice.n : t.n();
  double eps_d = to_double(eps);
  ConsequenceCheck out;
  out.g_t = t.empty() ? 0.0 : gnorm(t, tol).value;
  out.kappa_3eps = kappa(t, 3.0 * eps_d, SupportPolicy{}, tol).value;
  ZeroCycle diff = combine(1, t, -1, p.to_cycle(t.mode()));
  out.g_t_minus_p = diff.empty() ? 0.0 : gnorm(diff, tol).value;
  out.lhs = out.g_t + out.kappa_3eps;
  out.rhs = (std::sqrt(static_cast<double>(n)) + 4.0) *
            static_cast<double>(k) * eps_d;
  out.holds = out.lhs < out.rhs;
  return out;
}

}  // namespace flatcycle
