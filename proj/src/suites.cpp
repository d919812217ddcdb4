#include "flatcycle/suites.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "flatcycle/count.hpp"
#include "flatcycle/generators.hpp"
#include "flatcycle/parallel.hpp"
#include "flatcycle/quantize.hpp"

namespace flatcycle {

namespace {

RunReport fresh_report(const std::string& command, const SuiteParams& p) {
  RunReport rep;
  rep.command = command;
  rep.seed = p.seed;
  std::ostringstream os;
  os << command << "|seed=" << p.seed << "|samples=" << p.samples
     << "|n=" << p.n << "|k=" << p.k << "|eps=" << p.eps << "|tol=" << p.tol
     << "|fault=" << p.inject_fault;
  rep.inputs_digest = digest(os.str());
  return rep;
}

// aggregate a sweep into one worst-case check so reports stay readable
struct Worst {
  double lhs = -1e300;
  double rhs = 0.0;
  bool any_fail = false;
  int count = 0;

  void feed(double l, double r, bool ok) {
    ++count;
    if (l - r > lhs - rhs) {
      lhs = l;
      rhs = r;
    }
    if (!ok) any_fail = true;
  }
  void into(RunReport& rep, const std::string& name) const {
    double l = count == 0 ? 0.0 : lhs;
    double r = count == 0 ? 0.0 : rhs;
    rep.checks.push_back(ReportCheck{name + " (worst of " +
                                         std::to_string(count) + ")",
                                     !any_fail, l, r, l - r});
  }
};

}  // namespace

RunReport suite_gnorm(const SuiteParams& p) {
  RunReport rep = fresh_report("verify gnorm", p);
  int samples = p.samples > 0 ? p.samples : 200;
  Worst gap_w, marg_w, lip_w;
  std::vector<ZeroCycle> cycles;
  {
    Rng rng(p.seed);
    std::uniform_int_distribution<int> nd(1, 3);
    std::uniform_int_distribution<int> ad(2, 40);
    for (int i = 0; i < samples; ++i)
      cycles.push_back(gen_random_cycle(nd(rng), ad(rng), rng));
  }
  std::vector<CertifyReport> certs(cycles.size());
  std::vector<TransportSolution> sols(cycles.size());
  parallel_for(cycles.size(), [&](size_t i) {
    sols[i] = gnorm(cycles[i], p.tol);
    if (p.inject_fault && i == 0 && !sols[i].plan.empty())
      sols[i].plan[0].flow += Rat(1, 10);
    certs[i] = certify(cycles[i], sols[i], p.tol);
  });
  for (size_t i = 0; i < cycles.size(); ++i) {
    for (const CertifyCheck& c : certs[i].checks) {
      if (c.name == "duality_gap")
        gap_w.feed(c.residual, c.bound, c.pass);
      else if (c.name == "plan_marginals")
        marg_w.feed(c.residual, c.bound, c.pass);
      else if (c.name == "potential_lipschitz")
        lip_w.feed(c.residual, c.bound, c.pass);
      else if (!c.pass)
        rep.add("certify:" + c.name, false, c.residual, c.bound);
    }
  }
  gap_w.into(rep, "duality gap <= 1e-9 rel");
  marg_w.into(rep, "plan marginals exact");
  lip_w.into(rep, "potentials 1-Lipschitz");
  return rep;
}

RunReport suite_oned(const SuiteParams& p) {
  RunReport rep = fresh_report("verify oned", p);
  int samples = p.samples > 0 ? p.samples : 100;
  Rng rng(p.seed + 1);
  std::uniform_int_distribution<int> ad(2, 24);
  Worst agree_w, mass_w;
  bool boundary_exact = true;
  for (int i = 0; i < samples; ++i) {
    ZeroCycle t = gen_random_cycle(1, ad(rng), rng);
    double solver = gnorm(t, p.tol).value;
    Rat closed = gnorm_1d_exact(t);
    agree_w.feed(std::fabs(solver - to_double(closed)), tol::kExact1d,
                 std::fabs(solver - to_double(closed)) <= tol::kExact1d);
    OneChain fill = line_fill(t);
    if (!(boundary(fill) == t)) boundary_exact = false;
    double fill_mass = to_double(fill.mass_exact());
    mass_w.feed(std::fabs(fill_mass - solver), tol::kExact1d,
                std::fabs(fill_mass - solver) <= tol::kExact1d);
    if (fill.mass_exact() != closed) boundary_exact = false;  // same formula, exact
  }
  agree_w.into(rep, "|gnorm - gnorm_1d| <= 1e-12");
  mass_w.into(rep, "|mass(line_fill) - gnorm| <= 1e-12");
  rep.add("boundary(line_fill(P)) == P exactly", boundary_exact,
          boundary_exact ? 0 : 1, 0);
  return rep;
}

RunReport suite_count(const SuiteParams& p) {
  RunReport rep = fresh_report("verify count10", p);
  long pmax = p.samples > 0 ? p.samples : 8;
  bool exact_matches = true;
  Worst g_w;
  std::vector<CountInstance> insts;
  for (long pp = 1; pp <= pmax; ++pp)
    for (long q = 1; q <= pp; ++q) insts.push_back(CountInstance{pp, q});
  insts.push_back(CountInstance{10, 3});
  insts.push_back(CountInstance{12, 4});
  std::vector<char> ok(insts.size(), 1);
  std::vector<std::pair<double, double>> lnb(insts.size());
  parallel_for(insts.size(), [&](size_t i) {
    CountResult ex = count_exact(insts[i]);
    CountResult bf = count_bruteforce(insts[i]);
    ok[i] = (ex.exact == bf.exact);
    UpperBounds ub = count_upper(insts[i]);
    lnb[i] = {ex.ln_value, ub.bound_g_ln};
    if (!ub.holds_g || !ub.holds_f) ok[i] = 0;
  });
  if (p.inject_fault && !insts.empty()) ok[0] = 0;
  for (size_t i = 0; i < insts.size(); ++i) {
    if (!ok[i]) exact_matches = false;
    g_w.feed(lnb[i].first, lnb[i].second, lnb[i].first <= lnb[i].second + 1e-9);
  }
  rep.add("count_exact == count_bruteforce on the sweep", exact_matches,
          exact_matches ? 0 : 1, 0);
  g_w.into(rep, "ln(exact) <= q ln(11p/q)");

  // monotone in p at fixed q
  bool monotone = true;
  for (long q = 1; q <= 6; ++q) {
    Int prev = 0;
    for (long pp = q; pp <= pmax + 4; ++pp) {
      Int cur = count_exact(CountInstance{pp, q}).exact;
      if (cur < prev) monotone = false;
      prev = cur;
    }
  }
  rep.add("count_exact nondecreasing in p", monotone, monotone ? 0 : 1, 0);
  return rep;
}

RunReport suite_grid92(const SuiteParams& p) {
  RunReport rep = fresh_report("verify grid92", p);
  int samples = p.samples > 0 ? p.samples : 500;
  std::vector<GridCycle> cases;
  {
    Rng rng(p.seed + 2);
    std::uniform_int_distribution<int> nd(1, p.n > 0 ? p.n : 3);
    std::uniform_int_distribution<int> ad(2, 24);
    for (int i = 0; i < samples; ++i) {
      int n = nd(rng);
      std::uniform_int_distribution<long> kd(1, p.k > 0 ? p.k : 3);
      GridSpec spec{n, kd(rng)};
      cases.push_back(gen_grid_random(spec, ad(rng), 3, rng));
    }
  }
  std::vector<SandwichReport> reps(cases.size());
  parallel_for(cases.size(), [&](size_t i) { reps[i] = verify_92(cases[i], p.tol); });
  Worst left_w, right_w;
  for (size_t i = 0; i < cases.size(); ++i) {
    double sqrt_n = std::sqrt(static_cast<double>(cases[i].spec.n));
    bool ok = reps[i].pass && !p.inject_fault;
    left_w.feed(reps[i].g / sqrt_n, reps[i].m, ok || reps[i].left_slack >= -p.tol);
    right_w.feed(reps[i].m, reps[i].m + reps[i].right_slack,
                 (ok || reps[i].right_slack >= -p.tol) && !p.inject_fault);
  }
  left_w.into(rep, "G/sqrt(n) <= M");
  right_w.into(rep, "M <= c(n) k^{2n} G");
  return rep;
}

RunReport suite_quant94(const SuiteParams& p) {
  RunReport rep = fresh_report("verify quant94", p);
  int pairs = p.samples > 0 ? p.samples : 200;
  int nmax = p.n > 0 ? p.n : 2;
  long kmax = p.k > 0 ? p.k : 2;
  Rat eps = rat_of_double(p.eps);
  if (!(eps > 0) || eps > 1) eps = Rat(1);
  int lattices = nmax * static_cast<int>(kmax);
  int per = std::max(1, pairs / lattices);
  Worst mass_w, norm_w, sep_w;
  for (int n = 1; n <= nmax; ++n)
    for (long k = 1; k <= kmax; ++k) {
      QuantLattice lat = make_lattice(n, k, eps);
      PropertyReport sub =
          verify_94(lat, per, p.seed + 3 + static_cast<uint64_t>(n * 17 + k));
      for (const PropertyCheck& c : sub.checks) {
        bool ok = c.pass && !p.inject_fault;
        if (c.name == "mass cap")
          mass_w.feed(c.lhs + (p.inject_fault ? 1 : 0), c.rhs, ok);
        else if (c.name == "norm bound")
          norm_w.feed(c.lhs, c.rhs, ok);
        else
          sep_w.feed(c.lhs, c.rhs, ok);
      }
    }
  mass_w.into(rep, "mass(P) <= k eps");
  norm_w.into(rep, "G(P) - sqrt(n) k eps <= 0");
  sep_w.into(rep, "separation floor <= min G(P1-P2)");
  return rep;
}

RunReport suite_deform95(const SuiteParams& p) {
  RunReport rep = fresh_report("verify deform95", p);
  int samples = p.samples > 0 ? p.samples : 50;
  Rng rng(p.seed + 4);
  std::vector<ZeroCycle> cycles;
  std::vector<Rat> eps_list;
  for (int i = 0; i < samples; ++i) {
    int mode = i % 5;
    Rat eps = (i % 2 == 0) ? Rat(1) : Rat(1, 2);
    switch (mode) {
      case 0:
        cycles.push_back(gen_dipoles(1, 1 + (i % 3), rng));
        break;
      case 1:
        cycles.push_back(gen_harmonic(1, 1 + (i % 5)));
        break;
      case 2:
        cycles.push_back(gen_random_cycle(2, 4 + (i % 6), rng));
        break;
      case 3:
        cycles.push_back(gen_random_cycle(3, 3 + (i % 4), rng, Mode::Rational,
                                          6, 2));
        break;
      default:
        cycles.push_back(
            gen_grid_random(GridSpec{2, 2}, 4 + (i % 4), 2, rng).to_cycle());
        break;
    }
    eps_list.push_back(eps);
  }

  std::vector<std::string> failures(cycles.size());
  std::vector<std::array<double, 5>> errs(cycles.size());
  parallel_for(cycles.size(), [&](size_t i) {
    const ZeroCycle& t = cycles[i];
    const Rat& eps = eps_list[i];
    double eps_d = to_double(eps);
    int n = t.n();
    double g = gnorm(t, p.tol).value;
    double kap = kappa(t, eps_d, SupportPolicy{}, p.tol).value;
    ConstantsTable cn = ConstantsTable::make(n);
    long k = static_cast<long>(std::floor(cn.c_95 * (g + kap) / eps_d)) + 1;
    if (!check_condition_A(n, k, eps_d, g, kap)) ++k;  // float edge
    DeformResult res = deform(t, k, eps, p.tol);
    double err_bound = 3.0 * eps_d * (p.inject_fault ? 0.0 : 1.0);
    double sqrt_n = std::sqrt(static_cast<double>(n));
    // stage budgets behind the 3eps total: reduction eps, snap
    // (kappa + eps/10)·sqrt(n)/2k, rounding sqrt(n)·eps/n
    double snap_budget =
        (res.kappa_value + eps_d / 10.0) * sqrt_n / (2.0 * k);
    double round_budget = sqrt_n * eps_d / n;
    errs[i] = {res.error, err_bound, res.stage_reduce, res.stage_snap,
               res.stage_round};
    std::ostringstream why;
    if (!res.condition_a) why << "condition A lost after rechoice;";
    if (!(res.error < err_bound)) why << "certified error " << res.error
                                      << " >= 3eps " << err_bound << ";";
    if (!res.membership) why << "membership failed;";
    if (res.stage_reduce > eps_d + 1e-7) why << "reduction stage over eps;";
    if (res.stage_snap > snap_budget + 1e-7) why << "snap stage over budget;";
    if (res.stage_round > round_budget + 1e-7)
      why << "rounding stage over budget;";
    ConsequenceCheck cc = check_B_implies_C(t, k, eps, res.P, p.tol);
    if (!cc.holds) why << "consequence check failed;";
    if (!(cc.g_t_minus_p < err_bound))
      why << "direct G(T-P) above 3eps;";
    failures[i] = why.str();
  });
  Worst err_w, reduce_w, snap_w, round_w;
  bool all_ok = true;
  for (size_t i = 0; i < cycles.size(); ++i) {
    double eps_d = to_double(eps_list[i]);
    if (!failures[i].empty()) {
      all_ok = false;
      rep.add("instance " + std::to_string(i) + ": " + failures[i], false, 1, 0);
    }
    err_w.feed(errs[i][0], errs[i][1], failures[i].empty());
    reduce_w.feed(errs[i][2], eps_d, errs[i][2] <= eps_d + 1e-7);
    snap_w.feed(errs[i][3], eps_d, errs[i][3] <= eps_d + 1e-7);
    round_w.feed(errs[i][4], eps_d, errs[i][4] <= eps_d + 1e-7);
  }
  err_w.into(rep, "certified error < 3 eps");
  reduce_w.into(rep, "reduction stage <= eps");
  snap_w.into(rep, "snap stage <= eps");
  round_w.into(rep, "rounding stage <= eps");
  rep.add("membership + consequence on all instances", all_ok, all_ok ? 0 : 1, 0);
  return rep;
}

RunReport suite_kappa80(const SuiteParams& p) {
  RunReport rep = fresh_report("verify kappa80", p);
  Rng rng(p.seed + 5);
  std::vector<ZeroCycle> cases;
  cases.push_back(make_cycle(
      1, {{Point({Rat(1)}), Rat(1)}, {Point({Rat(-1)}), Rat(-1)}},
      Mode::Rational));
  cases.push_back(gen_harmonic(1, 4));
  cases.push_back(gen_random_cycle(2, 6, rng));
  cases.push_back(gen_random_cycle(1, 8, rng));

  Worst mono_w, conv_w, massb_w, zero_fwd_w, zero_bwd_w, scale_w, subadd_w;
  for (const ZeroCycle& t : cases) {
    double g = gnorm(t, p.tol).value;
    double lo = std::max(0.05 * g, 1e-3);
    double hi = 1.25 * g + 0.1;
    std::vector<double> grid;
    for (int i = 0; i < 8; ++i)
      grid.push_back(lo + (hi - lo) * i / 7.0);
    std::vector<KappaEstimate> curve = kappa_curve(t, grid);
    double fuzz = p.inject_fault ? 1.0 : 0.0;
    for (size_t i = 0; i + 1 < curve.size(); ++i)
      mono_w.feed(curve[i + 1].value + fuzz, curve[i].value + 1e-7,
                  curve[i + 1].value + fuzz <= curve[i].value + 1e-7);
    for (size_t i = 0; i + 2 < curve.size(); ++i) {
      double mid = curve[i + 1].value;
      double avg = 0.5 * (curve[i].value + curve[i + 2].value);
      conv_w.feed(mid, avg + 1e-7, mid <= avg + 1e-7);
    }
    double mass_t = to_double(t.mass());
    for (const KappaEstimate& est : curve)
      massb_w.feed(est.value, mass_t + 1e-9, est.value <= mass_t + 1e-9);

    // zero characterization, pinned at and just below the norm
    double at = kappa(t, std::max(g, 1e-9), SupportPolicy{}, p.tol).value;
    zero_fwd_w.feed(at, 1e-9, at <= 1e-9);
    if (g > 1e-3) {
      double below = kappa(t, 0.99 * g, SupportPolicy{}, p.tol).value;
      zero_bwd_w.feed(1e-9, below, below > 1e-9);
    }

    // scaling identity
    for (const Rat& lam : {Rat(2), Rat(-3)}) {
      double lam_abs = std::fabs(to_double(lam));
      double e0 = std::max(0.5 * g, 1e-2);
      ZeroCycle scaled = combine(lam, t, 0, ZeroCycle(t.n(), t.mode()));
      double left = kappa(scaled, lam_abs * e0, SupportPolicy{}, p.tol).value;
      double right = lam_abs * kappa(t, e0, SupportPolicy{}, p.tol).value;
      double slack = 1e-9 * std::max(1.0, right);
      scale_w.feed(std::fabs(left - right), slack,
                   std::fabs(left - right) <= slack);
    }
  }

  // subadditivity on random pairs over a shared support
  int pairs = p.samples > 0 ? p.samples : 50;
  std::vector<double> lhs(static_cast<size_t>(pairs)), rhs(static_cast<size_t>(pairs));
  std::vector<std::array<ZeroCycle, 2>> duo(static_cast<size_t>(pairs));
  for (int i = 0; i < pairs; ++i) {
    int n = 1 + (i % 2);
    duo[static_cast<size_t>(i)] = {gen_random_cycle(n, 4 + (i % 4), rng),
                                   gen_random_cycle(n, 4 + ((i + 1) % 4), rng)};
  }
  parallel_for(static_cast<size_t>(pairs), [&](size_t i) {
    const ZeroCycle& t1 = duo[i][0];
    const ZeroCycle& t2 = duo[i][1];
    SupportPolicy shared;
    for (const auto& [pt, w] : t1.atoms()) shared.extra.push_back(pt);
    for (const auto& [pt, w] : t2.atoms()) shared.extra.push_back(pt);
    double e1 = 0.3 + 0.05 * static_cast<double>(i % 5);
    double e2 = 0.4;
    double k1 = kappa(t1, e1, shared, p.tol).value;
    double k2 = kappa(t2, e2, shared, p.tol).value;
    double ks = kappa(combine(1, t1, 1, t2), e1 + e2, shared, p.tol).value;
    lhs[i] = ks;
    rhs[i] = k1 + k2;
  });
  for (int i = 0; i < pairs; ++i)
    subadd_w.feed(lhs[static_cast<size_t>(i)], rhs[static_cast<size_t>(i)] + 1e-7,
                  lhs[static_cast<size_t>(i)] <= rhs[static_cast<size_t>(i)] + 1e-7);

  mono_w.into(rep, "non-increasing in eps");
  conv_w.into(rep, "midpoint convex within 1e-7");
  massb_w.into(rep, "kappa <= mass(T)");
  zero_fwd_w.into(rep, "G <= eps implies kappa ~ 0");
  zero_bwd_w.into(rep, "G > eps implies kappa > 0");
  scale_w.into(rep, "scaling identity within 1e-9");
  subadd_w.into(rep, "subadditivity on pairs");
  return rep;
}

RunReport suite_beckmann(const SuiteParams& p) {
  RunReport rep = fresh_report("verify beckmann", p);
  int samples = p.samples > 0 ? p.samples : 100;
  std::vector<ZeroCycle> cycles;
  std::vector<GridSpec> specs;
  {
    Rng rng(p.seed + 6);
    std::uniform_int_distribution<int> nd(1, p.n > 0 ? p.n : 3);
    std::uniform_int_distribution<int> ad(2, 12);
    for (int i = 0; i < samples; ++i) {
      int n = nd(rng);
      std::uniform_int_distribution<long> kd(1, p.k > 0 ? p.k : 4);
      specs.push_back(GridSpec{n, kd(rng)});
      cycles.push_back(gen_random_cycle(n, ad(rng), rng));
    }
  }
  std::vector<BeckmannResult> results(cycles.size());
  std::vector<char> div_ok(cycles.size(), 1);
  parallel_for(cycles.size(), [&](size_t i) {
    results[i] = beckmann(cycles[i], specs[i], p.tol);
    std::map<GridIndex, Rat> div = divergence(results[i].field);
    div_ok[i] = (div == results[i].snapped.theta) ? 1 : 0;
  });
  Worst lo_w, hi_w;
  bool all_div = true;
  for (size_t i = 0; i < cycles.size(); ++i) {
    double sn = std::sqrt(static_cast<double>(specs[i].n));
    const BeckmannResult& r = results[i];
    double fuzz = p.inject_fault ? 1.0 : 0.0;
    lo_w.feed(r.gnorm_snapped, r.value + p.tol * (1 + r.value),
              r.gnorm_snapped <= r.value + p.tol * (1 + r.value));
    hi_w.feed(r.value + fuzz, sn * r.gnorm_snapped * (1 + p.tol) + 1e-12,
              r.value + fuzz <= sn * r.gnorm_snapped * (1 + p.tol) + 1e-12);
    if (!div_ok[i]) all_div = false;
  }
  lo_w.into(rep, "G(snapT) <= value");
  hi_w.into(rep, "value <= sqrt(n) G(snapT) (1+tol)");
  rep.add("divergence(field) == snapT exactly", all_div, all_div ? 0 : 1, 0);
  return rep;
}

RunReport suite_separation(const SuiteParams& p) {
  RunReport rep = fresh_report("verify separation", p);
  int nmax = p.n > 0 ? p.n : 3;
  long kmax = p.k > 0 ? p.k : 4;
  Worst w;
  for (int n = 1; n <= nmax; ++n)
    for (long k = 1; k <= kmax; ++k) {
      SeparationCheck chk = check_separation(GridSpec{n, k});
      double fuzz = p.inject_fault ? chk.min_abs_projection + chk.rho : 0.0;
      w.feed(chk.rho + fuzz, chk.min_abs_projection,
             chk.pass && !p.inject_fault);
    }
  w.into(rep, "rho <= min |<x-y,u>| over all pairs");
  return rep;
}

RunReport suite_entropy(const SuiteParams& p) {
  RunReport rep = fresh_report("verify entropy", p);
  long kmax = p.k > 0 ? p.k : 5;
  Worst ln_w;
  for (long k = 1; k <= kmax; ++k) {
    ClassCardinality card = card_pnk(1, k);
    double fuzz = p.inject_fault ? card.ln_bound + 1 : 0.0;
    ln_w.feed(card.ln_exact + fuzz, card.ln_bound,
              card.holds && !p.inject_fault);
  }
  ln_w.into(rep, "ln(card) <= (2k+1)^n ln(22nk)");

  // independent enumeration through the quantizer at n=1, k=1
  QuantLattice lat = make_lattice(1, 1, Rat(1));
  long budget = rat_floor(lat.mass_cap() / lat.eps_hat).get_si();  // = 6
  long members = 0;
  std::vector<ZeroCycle> family;
  for (long a = -budget; a <= budget; ++a)
    for (long b = -budget; b <= budget; ++b) {
      long c = -a - b;
      if (std::labs(a) + std::labs(b) + std::labs(c) > budget) continue;
      QuantizedCycle q;
      q.lattice = lat;
      if (a != 0) q.mult[{-1}] = a;
      if (b != 0) q.mult[{0}] = b;
      if (c != 0) q.mult[{1}] = c;
      if (q.is_member()) {
        ++members;
        family.push_back(q.to_cycle());
      }
    }
  Int expected = count_exact(CountInstance{budget, 3}).exact;
  bool match = (Int(members) == expected) && !p.inject_fault;
  rep.add("enumerated members == count_exact(6,3)", match,
          static_cast<double>(members), expected.get_d());

  // the class itself is a separated family below the separation bound
  ConstantsTable cn = ConstantsTable::make(1);
  double eps_net = cn.c_94 * 0.999;  // eps=1, k=1
  std::vector<size_t> kept = greedy_net(family, eps_net);
  bool all_kept = kept.size() == family.size();
  rep.add("greedy net keeps the whole class below the separation bound",
          all_kept, static_cast<double>(kept.size()),
          static_cast<double>(family.size()));
  bool separated = true;
  for (size_t i = 0; i < kept.size() && separated; ++i)
    for (size_t j = i + 1; j < kept.size(); ++j) {
      ZeroCycle diff = combine(1, family[kept[i]], -1, family[kept[j]]);
      double d = diff.empty() ? 0.0 : gnorm(diff).value;
      if (d < eps_net) {
        separated = false;
        break;
      }
    }
  rep.add("greedy net output pairwise separated", separated, separated ? 0 : 1,
          0);

  // covering bound arithmetic on a known certificate
  CoveringBound cb = covering_bound(1, BoundednessCertificate::constant(1.0, 0.0), 1.0);
  bool cb_ok = (cb.k == 25) &&
               std::fabs(cb.ln_n - 51.0 * std::log(550.0)) < 1e-9 * cb.ln_n;
  rep.add("covering bound instance (k=25, lnN=51 ln 550)", cb_ok,
          static_cast<double>(cb.k), 25.0);
  return rep;
}

RunReport run_suite(const std::string& name, const SuiteParams& p) {
  if (name == "gnorm") return suite_gnorm(p);
  if (name == "oned") return suite_oned(p);
  if (name == "count10" || name == "count") return suite_count(p);
  if (name == "grid92") return suite_grid92(p);
  if (name == "quant94") return suite_quant94(p);
  if (name == "deform95") return suite_deform95(p);
  if (name == "kappa80") return suite_kappa80(p);
  if (name == "beckmann") return suite_beckmann(p);
  if (name == "separation") return suite_separation(p);
  if (name == "entropy") return suite_entropy(p);
  throw BadParams("unknown suite: " + name);
}

}  // namespace flatcycle
