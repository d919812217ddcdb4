// Exact big-integer counting of the balanced bounded-l1 lattice class
// E(p,q) = {f : {1..q} → Z, Σf = 0, Σ|f| ≤ p}, its closed-form evaluation and
// brute-force oracle, the analytic upper bounds, the class cardinality of the
// quantized family, covering-number bounds, and greedy separated-set
// construction under the certified transport norm.
#pragma once

#include <optional>
#include <vector>

#include "flatcycle/cycle.hpp"
#include "flatcycle/transport.hpp"

namespace flatcycle {

struct CountInstance {
  long p = 1;
  long q = 1;
};

struct CountResult {
  Int exact;
  double ln_value = 0.0;
};

// Closed-form double sum with exact binomials:
// 1 + Σ_{r=1}^{q−1} C(q,r) Σ_{s≥r,2s≤p} C(s−1,r−1)·C(q−r+s−1,s).
CountResult count_exact(const CountInstance& inst);

// Exhaustive recursion over f with l1-budget pruning; independent of the
// closed form. The box (2p+1)^q must stay below the cap.
CountResult count_bruteforce(const CountInstance& inst,
                             double box_cap = 1e10);

struct UpperBounds {
  double bound_f = 0.0;     // 2^q (p+q)^q / q!
  double bound_g_ln = 0.0;  // q·ln(11p/q)
  bool holds_f = false;     // exact ≤ bound_f
  bool holds_g = false;     // ln(exact) ≤ bound_g_ln
  Int exact;
};

UpperBounds count_upper(const CountInstance& inst);

struct ClassCardinality {
  Int p;  // k·2n·(2k+1)^n
  Int q;  // (2k+1)^n
  std::optional<Int> exact;
  double ln_exact = 0.0;  // set when exact is
  double ln_bound = 0.0;  // (2k+1)^n·ln(22nk)
  bool holds = false;     // ln_exact ≤ ln_bound (true vacuously without exact)
};

// Cardinality of the quantized class at (n,k); independent of ε. The exact
// count is evaluated when q fits under the cap, the log bound always.
ClassCardinality card_pnk(int n, long k, long q_cap = 4096);

struct BoundednessCertificate {
  double gamma = 0.0;
  // non-increasing table (ε, bound); a single row encodes a constant
  std::vector<std::pair<double, double>> kappa_table;

  static BoundednessCertificate constant(double gamma, double kappa_value);
  double kappa_at(double eps) const;
};

struct CoveringBound {
  long k = 1;       // minimal k with c_95(n)·(Γ + κ(ε/6)) < k·(ε/6)
  double ln_n = 0;  // (2k+1)^n·ln(22nk)
};

CoveringBound covering_bound(int n, const BoundednessCertificate& cert,
                             double eps);

// Greedy ε-separated subset: keeps a cycle iff its certified distance to all
// kept cycles is ≥ eps. Returns indices into the family, in input order.
std::vector<size_t> greedy_net(const std::vector<ZeroCycle>& family,
                               double eps);

}  // namespace flatcycle
