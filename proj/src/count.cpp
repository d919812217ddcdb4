#include "flatcycle/count.hpp"

#include <algorithm>
#include <cmath>

namespace flatcycle {

namespace {

void check_instance(const CountInstance& inst) {
  if (inst.q < 1 || inst.p < inst.q)
    throw BadParams("count requires 1 <= q <= p");
}

void brute(long pos, long q, long rem, long sum, Int& count) {
  if (pos == q) {
    if (sum == 0) ++count;
    return;
  }
  // the remaining budget must at least cover cancelling the running sum
  if (std::labs(sum) > rem) return;
  for (long v = -rem; v <= rem; ++v)
    brute(pos + 1, q, rem - std::labs(v), sum + v, count);
}

}  // namespace

CountResult count_exact(const CountInstance& inst) {
  check_instance(inst);
  Int total = 1;  // the zero function
  for (long r = 1; r <= inst.q - 1; ++r) {
    Int choose_support = binomial(inst.q, r);
    Int inner = 0;
    for (long s = r; 2 * s <= inst.p; ++s)
      inner += binomial(s - 1, r - 1) * binomial(inst.q - r + s - 1, s);
    total += choose_support * inner;
  }
  return CountResult{total, ln_of_int(total)};
}

CountResult count_bruteforce(const CountInstance& inst, double box_cap) {
  check_instance(inst);
  double box = static_cast<double>(inst.q) *
               std::log(static_cast<double>(2 * inst.p + 1));
  if (box > std::log(box_cap))
    throw SizeOverflow("brute-force box (2p+1)^q exceeds the cap");
  Int count = 0;
  brute(0, inst.q, inst.p, 0, count);
  return CountResult{count, ln_of_int(count)};
}

UpperBounds count_upper(const CountInstance& inst) {
  check_instance(inst);
  UpperBounds out;
  out.exact = count_exact(inst).exact;
  double q = static_cast<double>(inst.q);
  double p = static_cast<double>(inst.p);
  double ln_bound_f =
      q * std::log(2.0 * (p + q)) - std::lgamma(q + 1.0);
  out.bound_f = std::exp(ln_bound_f);
  out.bound_g_ln = q * std::log(11.0 * p / q);
  double ln_exact = ln_of_int(out.exact);
  out.holds_f = ln_exact <= ln_bound_f + 1e-12 * std::fabs(ln_bound_f) + 1e-12;
  out.holds_g = ln_exact <= out.bound_g_ln + 1e-12 * std::fabs(out.bound_g_ln) + 1e-12;
  return out;
}

ClassCardinality card_pnk(int n, long k, long q_cap) {
  if (n < 1 || k < 1) throw BadParams("card_pnk needs n >= 1 and k >= 1");
  ClassCardinality out;
  out.q = int_pow(2 * k + 1, n);
  out.p = Int(2 * n) * Int(k) * out.q;
  out.ln_bound = out.q.get_d() *
                 std::log(22.0 * static_cast<double>(n) * static_cast<double>(k));
  if (out.q <= q_cap && out.p.fits_slong_p()) {
    CountResult res = count_exact(CountInstance{out.p.get_si(), out.q.get_si()});
    out.exact = res.exact;
    out.ln_exact = res.ln_value;
    out.holds = out.ln_exact <= out.ln_bound + 1e-9 * std::fabs(out.ln_bound);
  } else {
    out.holds = true;  // exact skipped; only the bound is reported
  }
  return out;
}

BoundednessCertificate BoundednessCertificate::constant(double gamma,
                                                        double kappa_value) {
  BoundednessCertificate c;
  c.gamma = gamma;
  c.kappa_table = {{0.0, kappa_value}};
  return c;
}

double BoundednessCertificate::kappa_at(double eps) const {
  if (kappa_table.empty()) return 0.0;
  // non-increasing: the entry at the largest tabulated ε ≤ eps bounds κ(eps)
  const std::pair<double, double>* best = nullptr;
  for (const auto& row : kappa_table) {
    if (row.first <= eps && (best == nullptr || row.first > best->first))
      best = &row;
  }
  if (best == nullptr)
    throw BadParams("kappa table does not cover eps = " + std::to_string(eps));
  return best->second;
}

CoveringBound covering_bound(int n, const BoundednessCertificate& cert,
                             double eps) {
  if (!(eps > 0) || eps > 1) throw BadEps("covering_bound needs eps in (0,1]");
  double c95 = 4.0 * std::pow(static_cast<double>(n), 4);
  double scale = eps / 6.0;
  double x = c95 * (cert.gamma + cert.kappa_at(scale)) / scale;
  CoveringBound out;
  out.k = std::max(1L, static_cast<long>(std::floor(x)) + 1);  // strict
  out.ln_n = int_pow(2 * out.k + 1, n).get_d() *
             std::log(22.0 * static_cast<double>(n) * static_cast<double>(out.k));
  return out;
}

std::vector<size_t> greedy_net(const std::vector<ZeroCycle>& family,
                               double eps) {
  std::vector<size_t> kept;
  for (size_t i = 0; i < family.size(); ++i) {
    bool separated = true;
    for (size_t j : kept) {
      ZeroCycle diff = combine(1, family[i], -1, family[j]);
      double d = diff.empty() ? 0.0 : gnorm(diff).value;
      if (d < eps) {
        separated = false;
        break;
      }
    }
    if (separated) kept.push_back(i);
  }
  return kept;
}

}  // namespace flatcycle
