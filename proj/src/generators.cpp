#include "flatcycle/generators.hpp"

#include <algorithm>

namespace flatcycle {

namespace {

// dyadic coordinate in [-1,1] with the given denominator resolution
Rat random_coord(Rng& rng, int denom_bits) {
  long denom = 1L << denom_bits;
  std::uniform_int_distribution<long> d(-denom, denom);
  return rat_make(d(rng), denom);
}

Point random_point(int n, Rng& rng, int denom_bits) {
  std::vector<Rat> c;
  c.reserve(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) c.push_back(random_coord(rng, denom_bits));
  return Point(std::move(c));
}

}  // namespace

ZeroCycle gen_dipoles(int n, int count, Rng& rng, Mode mode) {
  if (n < 1 || count < 0) throw BadParams("gen_dipoles needs n >= 1, count >= 0");
  std::uniform_int_distribution<long> wd(1, 4);
  std::vector<std::pair<Point, Rat>> atoms;
  for (int i = 0; i < count; ++i) {
    Rat w = rat_make(wd(rng), 2);
    atoms.emplace_back(random_point(n, rng, 10), w);
    atoms.emplace_back(random_point(n, rng, 10), -w);
  }
  return make_cycle(n, atoms, mode);
}

ZeroCycle gen_harmonic(int n, int terms, Mode mode) {
  if (n < 1 || terms < 0) throw BadParams("gen_harmonic needs n >= 1, terms >= 0");
  std::vector<std::pair<Point, Rat>> atoms;
  for (long j = 1; j <= terms; ++j) {
    std::vector<Rat> c(static_cast<size_t>(n), Rat(0));
    c[0] = Rat(1, j * j);
    atoms.emplace_back(Point(std::move(c)), Rat(1));
  }
  return embed_free(n, atoms, mode);
}

GridCycle gen_grid_random(const GridSpec& spec, int atoms, long max_mult,
                          Rng& rng) {
  if (atoms < 2) throw BadParams("gen_grid_random needs at least 2 atoms");
  std::uniform_int_distribution<long> coord(-spec.k, spec.k);
  std::uniform_int_distribution<long> weight(-max_mult, max_mult);
  std::map<GridIndex, Rat> theta;
  for (int i = 0; i < atoms; ++i) {
    GridIndex idx(static_cast<size_t>(spec.n));
    for (int a = 0; a < spec.n; ++a) idx[static_cast<size_t>(a)] = coord(rng);
    theta[idx] += Rat(weight(rng));
  }
  // rebalance: dump the surplus on the first two occupied indices
  Rat chi = 0;
  for (const auto& [i, w] : theta) chi += w;
  if (chi != 0) {
    theta.begin()->second -= chi;
  }
  std::vector<std::pair<GridIndex, Rat>> list(theta.begin(), theta.end());
  GridCycle out = make_grid_cycle(spec, list);
  if (out.theta.size() < 2) {
    // degenerate draw (everything cancelled); place a fixed dipole instead
    GridIndex lo(static_cast<size_t>(spec.n), -spec.k);
    GridIndex hi(static_cast<size_t>(spec.n), spec.k);
    return make_grid_cycle(spec, {{lo, Rat(1)}, {hi, Rat(-1)}});
  }
  return out;
}

QuantizedCycle gen_class_member(const QuantLattice& lattice, int atoms,
                                Rng& rng) {
  std::uniform_int_distribution<long> coord(-lattice.k, lattice.k);
  // p = kε/ε̂ is the multiplicity budget; stay inside it after χ-correction
  Rat budget_r = lattice.mass_cap() / lattice.eps_hat;
  long budget = rat_floor(budget_r).get_si();
  long per_atom = std::max(1L, budget / std::max(1, 4 * atoms));
  std::uniform_int_distribution<long> mult(-per_atom, per_atom);
  for (int attempt = 0; attempt < 64; ++attempt) {
    QuantizedCycle out;
    out.lattice = lattice;
    for (int i = 0; i < atoms; ++i) {
      GridIndex idx(static_cast<size_t>(lattice.n));
      for (int a = 0; a < lattice.n; ++a)
        idx[static_cast<size_t>(a)] = coord(rng);
      long m = mult(rng);
      if (m != 0) out.mult[idx] += m;
    }
    for (auto it = out.mult.begin(); it != out.mult.end();) {
      if (it->second == 0)
        it = out.mult.erase(it);
      else
        ++it;
    }
    Int correction = out.chi_mult();
    if (correction != 0) {
      GridIndex idx(static_cast<size_t>(lattice.n));
      for (int a = 0; a < lattice.n; ++a)
        idx[static_cast<size_t>(a)] = coord(rng);
      out.mult[idx] -= correction;
      if (out.mult[idx] == 0) out.mult.erase(idx);
    }
    if (out.is_member() && !out.mult.empty()) return out;
  }
  // deterministic fallback: the smallest dipole member
  QuantizedCycle out;
  out.lattice = lattice;
  GridIndex lo(static_cast<size_t>(lattice.n), -lattice.k);
  GridIndex hi(static_cast<size_t>(lattice.n), lattice.k);
  out.mult[lo] = 1;
  out.mult[hi] = -1;
  return out;
}

ZeroCycle gen_random_cycle(int n, int atoms, Rng& rng, Mode mode,
                           int denom_bits, long max_weight) {
  if (atoms < 2) throw BadParams("gen_random_cycle needs at least 2 atoms");
  std::uniform_int_distribution<long> wd(1, max_weight);
  std::vector<std::pair<Point, Rat>> list;
  Rat total = 0;
  for (int i = 0; i + 1 < atoms; ++i) {
    long sign = (rng() & 1) ? 1 : -1;
    Rat w = rat_make(sign * wd(rng), 2);
    total += w;
    list.emplace_back(random_point(n, rng, denom_bits), w);
  }
  list.emplace_back(random_point(n, rng, denom_bits), -total);
  ZeroCycle out = make_cycle(n, list, mode);
  if (out.size() < 2) {
    std::vector<Rat> a(static_cast<size_t>(n), Rat(-1, 2));
    std::vector<Rat> b(static_cast<size_t>(n), Rat(1, 2));
    return make_cycle(
        n, {{Point(a), Rat(1)}, {Point(b), Rat(-1)}}, mode);
  }
  return out;
}

}  // namespace flatcycle
