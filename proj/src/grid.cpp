#include "flatcycle/grid.hpp"

#include <algorithm>
#include <cmath>

namespace flatcycle {

Int GridSpec::num_points() const { return int_pow(2 * k + 1, n); }

Int GridSpec::num_edges() const {
  return Int(n) * Int(2 * k) * int_pow(2 * k + 1, n - 1);
}

Rat GridCycle::chi() const {
  Rat s = 0;
  for (const auto& [i, w] : theta) s += w;
  return s;
}

Rat GridCycle::mass() const {
  Rat s = 0;
  for (const auto& [i, w] : theta) s += rat_abs(w);
  return s;
}

Point GridCycle::point_of(const GridIndex& idx) const {
  std::vector<Rat> c;
  c.reserve(idx.size());
  for (long i : idx) c.push_back(rat_make(i, spec.k));
  return Point(std::move(c));
}

ZeroCycle GridCycle::to_cycle(Mode mode) const {
  std::vector<std::pair<Point, Rat>> atoms;
  atoms.reserve(theta.size());
  for (const auto& [i, w] : theta) atoms.emplace_back(point_of(i), w);
  return make_measure(spec.n, atoms, mode);
}

namespace {

void check_index(const GridSpec& spec, const GridIndex& idx) {
  if (static_cast<int>(idx.size()) != spec.n)
    throw DimensionMismatch("grid index dimension mismatch");
  for (long i : idx)
    if (i < -spec.k || i > spec.k)
      throw OutOfCube("grid index outside {-k..k}");
}

GridCycle build_grid(const GridSpec& spec,
                     const std::vector<std::pair<GridIndex, Rat>>& theta,
                     bool check_chi) {
  GridCycle out;
  out.spec = spec;
  for (const auto& [i, w] : theta) {
    if (w == 0) continue;
    check_index(spec, i);
    Rat wc = w;
    wc.canonicalize();
    out.theta[i] += wc;
  }
  for (auto it = out.theta.begin(); it != out.theta.end();) {
    if (it->second == 0)
      it = out.theta.erase(it);
    else
      ++it;
  }
  if (check_chi && out.chi() != 0)
    throw ChiNonZero("grid cycle weights sum to " + rat_to_string(out.chi()));
  return out;
}

void check_cap(const Int& count, long cap, const char* what) {
  if (count > cap)
    throw SizeOverflow(std::string(what) + " count " + count.get_str() +
                       " exceeds cap " + std::to_string(cap));
}

}  // namespace

GridCycle make_grid_cycle(const GridSpec& spec,
                          const std::vector<std::pair<GridIndex, Rat>>& theta) {
  return build_grid(spec, theta, /*check_chi=*/true);
}

GridCycle make_grid_measure(const GridSpec& spec,
                            const std::vector<std::pair<GridIndex, Rat>>& theta) {
  return build_grid(spec, theta, /*check_chi=*/false);
}

std::vector<GridIndex> grid_indices(const GridSpec& spec, long cap) {
  check_cap(spec.num_points(), cap, "grid point");
  std::vector<GridIndex> out;
  out.reserve(static_cast<size_t>(spec.num_points().get_si()));
  GridIndex idx(static_cast<size_t>(spec.n), -spec.k);
  for (;;) {
    out.push_back(idx);
    int axis = spec.n - 1;
    while (axis >= 0) {
      if (++idx[static_cast<size_t>(axis)] <= spec.k) break;
      idx[static_cast<size_t>(axis)] = -spec.k;
      --axis;
    }
    if (axis < 0) break;
  }
  return out;
}

std::vector<Point> grid_points(const GridSpec& spec, long cap) {
  std::vector<Point> out;
  GridCycle helper;
  helper.spec = spec;
  for (const GridIndex& idx : grid_indices(spec, cap))
    out.push_back(helper.point_of(idx));
  return out;
}

std::vector<std::pair<GridIndex, GridIndex>> grid_edges(const GridSpec& spec,
                                                        long cap) {
  check_cap(spec.num_edges(), cap, "grid edge");
  std::vector<std::pair<GridIndex, GridIndex>> out;
  for (const GridIndex& idx : grid_indices(spec, cap)) {
    for (int axis = 0; axis < spec.n; ++axis) {
      if (idx[static_cast<size_t>(axis)] == spec.k) continue;
      GridIndex to = idx;
      ++to[static_cast<size_t>(axis)];
      out.emplace_back(idx, to);
    }
  }
  return out;
}

SnapResult snap(const ZeroCycle& t, const GridSpec& spec) {
  if (!t.empty() && t.n() != spec.n)
    throw DimensionMismatch("snap dimension mismatch");
  SnapResult out;
  out.snapped.spec = spec;
  for (const auto& [p, w] : t.atoms()) {
    GridIndex idx(static_cast<size_t>(spec.n));
    for (int a = 0; a < spec.n; ++a) {
      Int i = round_nearest_tie_down(p.x[static_cast<size_t>(a)] * spec.k);
      long v = i.get_si();
      v = std::max(-spec.k, std::min(spec.k, v));
      idx[static_cast<size_t>(a)] = v;
    }
    out.bound += std::fabs(to_double(w)) * dist(p, out.snapped.point_of(idx));
    out.snapped.theta[idx] += w;
  }
  for (auto it = out.snapped.theta.begin(); it != out.snapped.theta.end();) {
    if (it->second == 0)
      it = out.snapped.theta.erase(it);
    else
      ++it;
  }
  return out;
}

SeparatingDirection separating_direction(const GridSpec& spec) {
  SeparatingDirection out;
  double eps = spec.eps_k();
  out.alpha_k = eps / (4.0 + eps);
  if (spec.n == 1) {
    out.u = {1.0};
    out.rho = eps;  // exact lattice spacing on the line
    return out;
  }
  std::vector<double> v(static_cast<size_t>(spec.n));
  double s = 1.0;
  double norm_sq = 0.0;
  for (int j = 0; j < spec.n; ++j) {
    v[static_cast<size_t>(j)] = s;
    norm_sq += s * s;
    s *= out.alpha_k;
  }
  double norm = std::sqrt(norm_sq);
  out.u.resize(v.size());
  for (size_t j = 0; j < v.size(); ++j) out.u[j] = v[j] / norm;
  out.rho = std::pow(eps, spec.n) /
            (2.0 * std::sqrt(2.0) * std::pow(5.0, spec.n - 1));
  return out;
}

SeparationCheck check_separation(const GridSpec& spec, long cap) {
  SeparatingDirection dir = separating_direction(spec);
  std::vector<Point> pts = grid_points(spec, cap);
  SeparationCheck out;
  out.rho = dir.rho;
  out.min_abs_projection = std::numeric_limits<double>::infinity();
  for (size_t a = 0; a < pts.size(); ++a) {
    for (size_t b = a + 1; b < pts.size(); ++b) {
      double dot = 0.0;
      for (int c = 0; c < spec.n; ++c)
        dot += (pts[a].coord(c) - pts[b].coord(c)) * dir.u[static_cast<size_t>(c)];
      out.min_abs_projection = std::min(out.min_abs_projection, std::fabs(dot));
      ++out.pairs;
    }
  }
  if (pts.size() < 2) out.min_abs_projection = dir.rho;
  out.pass = out.min_abs_projection >= out.rho;
  return out;
}

OneChain line_fill(const ZeroCycle& p) {
  if (p.n() != 1 && !p.empty())
    throw DimensionMismatch("line_fill requires ambient dimension 1");
  require_chi_zero(p, "line_fill");
  OneChain out;
  out.n = 1;
  out.mode = p.mode();
  Rat gamma = 0;
  const Point* prev = nullptr;
  for (const auto& [pt, w] : p.atoms()) {
    if (prev != nullptr && gamma != 0)
      out.segments.push_back(Segment{*prev, pt, gamma});
    gamma -= w;
    prev = &pt;
  }
  return out;
}

OneChain line_fill(const GridCycle& p) { return line_fill(p.to_cycle()); }

double sandwich_constant(int n) {
  if (n <= 1) return 3.0;
  return 2.0 * std::sqrt(2.0) * std::pow(5.0, n - 1) * std::pow(3.0, n);
}

SandwichReport verify_92(const GridCycle& p, double tol) {
  SandwichReport rep;
  rep.c_n = sandwich_constant(p.spec.n);
  rep.m = to_double(p.mass());
  ZeroCycle cyc = p.to_cycle();
  rep.g = cyc.empty() ? 0.0 : gnorm(cyc).value;
  double sqrt_n = std::sqrt(static_cast<double>(p.spec.n));
  double k2n = std::pow(static_cast<double>(p.spec.k), 2 * p.spec.n);
  rep.left_slack = rep.m - rep.g / sqrt_n;
  rep.right_slack = rep.c_n * k2n * rep.g - rep.m;
  double scale = std::max(1.0, rep.m);
  rep.pass = rep.left_slack >= -tol * scale && rep.right_slack >= -tol * scale;
  return rep;
}

}  // namespace flatcycle
