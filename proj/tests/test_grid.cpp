#include <doctest.h>

#include <cmath>

#include "flatcycle/generators.hpp"
#include "flatcycle/grid.hpp"
#include "oracles.hpp"

using namespace flatcycle;

TEST_CASE("grid points") {
  std::vector<Point> pts = grid_points(GridSpec{1, 1});
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == Point({Rat(-1)}));
  CHECK(pts[1] == Point({Rat(0)}));
  CHECK(pts[2] == Point({Rat(1)}));

  CHECK(grid_points(GridSpec{2, 1}).size() == 9);
  CHECK(grid_points(GridSpec{3, 2}).size() == 125);
  CHECK_THROWS_AS(grid_points(GridSpec{3, 2}, 100), SizeOverflow);
}

TEST_CASE("grid edges") {
  CHECK(grid_edges(GridSpec{1, 1}).size() == 2);
  CHECK(grid_edges(GridSpec{1, 3}).size() == 6);
  // count formula vs direct enumeration
  for (int n = 1; n <= 3; ++n)
    for (long k = 1; k <= 3; ++k) {
      GridSpec spec{n, k};
      CHECK(Int(grid_edges(spec).size()) == spec.num_edges());
    }
  CHECK(grid_edges(GridSpec{2, 1}).size() == 12);
}

TEST_CASE("snap") {
  GridSpec spec1{1, 1};
  ZeroCycle on_grid = make_cycle(
      1, {{Point({Rat(1)}), Rat(1)}, {Point({Rat(-1)}), Rat(-1)}},
      Mode::Rational);
  SnapResult r = snap(on_grid, spec1);
  CHECK(r.bound == 0.0);
  CHECK(r.snapped.to_cycle() == on_grid);

  // 0.4 snaps to 0 at k=1 (nearest integer multiple)
  ZeroCycle t = make_cycle(
      1, {{Point({rat_make(2, 5)}), Rat(1)}, {Point({Rat(-1)}), Rat(-1)}},
      Mode::Rational);
  SnapResult s = snap(t, spec1);
  CHECK(s.snapped.theta.count({0}) == 1);
  CHECK(s.bound == doctest::Approx(0.4));

  // tie at half a cell goes toward -inf
  ZeroCycle tie = make_cycle(
      1, {{Point({rat_make(1, 2)}), Rat(1)}, {Point({Rat(-1)}), Rat(-1)}},
      Mode::Rational);
  CHECK(snap(tie, spec1).snapped.theta.count({0}) == 1);

  GridSpec spec2{2, 2};
  ZeroCycle d = make_cycle(2,
                           {{Point({rat_make(3, 10), rat_make(3, 10)}), Rat(1)},
                            {Point({rat_make(-3, 10), rat_make(-3, 10)}), Rat(-1)}},
                           Mode::Rational);
  SnapResult sd = snap(d, spec2);
  CHECK(sd.snapped.theta.count({1, 1}) == 1);   // (0.5, 0.5)
  CHECK(sd.snapped.theta.count({-1, -1}) == 1);
  CHECK(sd.bound == doctest::Approx(0.4 * std::sqrt(2.0)));
  // the bound certifies the transport distance to the snapped cycle
  ZeroCycle diff = combine(1, d, -1, sd.snapped.to_cycle());
  CHECK(gnorm(diff).value <= sd.bound + 1e-12);
}

TEST_CASE("snap is idempotent and bounded on random cycles") {
  Rng rng(53);
  for (int i = 0; i < 40; ++i) {
    int n = 1 + (i % 3);
    long k = 1 + (i % 4);
    GridSpec spec{n, k};
    ZeroCycle t = gen_random_cycle(n, 4 + (i % 6), rng);
    SnapResult first = snap(t, spec);
    SnapResult again = snap(first.snapped.to_cycle(), spec);
    CHECK(again.bound == 0.0);
    CHECK(again.snapped.theta == first.snapped.theta);
    double cap = to_double(t.mass()) * std::sqrt(static_cast<double>(n)) /
                 (2.0 * static_cast<double>(k));
    CHECK(first.bound <= cap + 1e-12);
    ZeroCycle diff = combine(1, t, -1, first.snapped.to_cycle());
    double g = diff.empty() ? 0.0 : gnorm(diff).value;
    CHECK(g <= first.bound + 1e-9);
  }
}

TEST_CASE("separating direction formulas") {
  SeparatingDirection d1 = separating_direction(GridSpec{1, 4});
  CHECK(d1.u == std::vector<double>{1.0});
  CHECK(d1.rho == doctest::Approx(0.25));

  SeparatingDirection d2 = separating_direction(GridSpec{2, 1});
  CHECK(d2.alpha_k == doctest::Approx(0.2));
  double norm = std::hypot(1.0, 0.2);
  CHECK(d2.u[0] == doctest::Approx(1.0 / norm));
  CHECK(d2.u[1] == doctest::Approx(0.2 / norm));
  CHECK(d2.rho == doctest::Approx(1.0 / (10.0 * std::sqrt(2.0))));

  // exhaustive pairwise check over all 36 pairs at n=2, k=1
  SeparationCheck chk = check_separation(GridSpec{2, 1});
  CHECK(chk.pairs == 36);
  CHECK(chk.pass);
  CHECK(chk.min_abs_projection == doctest::Approx(1.0 / std::sqrt(26.0)));
}

TEST_CASE("separating direction exhaustive sweep") {
  for (int n = 1; n <= 3; ++n)
    for (long k = 1; k <= 4; ++k) {
      SeparationCheck chk = check_separation(GridSpec{n, k});
      CAPTURE(n);
      CAPTURE(k);
      CHECK(chk.pass);
    }
}

TEST_CASE("line_fill") {
  ZeroCycle d = testing::dipole_1d(Rat(-1), Rat(1));
  OneChain fill = line_fill(d);
  REQUIRE(fill.segments.size() == 1);
  CHECK(fill.mass_exact() == 2);
  CHECK(boundary(fill) == d);

  ZeroCycle t = make_cycle(1,
                           {{Point({Rat(-1)}), Rat(1)},
                            {Point({Rat(0)}), Rat(-2)},
                            {Point({Rat(1)}), Rat(1)}},
                           Mode::Rational);
  OneChain ft = line_fill(t);
  REQUIRE(ft.segments.size() == 2);
  CHECK(ft.segments[0].coef == -1);
  CHECK(ft.segments[1].coef == 1);
  CHECK(ft.mass_exact() == 2);
  CHECK(boundary(ft) == t);

  CHECK(line_fill(ZeroCycle(1, Mode::Rational)).segments.empty());
}

TEST_CASE("line_fill mass equals the closed-form norm exactly") {
  Rng rng(59);
  for (int i = 0; i < 40; ++i) {
    ZeroCycle t = gen_random_cycle(1, 3 + (i % 8), rng);
    OneChain fill = line_fill(t);
    CHECK(boundary(fill) == t);
    CHECK(fill.mass_exact() == gnorm_1d_exact(t));
  }
}

TEST_CASE("mass/norm sandwich on explicit instances") {
  GridCycle p = make_grid_cycle(GridSpec{1, 1}, {{{1}, Rat(1)}, {{-1}, Rat(-1)}});
  SandwichReport rep = verify_92(p);
  CHECK(rep.g == doctest::Approx(2.0));
  CHECK(rep.m == doctest::Approx(2.0));
  CHECK(rep.c_n == 3.0);
  CHECK(rep.pass);  // 2/1 <= 2 <= 3*1*2

  GridCycle zero;
  zero.spec = GridSpec{2, 2};
  CHECK(verify_92(zero).pass);

  CHECK(sandwich_constant(1) == 3.0);
  CHECK(sandwich_constant(2) ==
        doctest::Approx(2.0 * std::sqrt(2.0) * 5.0 * 9.0));
}

TEST_CASE("mass/norm sandwich sweep") {
  Rng rng(61);
  for (int i = 0; i < 120; ++i) {
    int n = 1 + (i % 3);
    long k = 1 + (i % 3);
    GridCycle p = gen_grid_random(GridSpec{n, k}, 3 + (i % 8), 3, rng);
    SandwichReport rep = verify_92(p);
    CAPTURE(n);
    CAPTURE(k);
    CHECK(rep.pass);
  }
}

TEST_CASE("grid cycle validation") {
  CHECK_THROWS_AS(
      make_grid_cycle(GridSpec{1, 1}, {{{0}, Rat(1)}}), ChiNonZero);
  CHECK_THROWS_AS(
      make_grid_cycle(GridSpec{1, 1}, {{{2}, Rat(1)}, {{0}, Rat(-1)}}),
      OutOfCube);
  CHECK_NOTHROW(make_grid_measure(GridSpec{1, 1}, {{{0}, Rat(1)}}));
}
