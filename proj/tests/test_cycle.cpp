#include <doctest.h>

#include "flatcycle/generators.hpp"
#include "oracles.hpp"

using namespace flatcycle;
using testing::dipole_1d;

namespace {
Point pt1(double x) { return Point({rat_of_double(x)}); }
Point pt2(double x, double y) {
  return Point({rat_of_double(x), rat_of_double(y)});
}
}  // namespace

TEST_CASE("make_cycle basics") {
  ZeroCycle empty = make_cycle(1, {}, Mode::Rational);
  CHECK(empty.empty());
  CHECK(empty.mass() == 0);

  // cancelling atoms at the same point vanish
  ZeroCycle cancel = make_cycle(
      1, {{pt1(0.5), Rat(1)}, {pt1(0.5), Rat(-1)}}, Mode::Rational);
  CHECK(cancel.empty());

  ZeroCycle dipole = dipole_1d(Rat(-1), Rat(1));
  CHECK(dipole.size() == 2);
  CHECK(dipole.mass() == 2);
  CHECK(dipole.chi() == 0);
}

TEST_CASE("make_cycle errors") {
  CHECK_THROWS_AS(make_cycle(1, {{pt1(0.5), Rat(1)}}, Mode::Rational),
                  ChiNonZero);
  CHECK_THROWS_AS(
      make_cycle(1, {{pt1(1.5), Rat(1)}, {pt1(0), Rat(-1)}}, Mode::Rational),
      OutOfCube);
  CHECK_THROWS_AS(
      make_cycle(2, {{pt1(0.5), Rat(1)}, {pt1(0), Rat(-1)}}, Mode::Rational),
      DimensionMismatch);
  // float mode tolerates a relative chi imbalance of 1e-12
  CHECK_NOTHROW(make_cycle(
      1, {{pt1(0.5), rat_of_double(1.0)}, {pt1(0), rat_of_double(-1.0 + 1e-13)}},
      Mode::Float));
  CHECK_THROWS_AS(
      make_cycle(1, {{pt1(0.5), rat_of_double(1.0)},
                     {pt1(0), rat_of_double(-1.0 + 1e-9)}},
                  Mode::Float),
      ChiNonZero);
}

TEST_CASE("embed_free") {
  // single weighted point: [[x]] - [[0]]
  ZeroCycle one = embed_free(1, {{pt1(0.25), Rat(1)}});
  CHECK(one.size() == 2);
  CHECK(one.atoms().at(pt1(0.25)) == 1);
  CHECK(one.atoms().at(pt1(0)) == -1);

  CHECK(embed_free(2, {}).empty());

  // weights summing to zero leave no origin term
  ZeroCycle two = embed_free(1, {{pt1(0.5), Rat(1)}, {pt1(-0.5), Rat(-1)}});
  CHECK(two.size() == 2);
  CHECK(two.atoms().count(pt1(0)) == 0);
}

TEST_CASE("chi and mass") {
  ZeroCycle zero = make_measure(1, {}, Mode::Rational);
  CHECK(chi(zero) == 0);
  CHECK(mass(zero) == 0);

  ZeroCycle single = make_measure(1, {{pt1(0.5), Rat(3)}}, Mode::Rational);
  CHECK(chi(single) == 3);
  CHECK(mass(single) == 3);

  ZeroCycle tri = make_measure(
      2, {{pt2(0.1, 0.1), Rat(2)}, {pt2(0.2, 0), Rat(-1)}, {pt2(0, 0.2), Rat(-1)}},
      Mode::Rational);
  CHECK(mass(tri) == 4);
  CHECK(chi(tri) == 0);
}

TEST_CASE("combine") {
  ZeroCycle t = dipole_1d(Rat(0), Rat(1, 2));
  CHECK(combine(1, t, -1, t).empty());

  ZeroCycle doubled = combine(2, embed_free(1, {{pt1(0.25), Rat(1)}}), 0,
                              ZeroCycle(1, Mode::Rational));
  CHECK(doubled.atoms().at(pt1(0.25)) == 2);
  CHECK(doubled.atoms().at(pt1(0)) == -2);

  // telescoping: ([[x]]-[[0]]) + ([[0]]-[[y]]) = [[x]]-[[y]]
  ZeroCycle a = make_cycle(1, {{pt1(0.5), Rat(1)}, {pt1(0), Rat(-1)}},
                           Mode::Rational);
  ZeroCycle b = make_cycle(1, {{pt1(0), Rat(1)}, {pt1(-0.5), Rat(-1)}},
                           Mode::Rational);
  ZeroCycle sum = combine(1, a, 1, b);
  CHECK(sum.size() == 2);
  CHECK(sum.atoms().at(pt1(0.5)) == 1);
  CHECK(sum.atoms().at(pt1(-0.5)) == -1);
}

TEST_CASE("combine mass triangle inequality") {
  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    ZeroCycle t1 = gen_random_cycle(2, 5, rng);
    ZeroCycle t2 = gen_random_cycle(2, 4, rng);
    Rat alpha = rat_make((i % 7) - 3, 2);
    Rat beta = rat_make((i % 5) - 2, 3);
    Rat lhs = combine(alpha, t1, beta, t2).mass();
    Rat rhs = rat_abs(alpha) * t1.mass() + rat_abs(beta) * t2.mass();
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("clamp") {
  Point p = clamp(pt2(1.5, 0));
  CHECK(p == pt2(1, 0));
  CHECK(clamp(pt2(0.3, -0.7)) == pt2(0.3, -0.7));
  CHECK(clamp(pt2(-2, -2)) == pt2(-1, -1));

  // idempotent and 1-Lipschitz per coordinate
  Rng rng(11);
  std::uniform_real_distribution<double> d(-3, 3);
  for (int i = 0; i < 100; ++i) {
    Point a = pt2(d(rng), d(rng));
    Point b = pt2(d(rng), d(rng));
    CHECK(clamp(clamp(a)) == clamp(a));
    for (int c = 0; c < 2; ++c) {
      double moved = std::fabs(clamp(a).coord(c) - clamp(b).coord(c));
      double orig = std::fabs(a.coord(c) - b.coord(c));
      CHECK(moved <= orig + 1e-15);
    }
  }
}

TEST_CASE("boundary") {
  OneChain single;
  single.n = 1;
  single.segments.push_back(Segment{pt1(-0.5), pt1(0.5), Rat(1)});
  ZeroCycle b = boundary(single);
  CHECK(b.atoms().at(pt1(0.5)) == 1);
  CHECK(b.atoms().at(pt1(-0.5)) == -1);

  CHECK(boundary(OneChain{}).empty());

  // closed triangle telescopes to zero
  OneChain loop;
  loop.n = 2;
  Point a = pt2(0, 0), c = pt2(0.5, 0), e = pt2(0, 0.5);
  loop.segments = {Segment{a, c, Rat(1)}, Segment{c, e, Rat(1)},
                   Segment{e, a, Rat(1)}};
  CHECK(boundary(loop).empty());

  OneChain outside;
  outside.n = 1;
  outside.segments.push_back(Segment{pt1(0), pt1(1.5), Rat(1)});
  CHECK_THROWS_AS(boundary(outside), OutOfCube);
}

TEST_CASE("cone") {
  ZeroCycle t = make_cycle(1, {{pt1(0.5), Rat(1)}, {pt1(0), Rat(-1)}},
                           Mode::Rational);
  OneChain c = cone(t, pt1(0));
  CHECK(c.segments.size() == 1);  // the vertex atom is skipped
  CHECK(boundary(c) == t);
  CHECK(c.mass() == doctest::Approx(0.5));

  CHECK(cone(ZeroCycle(2, Mode::Rational), pt2(0, 0)).segments.empty());

  ZeroCycle d = dipole_1d(Rat(-1), Rat(1));
  OneChain cd = cone(d, pt1(0));
  CHECK(cd.segments.size() == 2);
  CHECK(boundary(cd) == d);
  CHECK(cd.mass() == doctest::Approx(2.0));

  ZeroCycle unbalanced = make_measure(1, {{pt1(0.5), Rat(1)}}, Mode::Rational);
  CHECK_THROWS_AS(cone(unbalanced, pt1(0)), ChiNonZero);
}

TEST_CASE("cone properties on random cycles") {
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    int n = 1 + (i % 3);
    ZeroCycle t = gen_random_cycle(n, 4 + (i % 5), rng);
    Point vertex =
        i % 2 == 0 ? Point(std::vector<Rat>(static_cast<size_t>(n), Rat(0)))
                   : t.atoms().begin()->first;
    OneChain c = cone(t, vertex);
    CHECK(boundary(c) == t);  // exact in rational mode
    CHECK(chi(boundary(c)) == 0);
    double reach = 0.0;
    for (const auto& [p, w] : t.atoms())
      reach = std::max(reach, dist(p, vertex));
    CHECK(c.mass() <= reach * to_double(t.mass()) + 1e-12);
  }
}
