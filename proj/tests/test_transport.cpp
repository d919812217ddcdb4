#include <doctest.h>

#include "flatcycle/generators.hpp"
#include "flatcycle/transport.hpp"
#include "oracles.hpp"

using namespace flatcycle;
using testing::dipole_1d;
using testing::oracle_w1;

namespace {
Point pt1(double x) { return Point({rat_of_double(x)}); }
ZeroCycle three_atoms_1d() {
  // 2[[1]] - [[0]] - [[-1]]
  return make_cycle(1,
                    {{Point({Rat(1)}), Rat(2)},
                     {Point({Rat(0)}), Rat(-1)},
                     {Point({Rat(-1)}), Rat(-1)}},
                    Mode::Rational);
}
}  // namespace

TEST_CASE("gnorm forced single-pair matching") {
  ZeroCycle t = make_cycle(2,
                           {{Point({Rat(1, 2), Rat(0)}), Rat(1)},
                            {Point({Rat(0), Rat(0)}), Rat(-1)}},
                           Mode::Rational);
  TransportSolution sol = gnorm(t);
  CHECK(sol.value == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(sol.plan.size() == 1);
  CHECK(sol.plan[0].flow == 1);
  // the potential differential along the pair equals the distance
  REQUIRE(sol.potentials.size() == 2);
  CHECK(std::fabs(sol.potentials[1].value - sol.potentials[0].value) ==
        doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("gnorm three atoms vs oracle and closed form") {
  ZeroCycle t = three_atoms_1d();
  TransportSolution sol = gnorm(t);
  CHECK(sol.value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(oracle_w1(t) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(gnorm_1d(t) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(certify(t, sol).all_pass());
}

TEST_CASE("gnorm empty") {
  TransportSolution sol = gnorm(ZeroCycle(3, Mode::Rational));
  CHECK(sol.value == 0.0);
  CHECK(sol.plan.empty());
}

TEST_CASE("gnorm rejects unbalanced input") {
  ZeroCycle bad = make_measure(1, {{pt1(0.5), Rat(2)}}, Mode::Rational);
  CHECK_THROWS_AS(gnorm(bad), ChiNonZero);
}

TEST_CASE("certify flags injected faults") {
  ZeroCycle t = dipole_1d(Rat(-1, 2), Rat(1, 2));
  TransportSolution sol = gnorm(t);
  CHECK(certify(t, sol).all_pass());

  SUBCASE("perturbed flow breaks marginals") {
    TransportSolution broken = sol;
    broken.plan[0].flow += Rat(1, 10);
    CertifyReport rep = certify(t, broken);
    CHECK_FALSE(rep.all_pass());
    bool marginal_failed = false;
    for (const CertifyCheck& c : rep.checks)
      if (c.name == "plan_marginals" && !c.pass) marginal_failed = true;
    CHECK(marginal_failed);
  }

  SUBCASE("scaled potentials break the Lipschitz check") {
    TransportSolution broken = sol;
    for (Potential& p : broken.potentials) p.value *= 2.0;
    CertifyReport rep = certify(t, broken);
    bool lipschitz_failed = false;
    for (const CertifyCheck& c : rep.checks)
      if (c.name == "potential_lipschitz" && !c.pass) lipschitz_failed = true;
    CHECK(lipschitz_failed);
  }
}

TEST_CASE("gnorm_1d closed form") {
  CHECK(gnorm_1d(dipole_1d(Rat(-1), Rat(1))) == doctest::Approx(2.0));

  ZeroCycle t = make_cycle(1,
                           {{Point({Rat(-1)}), Rat(1)},
                            {Point({Rat(0)}), Rat(-2)},
                            {Point({Rat(1)}), Rat(1)}},
                           Mode::Rational);
  CHECK(gnorm_1d_exact(t) == 2);
  CHECK(oracle_w1(t) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK(gnorm_1d_exact(three_atoms_1d()) == 3);
  Rng rng(1);
  CHECK_THROWS_AS(gnorm_1d(gen_random_cycle(2, 4, rng)), DimensionMismatch);
}

TEST_CASE("gnorm agrees with the unit-matching oracle on small cycles") {
  Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    int n = 1 + (i % 3);
    // integer weights so the oracle's unit decomposition stays tiny
    std::vector<std::pair<Point, Rat>> atoms;
    std::uniform_int_distribution<long> coord(-8, 8);
    int units = 2 + (i % 3);
    for (int u = 0; u < units; ++u) {
      std::vector<Rat> cp, cm;
      for (int c = 0; c < n; ++c) {
        cp.push_back(rat_make(coord(rng), 8));
        cm.push_back(rat_make(coord(rng), 8));
      }
      atoms.emplace_back(Point(cp), Rat(1));
      atoms.emplace_back(Point(cm), Rat(-1));
    }
    ZeroCycle t = make_cycle(n, atoms, Mode::Rational);
    if (t.empty()) continue;
    CHECK(gnorm(t).value == doctest::Approx(oracle_w1(t)).epsilon(1e-9));
  }
}

TEST_CASE("gnorm norm axioms within tolerance") {
  Rng rng(37);
  for (int i = 0; i < 20; ++i) {
    int n = 1 + (i % 2);
    ZeroCycle t1 = gen_random_cycle(n, 5, rng);
    ZeroCycle t2 = gen_random_cycle(n, 4, rng);
    double g1 = gnorm(t1).value;
    double g2 = gnorm(t2).value;
    ZeroCycle sum = combine(1, t1, 1, t2);
    double gs = sum.empty() ? 0.0 : gnorm(sum).value;
    CHECK(gs <= g1 + g2 + 1e-9);

    // homogeneity: exact flows scale, doubles stay within 1e-12 for dyadic λ
    ZeroCycle doubled = combine(2, t1, 0, ZeroCycle(n, Mode::Rational));
    CHECK(gnorm(doubled).value == doctest::Approx(2.0 * g1).epsilon(1e-12));
    ZeroCycle neg = combine(-1, t1, 0, ZeroCycle(n, Mode::Rational));
    CHECK(gnorm(neg).value == doctest::Approx(g1).epsilon(1e-12));
    ZeroCycle tripled = combine(3, t1, 0, ZeroCycle(n, Mode::Rational));
    CHECK(gnorm(tripled).value == doctest::Approx(3.0 * g1).epsilon(1e-9));
  }
}

TEST_CASE("gnorm matches the 1d closed form on random lines") {
  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    ZeroCycle t = gen_random_cycle(1, 3 + (i % 10), rng);
    CHECK(std::fabs(gnorm(t).value - gnorm_1d(t)) <= 1e-12);
  }
}

TEST_CASE("cone gives a feasible filling: gnorm <= cone mass") {
  Rng rng(43);
  for (int i = 0; i < 30; ++i) {
    int n = 1 + (i % 3);
    ZeroCycle t = gen_random_cycle(n, 5, rng);
    Point vertex(std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    CHECK(gnorm(t).value <= cone(t, vertex).mass() + 1e-9);
  }
}

TEST_CASE("isoperimetric check") {
  ZeroCycle t = make_cycle(1, {{pt1(0.5), Rat(1)}, {pt1(0), Rat(-1)}},
                           Mode::Rational);
  IsoperimetricCheck chk = isoperimetric_check(t, pt1(0));
  CHECK(chk.pass);
  CHECK(chk.gnorm_value == doctest::Approx(0.5));
  CHECK(chk.cone_bound == doctest::Approx(1.0));

  IsoperimetricCheck zero = isoperimetric_check(ZeroCycle(1, Mode::Rational), pt1(0));
  CHECK(zero.pass);
  CHECK(zero.gnorm_value == 0.0);

  Rng rng(47);
  ZeroCycle rnd = gen_random_cycle(2, 10, rng);
  CHECK(isoperimetric_check(rnd, Point({Rat(0), Rat(0)})).pass);
}

TEST_CASE("plan_to_chain") {
  ZeroCycle t = dipole_1d(Rat(-1, 2), Rat(1, 2));
  TransportSolution sol = gnorm(t);
  OneChain chain = plan_to_chain(sol, 1);
  CHECK(chain.segments.size() == 1);
  CHECK(boundary(chain) == t);
  CHECK(chain.mass() == doctest::Approx(sol.value).epsilon(1e-12));

  CHECK(plan_to_chain(TransportSolution{}, 2).segments.empty());

  // 2x2 plan round-trips through the boundary operator
  ZeroCycle sq = make_cycle(2,
                            {{Point({Rat(1, 2), Rat(1, 2)}), Rat(1)},
                             {Point({Rat(-1, 2), Rat(-1, 2)}), Rat(1)},
                             {Point({Rat(1, 2), Rat(-1, 2)}), Rat(-1)},
                             {Point({Rat(-1, 2), Rat(1, 2)}), Rat(-1)}},
                            Mode::Rational);
  TransportSolution ssol = gnorm(sq);
  OneChain schain = plan_to_chain(ssol, 2);
  CHECK(schain.segments.size() <= 4);
  CHECK(boundary(schain) == sq);
  CHECK(schain.mass() == doctest::Approx(ssol.value).epsilon(1e-12));
}

TEST_CASE("float mode cycles solve with exact internal balance") {
  ZeroCycle t = make_cycle(
      2,
      {{Point::of_doubles({0.25, 0.1}), rat_of_double(1.5)},
       {Point::of_doubles({-0.5, 0.3}), rat_of_double(-1.5 + 1e-13)}},
      Mode::Float);
  TransportSolution sol = gnorm(t);
  CHECK(certify(t, sol).all_pass());
}
