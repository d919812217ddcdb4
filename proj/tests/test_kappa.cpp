#include <doctest.h>

#include <cmath>

#include "flatcycle/generators.hpp"
#include "flatcycle/kappa.hpp"
#include "oracles.hpp"

using namespace flatcycle;
using testing::dipole_1d;

TEST_CASE("kappa vanishes at and above the norm") {
  ZeroCycle t = dipole_1d(Rat(-1, 2), Rat(1, 2));  // G = 1
  KappaEstimate est = kappa(t, 1.0);
  CHECK(est.value <= 1e-9);
  CHECK(est.witness.empty());

  KappaEstimate zero = kappa(ZeroCycle(1, Mode::Rational), 0.5);
  CHECK(zero.value == 0.0);

  CHECK_THROWS_AS(kappa(t, 0.0), BadEps);
}

TEST_CASE("kappa on the unit dipole matches the parametric oracle") {
  // G = 2; the best witness at eps=1 is half the dipole, mass 1
  ZeroCycle t = dipole_1d(Rat(-1), Rat(1));
  KappaEstimate est = kappa(t, 1.0);
  CHECK(est.value == doctest::Approx(1.0).epsilon(1e-7));
  REQUIRE(est.witness.size() == 2);
  CHECK(to_double(est.witness.atoms().at(Point({Rat(1)}))) ==
        doctest::Approx(0.5).epsilon(1e-7));
  CHECK(est.witness_gdist <= 1.0 + 1e-7);

  // no better witness appears when the candidate support is refined by grids
  for (long k = 1; k <= 8; ++k) {
    KappaEstimate refined = kappa(t, 1.0, SupportPolicy::with_grid(k));
    CHECK(refined.value >= 1.0 - 1e-7);
    CHECK(refined.value <= 1.0 + 1e-7);
  }
}

TEST_CASE("kappa curve of the empty cycle is identically zero") {
  std::vector<KappaEstimate> curve =
      kappa_curve(ZeroCycle(2, Mode::Rational), {0.1, 0.5, 1.0});
  for (const KappaEstimate& est : curve) {
    CHECK(est.value == 0.0);
    CHECK(est.witness.empty());
  }
}

TEST_CASE("kappa curve of the dipole is the parametric line") {
  ZeroCycle t = dipole_1d(Rat(-1), Rat(1));
  std::vector<double> grid{0.5, 1.0, 1.5, 2.0, 2.5};
  std::vector<KappaEstimate> curve = kappa_curve(t, grid);
  std::vector<double> expect{1.5, 1.0, 0.5, 0.0, 0.0};
  for (size_t i = 0; i < grid.size(); ++i)
    CHECK(curve[i].value == doctest::Approx(expect[i]).epsilon(1e-7));
}

TEST_CASE("kappa curve of a harmonic truncation grows as eps shrinks") {
  ZeroCycle t = gen_harmonic(1, 4);
  std::vector<double> grid{0.2, 0.5, 1.0, 1.6};
  std::vector<KappaEstimate> curve = kappa_curve(t, grid);
  for (size_t i = 0; i + 1 < curve.size(); ++i)
    CHECK(curve[i].value >= curve[i + 1].value - 1e-9);
  CHECK(curve[0].value > 0.1);  // G(T_4) ≈ 1.42, so eps=0.2 forces real mass
  CHECK(curve.back().value <= 1e-7);
  for (const KappaEstimate& est : curve)
    CHECK(est.value <= to_double(t.mass()) + 1e-9);
}

TEST_CASE("kappa witnesses re-certify on random cycles") {
  Rng rng(67);
  for (int i = 0; i < 20; ++i) {
    int n = 1 + (i % 2);
    ZeroCycle t = gen_random_cycle(n, 5 + (i % 4), rng);
    double g = gnorm(t).value;
    double eps = 0.3 * g + 0.05;
    KappaEstimate est = kappa(t, eps);
    CHECK(est.witness.chi() == 0);
    ZeroCycle diff = combine(1, t, -1, est.witness);
    double d = diff.empty() ? 0.0 : gnorm(diff).value;
    CHECK(d <= eps + 1e-6);
    CHECK(est.value <= to_double(t.mass()) + 1e-9);
  }
}

TEST_CASE("verify_80 property report") {
  ZeroCycle t1 = dipole_1d(Rat(-1), Rat(1));
  ZeroCycle t2 = dipole_1d(Rat(0), Rat(1, 2));

  SUBCASE("lambda = 1 is the identity") {
    PropertyReport rep = verify_80(t1, t2, 0.5, 0.4, Rat(1));
    CHECK(rep.all_pass());
  }
  SUBCASE("lambda = 2 doubles both sides") {
    PropertyReport rep = verify_80(t1, t2, 0.5, 0.4, Rat(2));
    CHECK(rep.all_pass());
  }
  SUBCASE("opposite cycles: subadditivity right side nonnegative") {
    ZeroCycle neg = combine(-1, t1, 0, ZeroCycle(1, Mode::Rational));
    PropertyReport rep = verify_80(t1, neg, 0.3, 0.3, Rat(-3));
    CHECK(rep.all_pass());
  }
}

TEST_CASE("beckmann on the 1d dipole uses the unique grid path") {
  ZeroCycle t = dipole_1d(Rat(-1), Rat(1));
  BeckmannResult r = beckmann(t, GridSpec{1, 1});
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.gnorm_snapped == doctest::Approx(2.0).epsilon(1e-12));
  REQUIRE(r.field.flow.size() == 2);
  CHECK(r.field.flow.at({{-1}, 0}) == 1);
  CHECK(r.field.flow.at({{0}, 0}) == 1);
  CHECK(divergence(r.field) == r.snapped.theta);
}

TEST_CASE("beckmann diagonal dipole pays the l1 premium") {
  ZeroCycle t = make_cycle(2,
                           {{Point({Rat(1), Rat(1)}), Rat(1)},
                            {Point({Rat(-1), Rat(-1)}), Rat(-1)}},
                           Mode::Rational);
  BeckmannResult r = beckmann(t, GridSpec{2, 1});
  CHECK(r.value == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r.gnorm_snapped == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.value <= std::sqrt(2.0) * r.gnorm_snapped * (1 + 1e-9));
  CHECK(divergence(r.field) == r.snapped.theta);
}

TEST_CASE("beckmann of the empty cycle") {
  BeckmannResult r = beckmann(ZeroCycle(2, Mode::Rational), GridSpec{2, 2});
  CHECK(r.value == 0.0);
  CHECK(r.field.flow.empty());
}

TEST_CASE("beckmann sandwich on random instances") {
  Rng rng(71);
  for (int i = 0; i < 40; ++i) {
    int n = 1 + (i % 3);
    long k = 1 + (i % 4);
    ZeroCycle t = gen_random_cycle(n, 3 + (i % 6), rng);
    BeckmannResult r = beckmann(t, GridSpec{n, k});
    double sn = std::sqrt(static_cast<double>(n));
    CHECK(r.gnorm_snapped <= r.value + 1e-9 * (1 + r.value));
    CHECK(r.value <= sn * r.gnorm_snapped * (1 + 1e-9) + 1e-12);
    CHECK(divergence(r.field) == r.snapped.theta);
  }
}

TEST_CASE("osc1 basics") {
  GridVectorField zero;
  zero.spec = GridSpec{1, 2};
  ModulusCurve zc = osc1(zero, {0.0, 0.5, 1.0});
  for (const auto& [r, v] : zc.samples) CHECK(v == 0.0);

  // one edge of flow 1; shifting by a full cell makes the supports disjoint
  GridVectorField one;
  one.spec = GridSpec{1, 2};
  one.flow[{{0}, 0}] = 1;
  ModulusCurve oc = osc1(one, {0.0, 0.5, 1.0});
  CHECK(oc.samples[0].second == 0.0);
  CHECK(oc.samples[1].second == doctest::Approx(1.0));  // 2 * (1/k), k = 2
  CHECK(oc.samples[2].second == doctest::Approx(1.0));
}

TEST_CASE("osc1 monotone and subadditive on divergence fields") {
  Rng rng(73);
  for (int i = 0; i < 10; ++i) {
    int n = 1 + (i % 3);
    long k = 2 + (i % 2);
    ZeroCycle t = gen_random_cycle(n, 4, rng);
    GridVectorField eta = beckmann(t, GridSpec{n, k}).field;
    if (eta.flow.empty()) continue;
    double step = 2.0 * std::sqrt(static_cast<double>(n)) / static_cast<double>(k);
    std::vector<double> rs{step, 2 * step, 3 * step, 4 * step};
    ModulusCurve c = osc1(eta, rs);
    for (size_t a = 0; a + 1 < c.samples.size(); ++a)
      CHECK(c.samples[a].second <= c.samples[a + 1].second + 1e-12);
    // r1 + r2 = r3 triples present in the sample set
    CHECK(c.samples[1].second <= 2 * c.samples[0].second + 1e-9);
    CHECK(c.samples[2].second <=
          c.samples[0].second + c.samples[1].second + 1e-9);
    CHECK(c.samples[3].second <= 2 * c.samples[1].second + 1e-9);
  }
}
