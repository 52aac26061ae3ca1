#include <cmath>

#include "doctest.h"
#include "gevreykit/sectors.hpp"
#include "oracles.hpp"

using namespace gevreykit;

TEST_CASE("sector opening") {
  CHECK(opening(Sector(-M_PI_2, M_PI_2)) == doctest::Approx(M_PI));
  CHECK(opening(Sector(0.0, 0.1)) == doctest::Approx(0.1));
  CHECK(opening(Sector(-M_PI, M_PI)) == doctest::Approx(2.0 * M_PI));
  CHECK_THROWS_AS(Sector(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(Sector(0.0, 1.0, 2.0, 1.0), std::domain_error);
}

TEST_CASE("sector membership with radial window") {
  Sector s(-M_PI_4, M_PI_4, 1.0, 10.0);
  CHECK(s.contains({2.0, 0.0}));
  CHECK(s.contains({1.0, 0.0}));       // |z| = r_min stays inside
  CHECK(!s.contains({0.5, 0.0}));      // below the sigma exclusion
  CHECK(!s.contains({11.0, 0.0}));
  CHECK(!s.contains({0.0, 2.0}));      // arg = pi/2
  // opening beyond 2 pi accepts every argument
  Sector wide(-2.0 * M_PI, 2.0 * M_PI + 0.1);
  CHECK(wide.contains({-1.0, 0.0}));
  CHECK(wide.contains({0.0, -3.0}));
}

TEST_CASE("criticality classification") {
  CHECK(criticality(Sector(-M_PI_2, M_PI_2), 1.0) == Criticality::critical);
  CHECK(criticality(Sector(-M_PI_2 - 0.1, M_PI_2 + 0.1), 1.0) ==
        Criticality::supercritical);
  CHECK(criticality(Sector(0.0, M_PI_4), 2.0) == Criticality::subcritical);
  // tolerance window of 1e-12 radians
  CHECK(criticality(Sector(0.0, M_PI + 1e-14), 1.0) == Criticality::critical);
  CHECK_THROWS_AS(criticality(Sector(0.0, 1.0), 0.0), std::domain_error);
  CHECK_THROWS_AS(criticality(Sector(0.0, 1.0), -2.0), std::domain_error);
}

TEST_CASE("half-plane membership is strict") {
  HalfPlane h0(0.0, 1.0);
  CHECK(halfplane_contains(h0, {0.0, 0.0}));
  CHECK(!halfplane_contains(h0, {1.0, 0.0}));  // boundary point
  CHECK(h0.on_boundary({1.0, 0.0}));
  CHECK(h0.on_boundary({1.0, 5.0}));

  HalfPlane h1(M_PI_4, 1.0);
  CHECK(halfplane_contains(h1, {0.0, 1.0}));  // support = -sin(pi/4) < 1
  CHECK_THROWS_AS(HalfPlane(0.0, 0.0), std::domain_error);
}

TEST_CASE("t-plane regions of the main lemma") {
  auto tr = t_regions(M_PI / 6.0, 1.0);
  CHECK(tr.apex == doctest::Approx(2.0).epsilon(1e-14));

  CHECK(t_regions(M_PI_4, 1.0).in_s1({0.0, 0.0}));
  CHECK(t_regions(0.3, 2.5).in_s1({0.0, 0.0}));

  auto tq = t_regions(M_PI_4, 1.0);
  CHECK(tq.in_right({3.0, 0.0}));
  CHECK(!tq.in_s2({3.0, 0.0}));

  CHECK_THROWS_AS(t_regions(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(t_regions(M_PI_2, 1.0), std::domain_error);
  CHECK_THROWS_AS(t_regions(0.5, -1.0), std::domain_error);
}

TEST_CASE("region membership consistency and symmetry") {
  oracles::Lcg rng(20260809);
  for (int trial = 0; trial < 40; ++trial) {
    double delta = rng.uniform(0.05, M_PI_2 - 0.05);
    double a = rng.uniform(0.2, 4.0);
    auto tr = t_regions(delta, a);
    for (int i = 0; i < 50; ++i) {
      Complex t{rng.uniform(-8.0, 8.0), rng.uniform(-8.0, 8.0)};
      bool up = tr.upper.contains(t);
      bool lo = tr.lower.contains(t);
      CHECK(tr.in_s1(t) == (up && lo));
      CHECK(tr.in_s2(t) == (up || lo));
      CHECK(tr.in_left(t) == tr.in_s1(t));
      // conjugation swaps the two half-planes
      CHECK(tr.upper.contains(std::conj(t)) == lo);
      CHECK(tr.lower.contains(std::conj(t)) == up);
      // S_r sits outside the closure of S_2
      if (tr.in_right(t)) CHECK(!tr.in_s2(t));
    }
  }
}

TEST_CASE("apex decreases in delta and blows up at 0") {
  double a = 1.7;
  double prev = t_regions(1e-8, a).apex;
  CHECK(prev > 1e7);  // a / sin(delta) -> inf as delta -> 0
  for (double d = 0.1; d < M_PI_2; d += 0.1) {
    double apex = t_regions(d, a).apex;
    CHECK(apex < prev);
    prev = apex;
  }
}

TEST_CASE("right sectors are nested in delta") {
  oracles::Lcg rng(77);
  double a = 1.0;
  auto big = t_regions(0.9, a);     // delta'
  auto small = t_regions(0.4, a);   // delta''
  for (int i = 0; i < 500; ++i) {
    Complex t{rng.uniform(-10.0, 20.0), rng.uniform(-12.0, 12.0)};
    if (small.in_right(t)) CHECK(big.in_right(t));
  }
}
