#include <cmath>

#include "doctest.h"
#include "gevreykit/mp.hpp"
#include "gevreykit/series.hpp"
#include "gevreykit/stirling.hpp"
#include "oracles.hpp"

using namespace gevreykit;

TEST_CASE("binet F values and symmetry") {
  // removable singularity
  CHECK(binet_F({0.0, 0.0}).real() == doctest::Approx(1.0 / 12.0));
  CHECK(binet_F({1e-9, 0.0}).real() ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-12));

  // direct arithmetic at t = 1: (1/2 - 1 + 1/(e-1))
  double f1 = 0.5 - 1.0 + 1.0 / std::expm1(1.0);
  CHECK(binet_F({1.0, 0.0}).real() == doctest::Approx(f1).epsilon(1e-15));
  CHECK(f1 == doctest::Approx(0.0819767).epsilon(1e-5));

  // evenness F(-t) = F(t)
  Complex t{1.3, 0.2};
  CHECK(std::abs(binet_F(-t) - binet_F(t)) < 1e-14);

  // series/closed-form agreement across the switch radius
  for (double r : {0.2499, 0.2501}) {
    Complex a = binet_F({r, 0.05});
    CHECK(std::isfinite(a.real()));
  }
  Complex inner = binet_F({0.2499, 0.0});
  Complex outer = binet_F({0.2501, 0.0});
  CHECK(std::abs(inner - outer) < 1e-6);

  CHECK_THROWS_AS(binet_F({0.0, 2.0 * M_PI}), std::domain_error);
  CHECK_THROWS_AS(binet_F({0.0, -4.0 * M_PI}), std::domain_error);
}

TEST_CASE("binet P by quadrature") {
  // P(1) = 1 - log(2 pi)/2 via Gamma(1) = 1
  CHECK(binet_P({1.0, 0.0}).real() ==
        doctest::Approx(1.0 - 0.5 * std::log(2.0 * M_PI)).epsilon(1e-12));

  // decays like 1/(12 z)
  CHECK(std::abs(binet_P({50.0, 0.0})) < 2.0 * (1.0 / 12.0) / 50.0);

  // Schwarz reflection
  Complex z{3.0, 1.0};
  CHECK(std::abs(binet_P(std::conj(z)) - std::conj(binet_P(z))) < 1e-12);

  // rotation consistency on the overlap domain
  BinetConfig rot;
  rot.rotation = -0.3;
  for (Complex zz : {Complex{2.0, 0.5}, Complex{5.0, 2.0}}) {
    CHECK(std::abs(binet_P(zz) - binet_P(zz, rot)) < 1e-10);
  }

  CHECK_THROWS_AS(binet_P({-2.0, 0.0}), std::domain_error);
  BinetConfig bad;
  bad.rotation = 1.6;
  CHECK_THROWS_AS(binet_P({1.0, 0.0}, bad), std::domain_error);
}

TEST_CASE("high-precision quadrature agrees with the lngamma route") {
  using mp::Real;
  for (double zd : {2.0, 5.0, 10.0}) {
    Real z = Real::of(zd, 320);
    Real quad = mp::binet_P_quad(z, 320);
    Real ref = oracles::binet_P_lngamma(z, 320);
    Real err = abs(quad - ref);
    // both routes carry ~96 decimal digits; agreement far beyond double
    CHECK(err < abs(ref) * pow_si(Real::of(2L, 320), -280));
  }
  // the double-precision path is consistent with both
  CHECK(binet_P({5.0, 0.0}).real() ==
        doctest::Approx(mp::binet_P_quad(Real::of(5.0, 320), 320).to_double())
            .epsilon(1e-13));
}

TEST_CASE("K(z) branches") {
  CHECK(K_of_z({1.0, 0.0}) == 1.0);
  CHECK(K_of_z(std::polar(2.0, M_PI / 3.0)) ==
        doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
  // continuity at pi/4: both branches give 1
  CHECK(K_of_z(std::polar(1.0, M_PI_4 - 1e-9)) == 1.0);
  CHECK(K_of_z(std::polar(1.0, M_PI_4 + 1e-9)) ==
        doctest::Approx(1.0).epsilon(1e-6));
  // monotone increase on (pi/4, pi/2)
  double prev = 1.0;
  for (double a = M_PI_4 + 0.01; a < M_PI_2; a += 0.01) {
    double k = K_of_z(std::polar(1.0, a));
    CHECK(k >= prev);
    prev = k;
  }
  CHECK_THROWS_AS(K_of_z({0.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(K_of_z({-1.0, 0.1}), std::domain_error);
  CHECK_THROWS_AS(K_of_z({0.0, 0.0}), std::domain_error);
}

TEST_CASE("K stays below 1/delta toward the boundary rays") {
  // At arg z = pi/2 - delta the constant K(z) = 1/sin(2 delta) is dominated
  // by 1/delta, so the estimate family fits a 1/delta-type profile.
  for (double delta = 0.01; delta <= M_PI_4; delta += 0.01) {
    double K = K_of_z(std::polar(3.0, M_PI_2 - delta));
    CHECK(K <= 1.0 / delta);
  }
}

TEST_CASE("log gamma from the Binet function") {
  // Gamma(1) = 1
  CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-12);

  // integer factorials: lnGamma(n) = ln((n-1)!)
  double fact = 1.0;
  for (int n = 2; n <= 20; ++n) {
    fact *= n - 1;
    CHECK(std::abs(log_gamma({static_cast<double>(n), 0.0}).real() -
                   std::log(fact)) < 1e-12);
    CHECK(std::abs(log_gamma({static_cast<double>(n), 0.0}).imag()) < 1e-12);
  }

  // Gamma(1/2) = sqrt(pi), reached through the recurrence
  Complex lg_half = log_gamma({2.5, 0.0}) - std::log(Complex{1.5, 0.0}) -
                    std::log(Complex{0.5, 0.0});
  CHECK(lg_half.real() == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-10));

  // recurrence lnGamma(z+1) - lnGamma(z) = ln z at 20 seeded points
  oracles::Lcg rng(314159);
  for (int i = 0; i < 20; ++i) {
    Complex z{rng.uniform(1.0, 10.0), rng.uniform(-2.0, 2.0)};
    Complex lhs = log_gamma(z + 1.0) - log_gamma(z);
    CHECK(std::abs(lhs - std::log(z)) < 1e-10);
  }
}

TEST_CASE("stirling estimate verification") {
  StirlingVerifyOptions opts;
  std::vector<Complex> grid = {{5.0, 0.0}};
  auto rep = verify_estimates_st(grid, 15, opts);
  CHECK(rep.pass);
  CHECK(rep.count(RowStatus::pass) == 16);

  std::vector<Complex> rotated = {std::polar(5.0, M_PI / 3.0)};
  auto rep2 = verify_estimates_st(rotated, 15, opts);
  CHECK(rep2.pass);

  // near the boundary K(z) blows up and dominates everything
  std::vector<Complex> edge = {std::polar(5.0, 1.57)};
  auto rep3 = verify_estimates_st(edge, 10, opts);
  CHECK(rep3.pass);

  // outside the right half-plane: skipped, not failed
  std::vector<Complex> outside = {{-1.0, 0.0}};
  auto rep4 = verify_estimates_st(outside, 5, opts);
  CHECK(rep4.pass);
  CHECK(rep4.count(RowStatus::skipped_outside) == 1);
}

TEST_CASE("optimal stirling truncation") {
  auto t10 = optimal_error_stirling({10.0, 0.0});
  CHECK(t10.n_opt == 30);

  auto t2 = optimal_error_stirling({2.0, 0.0});
  double pref = 2.0 * std::sqrt(4.0 * M_PI) / (4.0 * M_PI - 1.0);
  CHECK(t2.bound ==
        doctest::Approx(pref * std::exp(-4.0 * M_PI)).epsilon(1e-12));
  CHECK(t2.bound < 0.94891 * std::exp(-4.0 * M_PI));

  CHECK_THROWS_AS(optimal_error_stirling({0.1, 0.0}), std::domain_error);

  // brute-force argmin of the term bounds lands within one index
  long argmin = stirling_bound_argmin(10.0, 64);
  CHECK(argmin == 31);
  CHECK(std::labs(argmin - t10.n_opt) <= 1);
}

TEST_CASE("optimal truncation bound holds against the high-precision oracle") {
  using mp::Real;
  const mpfr_prec_t prec = 320;
  for (double zd : {5.0, 10.0}) {
    auto tr = optimal_error_stirling({zd, 0.0});
    Real z = Real::of(zd, prec);
    Real P = mp::binet_P_quad(z, prec);
    Real S = mp::stirling_partial_sum(z, static_cast<int>(tr.n_opt), prec);
    Real actual = abs(P - S);
    CHECK(actual.to_double() <= tr.bound * (1.0 + 1e-12));
  }
}

TEST_CASE("est_st bound is within factor 4 of the discrete minimum") {
  auto bern = bernoulli_numbers(130);
  for (double zd : {5.0, 10.0, 20.0}) {
    long argmin = stirling_bound_argmin(zd, 120);
    double log_min = bern[argmin + 1].log_abs() -
                     std::log((2.0 * argmin + 2.0) * (2.0 * argmin + 1.0)) -
                     (2.0 * argmin + 1.0) * std::log(zd);
    auto tr = optimal_error_stirling({zd, 0.0});
    double ratio = std::exp(std::log(tr.bound) - log_min);
    CHECK(ratio > 0.25);
    CHECK(ratio < 4.0);
  }
}

TEST_CASE("widened sector rate") {
  CHECK(widened_sector_rate(1e-9) == doctest::Approx(2.0 * M_PI));
  CHECK(widened_sector_rate(M_PI / 3.0) == doctest::Approx(M_PI));
  CHECK_THROWS_AS(widened_sector_rate(0.0), std::domain_error);
  CHECK_THROWS_AS(widened_sector_rate(2.0), std::domain_error);

  // companion verification just past the classical boundary
  double eps = 0.3;
  std::vector<Complex> grid = {std::polar(8.0, M_PI_2 + 0.5 * eps)};
  auto check = widened_sector_verify(eps, grid, 10);
  CHECK(check.report.pass);
  CHECK(check.rate == doctest::Approx(0.99 * 2.0 * M_PI * std::cos(eps)));
  CHECK(check.fitted_M > 0.0);
  CHECK(std::isfinite(check.fitted_M));
}
