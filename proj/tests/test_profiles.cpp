#include <cmath>
#include <vector>

#include "doctest.h"
#include "gevreykit/profiles.hpp"
#include "oracles.hpp"

using namespace gevreykit;

namespace {
std::vector<std::pair<double, double>> log_grid(double lo, double hi, int n) {
  std::vector<std::pair<double, double>> g;
  for (int i = 0; i < n; ++i) {
    double d = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    g.emplace_back(d, 0.0);
  }
  return g;
}
}  // namespace

TEST_CASE("carleman integral: constant profile") {
  // M = e^2: integrand log log M = log 2 everywhere
  auto res = carleman_loglog(MDeltaProfile::constant(std::exp(2.0)));
  CHECK(res.finite);
  CHECK(res.confidence == Confidence::analytic);
  CHECK(res.value == doctest::Approx(M_PI_2 * std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(MDeltaProfile::constant(2.0), std::domain_error);
}

TEST_CASE("carleman integral: exponential profile is always finite") {
  // M(delta) = e * exp(1/delta^2): loglog ~ 2 log(1/delta) near 0
  auto m = MDeltaProfile::exponential(std::exp(1.0), 1.0, 2.0);
  auto res = carleman_loglog(m);
  CHECK(res.finite);
  CHECK(res.value > 0.0);
  CHECK(std::isfinite(res.value));

  // value agrees with an independent adaptive-Simpson evaluation
  double oracle = oracles::adaptive_simpson(
      [](double d) { return std::log(1.0 + std::pow(d, -2.0)); }, 1e-12,
      M_PI_2, 1e-9);
  CHECK(res.value == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("carleman integral: randomized corollary sweep stays finite") {
  oracles::Lcg rng(123456789);
  for (int i = 0; i < 60; ++i) {
    double M = rng.uniform(1.0, 10.0);
    double b = rng.uniform(1.0, 10.0);
    double gamma = rng.uniform(1.0, 10.0);
    auto res = carleman_loglog(MDeltaProfile::exponential(M, b, gamma));
    CHECK(res.finite);
    CHECK(std::isfinite(res.value));
  }
}

TEST_CASE("carleman integral: tabulated divergent profile") {
  // log log M(delta) = 1/delta, i.e. M = exp(exp(1/delta)); representable
  // only on the loglog scale
  auto grid = log_grid(1e-4, M_PI_2, 120);
  for (auto& [d, v] : grid) v = 1.0 / d;
  auto m = MDeltaProfile::tabulated(grid, MDeltaProfile::Scale::loglog);
  auto res = carleman_loglog(m);
  CHECK(!res.finite);
  CHECK(std::isinf(res.value));
  CHECK(res.confidence == Confidence::extrapolated);
}

TEST_CASE("carleman integral: tabulated convergent profile") {
  // log log M(delta) = 2 log(1/delta) + 1, integrable at 0
  auto grid = log_grid(1e-5, M_PI_2, 140);
  for (auto& [d, v] : grid) v = 2.0 * std::log(1.0 / d) + 1.0;
  auto m = MDeltaProfile::tabulated(grid, MDeltaProfile::Scale::loglog);
  auto res = carleman_loglog(m);
  CHECK(res.finite);
  CHECK(res.confidence == Confidence::extrapolated);
  double oracle = oracles::adaptive_simpson(
      [](double d) { return 2.0 * std::log(1.0 / d) + 1.0; }, 1e-12, M_PI_2,
      1e-9);
  CHECK(res.value == doctest::Approx(oracle).epsilon(0.02));
}

TEST_CASE("tabulated profile rejects log M <= 1") {
  std::vector<std::pair<double, double>> bad = {{0.1, 2.0}, {0.5, 2.6}};
  // log M = log 2 < 1 at the first sample
  CHECK_THROWS_AS(MDeltaProfile::tabulated(bad, MDeltaProfile::Scale::linear),
                  std::domain_error);
  std::vector<std::pair<double, double>> good = {{0.1, 30.0}, {0.5, 4.0}};
  CHECK_NOTHROW(MDeltaProfile::tabulated(good, MDeltaProfile::Scale::linear));
}

TEST_CASE("profile JSON round trips") {
  auto m = MDeltaProfile::exponential(2.0, 3.0, 1.5);
  auto back = MDeltaProfile::from_json(m.to_json());
  CHECK(back.loglog_at(0.01) == doctest::Approx(m.loglog_at(0.01)));

  auto grid = log_grid(1e-3, 1.0, 30);
  for (auto& [d, v] : grid) v = 1.0 / d;
  auto t = MDeltaProfile::tabulated(grid, MDeltaProfile::Scale::loglog);
  auto t2 = MDeltaProfile::from_json(t.to_json());
  CHECK(t2.loglog_at(0.01) == doctest::Approx(t.loglog_at(0.01)));

  auto a = ADeltaProfile::power(1.0, 0.5);
  auto a2 = ADeltaProfile::from_json(a.to_json());
  CHECK(a_delta_condition(a2) == a_delta_condition(a));
  CHECK_THROWS(ADeltaProfile::callback([](double d) { return d; }).to_json());
}

TEST_CASE("a(delta)/delta growth condition") {
  CHECK(a_delta_condition(ADeltaProfile::constant(3.0)));
  CHECK(!a_delta_condition(ADeltaProfile::power(1.0, 2.0)));   // delta^2
  CHECK(a_delta_condition(ADeltaProfile::power(1.0, 0.5)));    // sqrt(delta)
  CHECK(a_delta_condition(
      ADeltaProfile::callback([](double d) { return std::sqrt(d); })));
  CHECK(!a_delta_condition(
      ADeltaProfile::callback([](double d) { return d * d; })));

  auto grid = log_grid(1e-6, 0.5, 40);
  for (auto& [d, v] : grid) v = std::sqrt(d);
  CHECK(a_delta_condition(ADeltaProfile::tabulated(grid)));
  for (auto& [d, v] : grid) v = d * d;
  CHECK(!a_delta_condition(ADeltaProfile::tabulated(grid)));
  CHECK_THROWS_AS(ADeltaProfile::tabulated({}), std::domain_error);
}

TEST_CASE("log-integral divergence heuristic") {
  auto heights = [](int n) {
    std::vector<double> ys;
    for (int i = 1; i <= n; ++i) {
      double y = 1e3 * std::pow(10.0, -4.0 * (n - i) / (n - 1.0));
      ys.push_back(y);
    }
    return ys;
  };
  auto ys = heights(400);

  // log|P(c+iy)| = -1 (P = e^{-z}, c = 1): integrand ~ -1/y^2, convergent
  std::vector<std::pair<double, double>> flat;
  flat.emplace_back(0.0, -1.0);
  for (double y : ys) {
    flat.emplace_back(y, -1.0);
    flat.emplace_back(-y, -1.0);
  }
  CHECK(!log_integral_divergence(flat));

  // log|P(c+iy)| = -|y|: integral ~ -2 log Y, divergent
  std::vector<std::pair<double, double>> linear;
  linear.emplace_back(0.0, 0.0);
  for (double y : ys) {
    linear.emplace_back(y, -y);
    linear.emplace_back(-y, -y);
  }
  CHECK(log_integral_divergence(linear));

  // P == 1
  std::vector<std::pair<double, double>> zero;
  zero.emplace_back(0.0, 0.0);
  for (double y : ys) {
    zero.emplace_back(y, 0.0);
    zero.emplace_back(-y, 0.0);
  }
  CHECK(!log_integral_divergence(zero));

  std::vector<std::pair<double, double>> few(8, {1.0, -1.0});
  CHECK_THROWS_AS(log_integral_divergence(few), std::domain_error);
}

TEST_CASE("havin shift and companion check") {
  CHECK(havin_shift(1.0, 2.0, 1.0) == doctest::Approx(1.0));
  CHECK(havin_shift(M_PI, 2.0 * M_PI, M_PI) == doctest::Approx(1.0));
  CHECK_THROWS_AS(havin_shift(1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(havin_shift(1.0, 1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(havin_shift(0.0, 2.0, 1.0), std::domain_error);

  // samples of |P(h+iy)| = e^{-2|y|} satisfy the bound at c = 1
  std::vector<std::pair<double, double>> samples;
  for (double y = -8.0; y <= 8.0; y += 0.25)
    samples.emplace_back(y, std::exp(-2.0 * std::fabs(y)));
  double M_h = havin_min_constant(samples, 1.0);
  CHECK(M_h == doctest::Approx(1.0));
  CHECK(havin_check(samples, 1.0, 1.5));
  CHECK(!havin_check(samples, 3.0, 1.0));  // decay too slow for c = 3
}
