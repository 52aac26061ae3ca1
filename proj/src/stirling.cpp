#include "gevreykit/stirling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gevreykit/borel.hpp"
#include "gevreykit/errors.hpp"
#include "gevreykit/gevrey.hpp"
#include "gevreykit/sectors.hpp"
#include "gevreykit/series.hpp"

namespace gevreykit {

namespace {

// e^t - 1 with full relative accuracy for small |t| and near the points
// where e^t returns to 1.
Complex expm1c(Complex t) {
  double x = t.real(), y = t.imag();
  double em = std::expm1(x);
  double cy = std::cos(y), sy = std::sin(y);
  double hy = std::sin(0.5 * y);
  return {em * cy - 2.0 * hy * hy, (em + 1.0) * sy};
}

const std::vector<double>& binet_series() {
  static const std::vector<double> coeffs = binet_taylor_coeffs(40).as_doubles();
  return coeffs;
}

Complex horner_inv_z(std::span<const double> p, Complex z, std::size_t terms) {
  if (terms == 0) return {0.0, 0.0};
  Complex w = 1.0 / z;
  Complex acc = p[terms - 1];
  for (std::size_t k = terms - 1; k-- > 0;) acc = acc * w + p[k];
  return acc * w;
}

}  // namespace

Complex binet_F(Complex t) {
  double k = std::round(t.imag() / (2.0 * M_PI));
  if (k != 0.0) {
    Complex pole(0.0, 2.0 * M_PI * k);
    if (std::abs(t - pole) < 1e-12 * std::max(1.0, std::abs(t)))
      throw std::domain_error("binet_F: t at a pole 2 pi i k");
  }
  if (std::abs(t) < 0.25) {
    // Taylor tail beyond 20 even terms is far below 1e-17 at |t| = 1/4.
    const auto& f = binet_series();
    Complex t2 = t * t;
    Complex acc = 0.0;
    for (int j = 38; j >= 0; j -= 2) acc = acc * t2 + f[j];
    return acc;
  }
  return (0.5 - 1.0 / t + 1.0 / expm1c(t)) / t;
}

BinetConfig binet_config_for(Complex z, BinetConfig base) {
  constexpr double kResidual = 0.35;
  double a = std::arg(z);
  double rot = 0.0;
  if (std::fabs(a) > kResidual) rot = -(a - std::copysign(kResidual, a));
  base.rotation = std::clamp(rot, -1.2, 1.2);
  return base;
}

Complex binet_P(Complex z, const BinetConfig& cfg) {
  if (!(std::fabs(cfg.rotation) < M_PI_2))
    throw std::domain_error("binet_P: need |rotation| < pi/2");
  double s = (z * std::polar(1.0, cfg.rotation)).real();
  if (!(s > 0.0))
    throw std::domain_error("binet_P: need Re(z e^{i rotation}) > 0");
  RayQuadrature quad;
  quad.scheme = QuadScheme::tanh_sinh;
  quad.max_level = cfg.max_level;
  quad.tolerance = cfg.rel_tol;
  quad.truncation_radius = cfg.truncation_radius;
  return laplace_integral([](Complex t) { return binet_F(t); }, z,
                          cfg.rotation, quad);
}

double K_of_z(Complex z) {
  if (z == Complex(0.0, 0.0)) throw std::domain_error("K_of_z: z = 0");
  double a = std::fabs(std::arg(z));
  if (!(a < M_PI_2)) throw std::domain_error("K_of_z: need |arg z| < pi/2");
  if (a < M_PI_4) return 1.0;
  double s = std::sin(2.0 * a);
  if (s <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / s;
}

Complex log_gamma(Complex z, const BinetConfig& cfg) {
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * M_PI) +
         binet_P(z, cfg);
}

EstimateReport verify_estimates_st(std::span<const Complex> grid, int n_max,
                                   const StirlingVerifyOptions& opts) {
  if (n_max < 0) throw std::domain_error("verify_estimates_st: n_max < 0");
  auto p = stirling_coeffs(std::max(0, 2 * n_max - 2)).as_doubles();
  auto bern = bernoulli_numbers(n_max + 1);
  Sector right_half(-M_PI_2, M_PI_2);

  EstimateReport rep;
  rep.tolerance = opts.tolerance;
  for (Complex z : grid) {
    if (!right_half.contains(z)) {
      rep.rows.push_back({z, 0, 0.0, 0.0, 0.0, RowStatus::skipped_outside});
      continue;
    }
    double K = K_of_z(z);
    double logK = std::log(K);
    double logr = std::log(std::abs(z));
    Complex P = binet_P(z, binet_config_for(z, opts.binet));
    double floor = opts.noise_floor_abs + opts.noise_floor_rel * std::abs(P);
    for (int n = 0; n <= n_max; ++n) {
      std::size_t terms = n == 0 ? 0 : static_cast<std::size_t>(2 * n - 1);
      double rem = std::abs(P - horner_inv_z(p, z, terms));
      double log_bound = logK + bern[n + 1].log_abs() -
                         std::log((2.0 * n + 2.0) * (2.0 * n + 1.0)) -
                         (2.0 * n + 1.0) * logr;
      double bound = std::exp(log_bound);
      double ratio = bound > 0.0 ? rem / bound : HUGE_VAL;
      RowStatus st;
      if (bound < floor)
        st = RowStatus::indeterminate;
      else
        st = ratio <= 1.0 + opts.tolerance ? RowStatus::pass : RowStatus::fail;
      rep.rows.push_back({z, n, rem, bound, ratio, st});
    }
  }
  rep.finalize();
  return rep;
}

StirlingTruncation optimal_error_stirling(Complex z) {
  double r = std::abs(z);
  if (!(r > 1.0 / (2.0 * M_PI)))
    throw std::domain_error("optimal_error_stirling: need |z| > 1/(2 pi)");
  double K = K_of_z(z);
  long n_opt = static_cast<long>(std::floor(M_PI * r - 1.0));
  double pref = 2.0 * std::sqrt(2.0 * M_PI * r) / (2.0 * M_PI * r - 1.0);
  double bound = K * pref * std::exp(-2.0 * M_PI * r);
  if (r > 1.0 && std::fabs(std::arg(z)) < M_PI_4) {
    // the prefactor peaks at |z| = 1 where it equals 0.948906...
    GK_INTERNAL_CHECK(K * pref <= 0.94891 + 1e-12);
  }
  return {n_opt, bound};
}

long stirling_bound_argmin(double abs_z, int n_cap) {
  if (!(abs_z > 0.0)) throw std::domain_error("stirling_bound_argmin: |z| <= 0");
  if (n_cap < 1) throw std::domain_error("stirling_bound_argmin: n_cap < 1");
  auto bern = bernoulli_numbers(n_cap + 1);
  double logr = std::log(abs_z);
  long best_n = 1;
  double best = HUGE_VAL;
  for (int n = 1; n <= n_cap; ++n) {
    double lb = bern[n + 1].log_abs() -
                std::log((2.0 * n + 2.0) * (2.0 * n + 1.0)) -
                (2.0 * n + 1.0) * logr;
    if (lb < best) {
      best = lb;
      best_n = n;
    }
  }
  return best_n;
}

double widened_sector_rate(double eps) {
  if (!(eps > 0.0) || !(eps < M_PI_2))
    throw std::domain_error("widened_sector_rate: eps must lie in (0, pi/2)");
  return 2.0 * M_PI * std::cos(eps);
}

WidenedSectorCheck widened_sector_verify(double eps,
                                         std::span<const Complex> grid,
                                         int n_max, double margin) {
  if (n_max < 1) throw std::domain_error("widened_sector_verify: n_max < 1");
  double rate = (1.0 - margin) * widened_sector_rate(eps);

  BinetConfig cfg;
  cfg.rotation = -eps;
  cfg.max_level = 13;
  auto sampler = [cfg](Complex z) { return binet_P(z, cfg); };

  auto p = stirling_coeffs(n_max).as_doubles();
  // Fit the constant on the first half of the truncation range, then ask
  // the bound family to hold on the whole of it.  The fitted M is an
  // empirical report, not a sharp constant.
  int n_fit = std::max(1, n_max / 2);
  double m_fit = 0.0;
  for (Complex z : grid) {
    Complex P = sampler(z);
    double logr = std::log(std::abs(z));
    for (int n = 0; n <= n_fit; ++n) {
      double rem = std::abs(P - horner_inv_z(p, z, n));
      double cand = rem * std::exp(n * std::log(rate) + (n + 1.0) * logr -
                                   std::lgamma(n + 1.0));
      m_fit = std::max(m_fit, cand);
    }
  }
  if (!(m_fit > 0.0)) m_fit = 1.0;
  double M = 1.25 * m_fit;

  GevreyExpansion e = GevreyExpansion::make(stirling_coeffs(n_max), 1.0, M,
                                            rate, 0.0, 1.0);
  Sector widened(-M_PI_2 - eps, M_PI_2 + eps);
  VerifyOptions vopts;
  vopts.tolerance = 1e-9;
  EstimateReport rep = verify_gevrey(sampler, e, widened, grid, n_max, vopts);
  return {std::move(rep), M, rate};
}

}  // namespace gevreykit
