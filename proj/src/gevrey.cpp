#include "gevreykit/gevrey.hpp"

#include <cmath>
#include <stdexcept>

#include "gevreykit/parallel.hpp"

namespace gevreykit {

GevreyExpansion GevreyExpansion::make(CoefficientSequence coeffs,
                                      double order_k, double M, double a,
                                      double sigma, double K_P) {
  if (!(order_k > 0.0)) throw std::domain_error("GevreyExpansion: k must be > 0");
  if (!(M > 0.0)) throw std::domain_error("GevreyExpansion: M must be > 0");
  if (!(a > 0.0)) throw std::domain_error("GevreyExpansion: a must be > 0");
  if (!(sigma >= 0.0)) throw std::domain_error("GevreyExpansion: sigma must be >= 0");
  if (!(K_P > 0.0)) throw std::domain_error("GevreyExpansion: K_P must be > 0");
  GevreyExpansion e{std::move(coeffs), order_k, M, a, sigma, K_P, {}};
  e.coeff_values = e.coeffs.as_doubles();
  return e;
}

Complex partial_sum(const GevreyExpansion& e, Complex z, std::size_t n) {
  if (z == Complex(0.0, 0.0))
    throw std::domain_error("partial_sum: z must be nonzero");
  if (n > e.coeff_values.size())
    throw std::domain_error("partial_sum: n exceeds coefficient count");
  if (n == 0) return {0.0, 0.0};
  Complex w = 1.0 / z;
  Complex acc = e.coeff_values[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) acc = acc * w + e.coeff_values[k];
  return acc * w;
}

double remainder_bound(const GevreyExpansion& e, Complex z, std::size_t n) {
  double r = std::abs(z);
  if (!(r > 0.0)) throw std::domain_error("remainder_bound: |z| must be > 0");
  double nn = static_cast<double>(n);
  double log_b;
  if (std::fabs(e.order_k - 1.0) < 1e-12) {
    // order 1 keeps the a^n |z|^{n+1} shape
    log_b = std::log(e.K_P * e.M) + std::lgamma(nn + 1.0) -
            nn * std::log(e.a) - (nn + 1.0) * std::log(r);
  } else {
    log_b = std::log(e.K_P * e.M) + std::lgamma(nn + 1.0) / e.order_k -
            (nn + 1.0) * std::log(e.order_k * e.a * r);
  }
  return std::exp(log_b);
}

TruncationResult optimal_truncation(const GevreyExpansion& e, Complex z,
                                    std::size_t n_cap) {
  double r = std::abs(z);
  if (!(r > e.sigma))
    throw std::domain_error("optimal_truncation: |z| below sigma exclusion");
  if (!(r > 1.0 / e.a))
    throw std::domain_error(
        "optimal_truncation: below superasymptotic threshold");
  if (n_cap == 0)
    n_cap = 2 * static_cast<std::size_t>(std::ceil(e.a * r)) + 16;
  TruncationResult best{0, remainder_bound(e, z, 0)};
  for (std::size_t n = 1; n <= n_cap; ++n) {
    double b = remainder_bound(e, z, n);
    if (b < best.bound) best = {n, b};
  }
  return best;
}

double superasymptotic_bound(const GevreyExpansion& e, Complex z) {
  double r = std::abs(z);
  if (!(r > 1.0 / e.a))
    throw std::domain_error(
        "superasymptotic_bound: below superasymptotic threshold");
  double M_a = 4.0 * e.M * std::sqrt(2.0 * M_PI) * e.a;
  return 2.0 * e.K_P * M_a * std::exp(-e.a * r);
}

EstimateReport verify_gevrey(const std::function<Complex(Complex)>& sampler,
                             const GevreyExpansion& e, const Sector& s,
                             std::span<const Complex> grid, int n_max,
                             const VerifyOptions& opts) {
  if (n_max < 0) throw std::domain_error("verify_gevrey: n_max < 0");
  if (static_cast<std::size_t>(n_max) > e.coeff_values.size())
    throw std::domain_error("verify_gevrey: n_max exceeds coefficient count");

  const int per_point = n_max + 1;
  EstimateReport rep;
  rep.tolerance = opts.tolerance;
  rep.rows.resize(grid.size() * per_point);

  parallel_for(
      grid.size(),
      [&](std::size_t gi) {
        Complex z = grid[gi];
        EstimateRow* out = rep.rows.data() + gi * per_point;
        bool usable = s.contains(z) && std::abs(z) > e.sigma;
        RowStatus skip = !s.contains(z) ? RowStatus::skipped_outside
                                        : RowStatus::skipped_radius;
        Complex pz{0.0, 0.0};
        if (usable) pz = sampler(z);
        double floor =
            opts.noise_floor_abs + opts.noise_floor_rel * std::abs(pz);
        for (int n = 0; n <= n_max; ++n) {
          EstimateRow& row = out[n];
          row.z = z;
          row.n = n;
          if (!usable) {
            row.remainder = row.bound = row.ratio = 0.0;
            row.status = skip;
            continue;
          }
          row.remainder = std::abs(pz - partial_sum(e, z, n));
          row.bound = remainder_bound(e, z, n);
          row.ratio = row.bound > 0.0
                          ? row.remainder / row.bound
                          : (row.remainder > 0.0 ? HUGE_VAL : 0.0);
          if (row.bound < floor) {
            row.status = RowStatus::indeterminate;
          } else {
            row.status = row.ratio <= 1.0 + opts.tolerance ? RowStatus::pass
                                                           : RowStatus::fail;
          }
        }
      },
      opts.threads);

  rep.finalize();
  return rep;
}

CounterexampleFamily counterexample(std::function<Complex(Complex)> phi,
                                    double delta, double phi_bound,
                                    std::size_t coeff_len) {
  if (!(delta > 0.0) || !(delta < M_PI_2))
    throw std::domain_error("counterexample: delta must lie in (0, pi/2)");
  if (!(phi_bound > 0.0))
    throw std::domain_error("counterexample: bound on phi must be positive");
  if (coeff_len == 0) coeff_len = 1;

  auto sampler = [phi = std::move(phi)](Complex z) -> Complex {
    return phi(z) * std::exp(-z) / z;
  };
  CoefficientSequence zeros{SeqKind::user,
                            std::vector<Rational>(coeff_len, Rational(0))};
  GevreyExpansion e = GevreyExpansion::make(std::move(zeros), 1.0, phi_bound,
                                            std::sin(delta), 0.0, 1.0);
  Sector s(-M_PI_2 + delta, M_PI_2 - delta);
  return {std::move(sampler), std::move(e), s};
}

}  // namespace gevreykit
