#ifndef GEVREYKIT_STIRLING_HPP
#define GEVREYKIT_STIRLING_HPP

#include <complex>
#include <span>

#include "gevreykit/report.hpp"

namespace gevreykit {

using Complex = std::complex<double>;

// Quadrature setup for the first Binet integral.  The contour may be
// rotated to arg t = rotation, which extends the validity of binet_P to
// arg z in (-pi/2 - rotation, pi/2 - rotation); any |rotation| < pi/2 keeps
// the ray clear of the poles of F at 2 pi i k.
struct BinetConfig {
  double rotation = 0.0;
  int max_level = 12;
  double rel_tol = 1e-14;
  double truncation_radius = 0.0;  // 0: derived from the decay rate
};

// Rotation that keeps the integration ray well conditioned for a given z:
// swings arg(z e^{i rotation}) down to ~0.35 rad while staying at least
// ~0.37 rad away from the pole directions +-pi/2.  Near the boundary rays
// of S(-pi/2, pi/2) the unrotated integral decays like |z| cos(arg z) and
// is numerically useless.
BinetConfig binet_config_for(Complex z, BinetConfig base = {});

// F(t) = (1/t)(1/2 - 1/t + 1/(e^t - 1)).  Inside |t| < 1/4 the Taylor
// series is used (the singularity at 0 is removable); outside, the closed
// form with a compensated e^t - 1.  Poles 2 pi i k, k != 0, are rejected.
Complex binet_F(Complex t);

// P(z) = int e^{-zt} F(t) dt along arg t = cfg.rotation; requires
// Re(z e^{i rotation}) > 0.
Complex binet_P(Complex z, const BinetConfig& cfg = {});

// K(z) = max_{u>=0} |z^2/(u^2+z^2)|: 1 on |arg z| < pi/4, else
// 1/sin(2|arg z|); unbounded toward the boundary rays |arg z| = pi/2.
double K_of_z(Complex z);

// ln Gamma via the Binet function: (z - 1/2) ln z - z + ln(2 pi)/2 + P(z),
// principal branch.
Complex log_gamma(Complex z, const BinetConfig& cfg = {});

struct StirlingVerifyOptions {
  double tolerance = 1e-9;
  double noise_floor_rel = 0.0;
  double noise_floor_abs = 0.0;
  BinetConfig binet;
};

// Checks |P(z) - sum_{k=1}^n p_{2k-2} / z^{2k-1}| against
// K(z) |B_{2n+2}| / ((2n+2)(2n+1) |z|^{2n+1}) for n = 0..n_max on the grid.
EstimateReport verify_estimates_st(std::span<const Complex> grid, int n_max,
                                   const StirlingVerifyOptions& opts = {});

struct StirlingTruncation {
  long n_opt;    // number of Stirling terms, floor(pi |z| - 1)
  double bound;  // K(z) 2 sqrt(2 pi |z|) / (2 pi |z| - 1) e^{-2 pi |z|}
};

// Optimal truncation of the Stirling series; requires |z| > 1/(2 pi).
// For |z| > 1 and |arg z| < pi/4 the bound is checked against the constant
// cap 0.94891 e^{-2 pi |z|}.
StirlingTruncation optimal_error_stirling(Complex z);

// Brute-force argmin over n in [1, n_cap] of the term bound
// |B_{2n+2}| / ((2n+2)(2n+1) |z|^{2n+1}), with exact Bernoulli numbers.
long stirling_bound_argmin(double abs_z, int n_cap = 64);

// a(eps) = 2 pi cos(eps): the decay rate available in the widened sector
// S(-pi/2 - eps, pi/2 + eps).
double widened_sector_rate(double eps);

struct WidenedSectorCheck {
  EstimateReport report;
  double fitted_M;  // empirical constant, reported, no optimality claim
  double rate;      // (1 - margin) * 2 pi cos(eps)
};

// Companion verification for the widened sector: samples P through a
// contour rotated by -eps, fits M on the first half of the n range, then
// verifies the full range at rate (1 - margin) 2 pi cos eps.
WidenedSectorCheck widened_sector_verify(double eps,
                                         std::span<const Complex> grid,
                                         int n_max, double margin = 1e-2);

}  // namespace gevreykit

#endif
