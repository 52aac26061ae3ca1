#ifndef GEVREYKIT_GEVREY_HPP
#define GEVREYKIT_GEVREY_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "gevreykit/report.hpp"
#include "gevreykit/sectors.hpp"
#include "gevreykit/series.hpp"

namespace gevreykit {

// A Gevrey expansion of order k: coefficients p_0, p_1, ... together with
// the constants of its remainder-bound family,
//   k = 1:      |P(z) - S_n(z)| <= K_P M n! / (a^n |z|^{n+1})
//   general k:  |P(z) - S_n(z)| <= K_P M (n!)^{1/k} / (k a |z|)^{n+1}.
// The two printed forms differ by bounded factors; each is implemented
// verbatim in its own k-regime.
struct GevreyExpansion {
  CoefficientSequence coeffs;
  double order_k = 1.0;
  double M = 1.0;
  double a = 1.0;
  double sigma = 0.0;
  double K_P = 1.0;

  std::vector<double> coeff_values;  // cached doubles of coeffs

  static GevreyExpansion make(CoefficientSequence coeffs, double order_k,
                              double M, double a, double sigma = 0.0,
                              double K_P = 1.0);
};

// S_n(z) = sum_{k=0}^{n-1} p_k / z^{k+1}, Horner in 1/z; n = 0 gives 0.
Complex partial_sum(const GevreyExpansion& e, Complex z, std::size_t n);

// The bound family above, evaluated in log space so large n cannot
// overflow.
double remainder_bound(const GevreyExpansion& e, Complex z, std::size_t n);

struct TruncationResult {
  std::size_t n_opt;
  double bound;
};

// Exhaustive scan of remainder_bound over n in [0, n_cap]
// (n_cap = 0 selects the default 2 ceil(a|z|) + 16).  The scan is exact for
// the discrete problem; closed-form truncation rules are cross-checks only.
TruncationResult optimal_truncation(const GevreyExpansion& e, Complex z,
                                    std::size_t n_cap = 0);

// 2 K_P M_a e^{-a|z|} with M_a = 4 M sqrt(2 pi) a: the superasymptotic bound
// on |P_1 - P_2| for two functions sharing the expansion.
double superasymptotic_bound(const GevreyExpansion& e, Complex z);

struct VerifyOptions {
  double tolerance = 1e-9;  // relative slack on ratio <= 1
  // Rows whose bound falls below abs + rel * |sampler(z)| cannot be decided
  // in double precision; they are marked indeterminate instead of failed.
  // Both default to 0 (feature off).
  double noise_floor_rel = 0.0;
  double noise_floor_abs = 0.0;
  unsigned threads = 0;  // 0: GEVREYKIT_THREADS or serial
};

// Checks the bound family against a sampled function on a grid.  The
// sampler must be safe for concurrent invocation when threads != 1.
// Grid points outside the sector or inside the sigma exclusion are skipped,
// not failed.
EstimateReport verify_gevrey(const std::function<Complex(Complex)>& sampler,
                             const GevreyExpansion& e, const Sector& s,
                             std::span<const Complex> grid, int n_max,
                             const VerifyOptions& opts = {});

// The non-uniqueness family P(z) = phi(z) e^{-z} / z on
// S(-pi/2 + delta, pi/2 - delta): a null expansion (all p_k = 0) with
// M = sup|phi| and a = sin delta that verify_gevrey must accept.
struct CounterexampleFamily {
  std::function<Complex(Complex)> sampler;
  GevreyExpansion expansion;
  Sector sector;
};

CounterexampleFamily counterexample(std::function<Complex(Complex)> phi,
                                    double delta, double phi_bound,
                                    std::size_t coeff_len = 64);

}  // namespace gevreykit

#endif
