#ifndef GEVREYKIT_QUADRATURE_HPP
#define GEVREYKIT_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace gevreykit {

using Complex = std::complex<double>;

struct QuadratureOptions {
  int min_level = 5;
  int max_level = 11;
  double rel_tol = 1e-14;
  double abs_tol = 0.0;
};

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;  // |I_l - I_{l-1}| of the last refinement
  int levels_used = 0;
  std::size_t evaluations = 0;
};

// Tanh-sinh rule on the finite interval [a, b].  Levels double the node
// density; refinement stops once successive levels agree to tolerance.
// Deterministic for fixed options.
QuadratureResult tanh_sinh(const std::function<Complex(double)>& f, double a,
                           double b, const QuadratureOptions& opts = {});

double tanh_sinh_real(const std::function<double(double)>& f, double a,
                      double b, const QuadratureOptions& opts = {});

// Gauss-Laguerre rule for integrals  int_0^inf e^{-x} g(x) dx.
struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLaguerreRule& gauss_laguerre(int n);

}  // namespace gevreykit

#endif
