#ifndef GEVREYKIT_BOREL_HPP
#define GEVREYKIT_BOREL_HPP

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gevreykit/series.hpp"

namespace gevreykit {

using Complex = std::complex<double>;

// Borel-transformed coefficients f_n = p_n / n!.  When built from an exact
// sequence the rationals are kept alongside the doubles so the inverse
// relation p_n = f_n n! is available exactly.
struct BorelCoefficients {
  std::vector<double> values;
  std::vector<Rational> exact;  // empty unless built from rationals
  std::optional<double> radius; // declared radius of convergence, if known
};

BorelCoefficients borel_transform(const CoefficientSequence& p);

// Exact inverse of borel_transform (requires exact values).
CoefficientSequence borel_invert(const BorelCoefficients& f, SeqKind kind);

// Cauchy-Hadamard radius from a least-squares fit of log|f_n| against n over
// the nonzero tail; the fitted intercept absorbs the algebraic prefactor
// that biases plain |f_n|^{-1/n}.  All-zero tail gives +inf.
double radius_estimate(const BorelCoefficients& f);

// Half-strip region D_a U L_a^+ = {|t| < a} U {Re t > 0, |Im t| < a}.
struct HalfStrip {
  double a;
  bool contains(Complex t) const {
    return std::abs(t) < a || (t.real() > 0.0 && std::fabs(t.imag()) < a);
  }
};

// [m/n] rational approximant matching the first m+n+1 Taylor coefficients.
// Solved in a rescaled variable (power-of-two near the fitted radius) to
// keep the Toeplitz system decently scaled for rapidly decaying input.
class PadeApproximant {
 public:
  PadeApproximant(std::span<const double> f, int m, int n);

  Complex operator()(Complex t) const;
  const std::vector<Complex>& poles() const { return poles_; }
  int num_order() const { return m_; }
  int den_order() const { return n_; }

 private:
  int m_, n_;
  double scale_;
  std::vector<double> p_, q_;  // coefficients in the scaled variable
  std::vector<Complex> poles_;
};

PadeApproximant pade_continue(const BorelCoefficients& f, int m, int n);

enum class QuadScheme { tanh_sinh, gauss_laguerre };
std::string to_string(QuadScheme s);

struct RayQuadrature {
  QuadScheme scheme = QuadScheme::tanh_sinh;
  int nodes = 64;                  // gauss-laguerre order
  int max_level = 12;              // tanh-sinh refinement cap
  double truncation_radius = 0.0;  // 0: choose from the decay rate
  double tolerance = 1e-12;
  double growth = 0.0;             // exponential growth of F along the ray
  std::vector<Complex> poles;      // known poles, for the ray guard
};

// int_0^{inf e^{i phi}} F(t) e^{-zt} dt.  Requires Re(z e^{i phi}) > growth
// (absolute convergence).  The truncation radius must satisfy the tail
// bound at the configured tolerance; this is checked at run time.  A known
// pole within 1e-3 relative distance of the ray raises RayObstructed.
Complex laplace_integral(const std::function<Complex(Complex)>& F_eval,
                         Complex z, double phi, const RayQuadrature& quad = {});

struct BorelSumConfig {
  int m = -1;              // -1: auto from the coefficient count
  int n = -1;
  double ray_angle = 0.0;
  RayQuadrature quad;
};

struct BorelSummation {
  std::vector<double> borel_values;  // f_n actually used
  int m = 0, n = 0;                  // approximant orders after any retreat
  int retreats = 0;                  // degenerate orders skipped
  double ray_angle = 0.0;
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;       // order-stability heuristic, not a bound
  std::vector<Complex> poles;

  std::string to_json() const;
};

// Borel summation: borel_transform -> pade_continue -> laplace_integral
// along the configured ray, for z with |arg z| < pi/2.  The error estimate
// is |result(m,n) - result(m-1,n-1)|.
BorelSummation borel_sum(const CoefficientSequence& p, Complex z,
                         const BorelSumConfig& cfg = {});

// F_theta(t) = int_{arg z = theta} e^{zt} P(z) dz for a sampler decaying
// like e^{-a|z|} on the ray.  Requires t strictly inside Pi_{theta,a}.
Complex ray_transform(const std::function<Complex(Complex)>& P_sampler,
                      double theta, Complex t, double a,
                      const RayQuadrature& quad = {});

struct NevanlinnaResult {
  bool passed = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // grid points outside D_{a'} U L_{a'}^+
  double max_ratio = 0.0;   // max |F| / (K e^{sigma|t|}) over checked points
  explicit operator bool() const { return passed; }
};

// |F(t)| <= K e^{sigma |t|} on grid points inside D_{a'} U L_{a'}^+.
NevanlinnaResult nevanlinna_check(
    const std::function<Complex(Complex)>& F_eval, double a, double a_prime,
    double sigma, double K, std::span<const Complex> grid);

}  // namespace gevreykit

#endif
