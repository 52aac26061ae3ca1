#include "gevreykit/sectors.hpp"

#include <cmath>
#include <stdexcept>

namespace gevreykit {

Sector::Sector(double alpha_, double beta_, double r_min_, double r_max_)
    : alpha(alpha_), beta(beta_), r_min(r_min_), r_max(r_max_) {
  if (!(alpha < beta)) throw std::domain_error("Sector: alpha must be < beta");
  if (!(r_min < r_max)) throw std::domain_error("Sector: r_min must be < r_max");
  if (r_min < 0.0) throw std::domain_error("Sector: r_min must be >= 0");
}

bool Sector::contains(Complex z) const {
  // The radial window keeps |z| = r_min: the estimate families hold
  // "except |z| < sigma".
  double r = std::abs(z);
  if (!(r >= r_min) || !(r < r_max) || r == 0.0) return false;
  double arg = std::arg(z);
  // Find the 2 pi shift landing inside (alpha, beta), if any.
  double k_lo = std::ceil((alpha - arg) / (2.0 * M_PI) - 1.0);
  for (double k = k_lo; k <= k_lo + 3.0; k += 1.0) {
    double a = arg + 2.0 * M_PI * k;
    if (a > alpha && a < beta) return true;
  }
  return false;
}

double opening(const Sector& s) { return s.beta - s.alpha; }

std::string to_string(Criticality c) {
  switch (c) {
    case Criticality::subcritical:
      return "subcritical";
    case Criticality::critical:
      return "critical";
    case Criticality::supercritical:
      return "supercritical";
  }
  return "critical";
}

Criticality criticality(const Sector& s, double k) {
  if (!(k > 0.0)) throw std::domain_error("criticality: k must be positive");
  constexpr double kTol = 1e-12;  // openings are user constants, not computed
  double diff = opening(s) - M_PI / k;
  if (diff < -kTol) return Criticality::subcritical;
  if (diff > kTol) return Criticality::supercritical;
  return Criticality::critical;
}

HalfPlane::HalfPlane(double theta_, double a_) : theta(theta_), a(a_) {
  if (!(a > 0.0)) throw std::domain_error("HalfPlane: a must be positive");
}

double HalfPlane::support(Complex t) const {
  return t.real() * std::cos(theta) - t.imag() * std::sin(theta);
}

bool HalfPlane::on_boundary(Complex t) const {
  double s = support(t);
  return std::fabs(s - a) <= 1e-15 * std::max(1.0, std::fabs(a));
}

TSectorPair t_regions(double delta, double a) {
  if (!(delta > 0.0) || !(delta < M_PI_2))
    throw std::domain_error("t_regions: delta must lie in (0, pi/2)");
  if (!(a > 0.0)) throw std::domain_error("t_regions: a must be positive");
  return TSectorPair{delta, a, a / std::sin(delta),
                     HalfPlane(M_PI_2 - delta, a),
                     HalfPlane(-(M_PI_2 - delta), a)};
}

}  // namespace gevreykit
