#include "gevreykit/borel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gevreykit/errors.hpp"
#include "gevreykit/quadrature.hpp"
#include "json.hpp"

namespace gevreykit {

BorelCoefficients borel_transform(const CoefficientSequence& p) {
  if (p.values.empty()) throw std::domain_error("borel_transform: empty input");
  BorelCoefficients f;
  f.exact.resize(p.size());
  f.values.resize(p.size());
  mpz_class fact = 1;
  for (std::size_t n = 0; n < p.size(); ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    f.exact[n] = p[n] / Rational(fact);
    f.values[n] = f.exact[n].to_double();
  }
  return f;
}

CoefficientSequence borel_invert(const BorelCoefficients& f, SeqKind kind) {
  if (f.exact.empty())
    throw std::domain_error("borel_invert: exact coefficients unavailable");
  std::vector<Rational> p(f.exact.size());
  mpz_class fact = 1;
  for (std::size_t n = 0; n < f.exact.size(); ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    p[n] = f.exact[n] * Rational(fact);
  }
  return CoefficientSequence::checked(kind, std::move(p));
}

namespace {

// Least-squares slope of log|f_n| vs n over the nonzero tail; returns the
// fitted log-radius (= -slope), or nan when everything vanishes.
double tail_log_radius(std::span<const double> f) {
  std::size_t lo = f.size() / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t used = 0;
  for (std::size_t n = lo; n < f.size(); ++n) {
    if (f[n] == 0.0) continue;
    double x = static_cast<double>(n);
    double y = std::log(std::fabs(f[n]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
  }
  if (used < 2) return std::numeric_limits<double>::quiet_NaN();
  double denom = used * sxx - sx * sx;
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  double slope = (used * sxy - sx * sy) / denom;
  return -slope;
}

}  // namespace

double radius_estimate(const BorelCoefficients& f) {
  if (f.values.size() < 8)
    throw std::domain_error("radius_estimate: need at least 8 coefficients");
  double lr = tail_log_radius(f.values);
  if (std::isnan(lr)) return std::numeric_limits<double>::infinity();
  return std::exp(lr);
}

PadeApproximant::PadeApproximant(std::span<const double> f, int m, int n)
    : m_(m), n_(n), scale_(1.0) {
  if (m < 0 || n < 0) throw std::domain_error("pade: negative order");
  if (static_cast<std::size_t>(m + n + 1) > f.size())
    throw std::domain_error("pade: m + n + 1 exceeds coefficient count");

  // Rescale t = scale * s with a power of two near the fitted radius so the
  // Toeplitz entries stay O(1) even for rapidly decaying coefficients.
  double lr = tail_log_radius(f.first(std::min<std::size_t>(f.size(), 48)));
  if (std::isfinite(lr)) {
    double snapped = std::exp2(std::round(lr / M_LN2));
    if (snapped > 0x1p-40 && snapped < 0x1p40) scale_ = snapped;
  }
  std::vector<double> fs(m + n + 1);
  double pw = 1.0;
  for (int k = 0; k <= m + n; ++k, pw *= scale_) fs[k] = f[k] * pw;
  auto fs_at = [&](int idx) { return idx >= 0 ? fs[idx] : 0.0; };

  q_.assign(n + 1, 0.0);
  q_[0] = 1.0;
  if (n > 0) {
    Eigen::MatrixXd A(n, n);
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) {
      rhs[i] = -fs_at(m + 1 + i);
      for (int j = 1; j <= n; ++j) A(i, j - 1) = fs_at(m + 1 + i - j);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (!lu.isInvertible())
      throw DegenerateApproximant("pade: singular linear system at orders (" +
                                  std::to_string(m) + "," + std::to_string(n) +
                                  ")");
    Eigen::VectorXd qv = lu.solve(rhs);
    for (int j = 1; j <= n; ++j) q_[j] = qv[j - 1];
  }

  p_.assign(m + 1, 0.0);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= std::min(i, n); ++j) p_[i] += q_[j] * fs_at(i - j);

  // Pole set: companion-matrix roots of the denominator in s, mapped back.
  int deg = n;
  while (deg > 0 && std::fabs(q_[deg]) < 1e-290) --deg;
  if (deg > 0) {
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg - 1; ++i) C(i + 1, i) = 1.0;
    for (int i = 0; i < deg; ++i) C(i, deg - 1) = -q_[i] / q_[deg];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C);
    poles_.reserve(deg);
    for (int i = 0; i < deg; ++i) {
      Complex root(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
      poles_.push_back(root * scale_);
    }
    std::sort(poles_.begin(), poles_.end(), [](Complex a, Complex b) {
      return std::abs(a) < std::abs(b) ||
             (std::abs(a) == std::abs(b) && a.imag() < b.imag());
    });
  }
}

Complex PadeApproximant::operator()(Complex t) const {
  Complex s = t / scale_;
  Complex num = p_.empty() ? Complex(0.0) : Complex(p_.back());
  for (std::size_t i = p_.size() - 1; i-- > 0;) num = num * s + p_[i];
  Complex den = q_.back();
  for (std::size_t i = q_.size() - 1; i-- > 0;) den = den * s + q_[i];
  return num / den;
}

PadeApproximant pade_continue(const BorelCoefficients& f, int m, int n) {
  return PadeApproximant(f.values, m, n);
}

std::string to_string(QuadScheme s) {
  return s == QuadScheme::tanh_sinh ? "tanh-sinh" : "gauss-laguerre";
}

namespace {

// Truncation radius for a tail decaying like e^{-decay r}, honoring an
// explicit override (validated against the tolerance).
double halfline_radius(double decay, const RayQuadrature& quad) {
  if (!(decay > 0.0))
    throw std::domain_error("half-line quadrature: nonpositive decay rate");
  double R = quad.truncation_radius;
  double need = -std::log(quad.tolerance) + 8.0;
  if (R <= 0.0) {
    R = need / decay;
    R = (need + 12.0 * std::log1p(R)) / decay;  // algebraic-factor slack
  } else if (decay * R < need) {
    throw std::invalid_argument(
        "half-line quadrature: truncation radius too small for the decay "
        "rate at the requested tolerance");
  }
  return R;
}

// Shared half-line integrator:  int_0^R g(r) e^{-decay * r} dr  where g is
// bounded (up to mild algebraic growth) and may oscillate at rate osc.
Complex integrate_halfline(const std::function<Complex(double)>& g,
                           double decay, double osc, double R,
                           const RayQuadrature& quad) {
  if (quad.scheme == QuadScheme::gauss_laguerre) {
    // The rule absorbs e^{-decay r}; the oscillatory remainder stays in g.
    // Nodes beyond the truncation radius fall under the tail bound and are
    // dropped -- past that point compensated integrands can overflow.
    const auto& rule = gauss_laguerre(quad.nodes);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      double r = rule.nodes[i] / decay;
      if (r > R) break;  // nodes are ascending
      Complex v = g(r);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) continue;
      acc += rule.weights[i] * v;
    }
    return acc / decay;
  }

  QuadratureOptions opts;
  opts.min_level = 6;
  double cycles = osc * R / (2.0 * M_PI);
  int cap = 10;
  while (cap < quad.max_level && std::ldexp(7.6, cap) < 24.0 * (cycles + 4.0))
    ++cap;
  opts.max_level = std::min(cap, quad.max_level);
  opts.rel_tol = std::max(1e-15, quad.tolerance * 1e-2);
  auto h = [&](double r) { return g(r) * std::exp(-decay * r); };
  return tanh_sinh(h, 0.0, R, opts).value;
}

void guard_ray(const std::vector<Complex>& poles, double phi, double r_limit) {
  // A pole within 1e-3 of the ray, relative to |t| at closest approach,
  // makes the quadrature unreliable.  Poles safely beyond the truncation
  // radius sit under the tail bound and are ignored.
  Complex dir = std::polar(1.0, phi);
  for (Complex p : poles) {
    double rstar = (p * std::conj(dir)).real();
    if (rstar <= 0.0 || rstar > 1.25 * r_limit) continue;
    double d = std::abs(p - rstar * dir);
    if (d < 1e-3 * rstar)
      throw RayObstructed("laplace ray obstructed by approximant pole at (" +
                          std::to_string(p.real()) + "," +
                          std::to_string(p.imag()) + ")");
  }
}

}  // namespace

Complex laplace_integral(const std::function<Complex(Complex)>& F_eval,
                         Complex z, double phi, const RayQuadrature& quad) {
  Complex zr = z * std::polar(1.0, phi);  // decay of e^{-zt} per unit ray length
  double decay = zr.real() - quad.growth;
  if (!(decay > 0.0))
    throw std::domain_error(
        "laplace_integral: Re(z e^{i phi}) must exceed the growth rate of F");
  double R = halfline_radius(decay, quad);
  guard_ray(quad.poles, phi, R);

  Complex dir = std::polar(1.0, phi);
  double osc = std::fabs(zr.imag());
  auto g = [&](double r) -> Complex {
    // e^{-decay r} is applied by the integrator; keep the remainder here.
    return F_eval(r * dir) * std::exp(Complex(0.0, -zr.imag() * r) -
                                      Complex(quad.growth * r, 0.0));
  };
  return dir * integrate_halfline(g, decay, osc, R, quad);
}

BorelSummation borel_sum(const CoefficientSequence& p, Complex z,
                         const BorelSumConfig& cfg) {
  if (!(std::fabs(std::arg(z)) < M_PI_2))
    throw std::domain_error("borel_sum: need |arg z| < pi/2");
  BorelCoefficients f = borel_transform(p);
  const int L = static_cast<int>(f.values.size());
  int m = cfg.m >= 0 ? cfg.m : std::min(16, (L - 1) / 2);
  int n = cfg.n >= 0 ? cfg.n : std::min(16, (L - 1) / 2);
  if (m + n + 1 > L)
    throw std::domain_error("borel_sum: approximant orders exceed data");

  BorelSummation out;
  out.borel_values = f.values;
  out.ray_angle = cfg.ray_angle;

  // Degenerate systems back off to (m-1, n-1) until solvable.
  auto continue_at = [&](int mm, int nn, int* retreats) -> PadeApproximant {
    for (;;) {
      try {
        return PadeApproximant(f.values, mm, nn);
      } catch (const DegenerateApproximant&) {
        if (mm == 0 && nn == 0) throw;
        mm = std::max(0, mm - 1);
        nn = std::max(0, nn - 1);
        if (retreats) ++(*retreats);
      }
    }
  };

  PadeApproximant approx = continue_at(m, n, &out.retreats);
  out.m = approx.num_order();
  out.n = approx.den_order();
  out.poles = approx.poles();

  RayQuadrature quad = cfg.quad;
  quad.poles = out.poles;
  out.value = laplace_integral([&](Complex t) { return approx(t); }, z,
                               cfg.ray_angle, quad);

  if (out.m == 0 && out.n == 0) {
    out.error_estimate = 0.0;  // Laplace of a constant, exact up to quadrature
    return out;
  }
  PadeApproximant lower =
      continue_at(std::max(0, out.m - 1), std::max(0, out.n - 1), nullptr);
  RayQuadrature quad_lo = cfg.quad;
  quad_lo.poles = lower.poles();
  Complex value_lo = laplace_integral([&](Complex t) { return lower(t); }, z,
                                      cfg.ray_angle, quad_lo);
  out.error_estimate = std::abs(out.value - value_lo);
  return out;
}

Complex ray_transform(const std::function<Complex(Complex)>& P_sampler,
                      double theta, Complex t, double a,
                      const RayQuadrature& quad) {
  if (!(std::fabs(theta) < M_PI_2))
    throw std::domain_error("ray_transform: need |theta| < pi/2");
  if (!(a > 0.0)) throw std::domain_error("ray_transform: a must be positive");
  Complex dir = std::polar(1.0, theta);
  double support = (t * dir).real();  // sigma cos theta - tau sin theta
  if (!(support < a))
    throw std::domain_error("ray_transform: outside half-plane of convergence");

  double decay = a - support;
  // Oscillation along the ray: the e^{zt} phase plus whatever the decay
  // envelope of P leaves (for |P| ~ e^{-a|z|} on a rotated ray the phase
  // rate is at most a).
  double osc = std::fabs((t * dir).imag()) + a;
  double R = halfline_radius(decay, quad);
  auto integrand = [&](double r) -> Complex {
    Complex zz = r * dir;
    // integrate_halfline multiplies by e^{-decay r}; compensate so the
    // product is exactly e^{zt} P(z).
    return P_sampler(zz) * std::exp(zz * t + Complex(decay * r, 0.0));
  };
  return dir * integrate_halfline(integrand, decay, osc, R, quad);
}

NevanlinnaResult nevanlinna_check(
    const std::function<Complex(Complex)>& F_eval, double a, double a_prime,
    double sigma, double K, std::span<const Complex> grid) {
  if (!(a > 0.0) || !(a_prime > 0.0) || !(a_prime < a))
    throw std::domain_error("nevanlinna_check: need 0 < a' < a");
  if (!(K > 0.0)) throw std::domain_error("nevanlinna_check: K must be > 0");
  if (!(sigma >= 0.0))
    throw std::domain_error("nevanlinna_check: sigma must be >= 0");
  HalfStrip region{a_prime};
  NevanlinnaResult res;
  for (Complex t : grid) {
    if (!region.contains(t)) {
      ++res.skipped;
      continue;
    }
    ++res.checked;
    double ratio = std::abs(F_eval(t)) / (K * std::exp(sigma * std::abs(t)));
    res.max_ratio = std::max(res.max_ratio, ratio);
    if (ratio > 1.0) res.passed = false;
  }
  return res;
}

std::string BorelSummation::to_json() const {
  nlohmann::json j;
  j["value"] = {value.real(), value.imag()};
  j["error_estimate"] = error_estimate;
  j["orders"] = {m, n};
  j["retreats"] = retreats;
  j["ray_angle"] = ray_angle;
  auto poles_j = nlohmann::json::array();
  for (Complex p : poles) poles_j.push_back({p.real(), p.imag()});
  j["poles"] = std::move(poles_j);
  return j.dump();
}

}  // namespace gevreykit
