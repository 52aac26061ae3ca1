#ifndef GEVREYKIT_PROFILES_HPP
#define GEVREYKIT_PROFILES_HPP

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gevreykit {

// delta -> M(delta) on (0, pi/2), the constant profile of a uniqueness
// class.  The standing assumption log M(delta) > 1 is enforced.
//
// Tabulated samples may be given on a linear, log, or loglog scale; for
// profiles like exp(exp(1/delta)) only log log M is representable in
// doubles, so the table stores whichever scale the caller can produce and
// is normalized to loglog internally.
class MDeltaProfile {
 public:
  enum class Scale { linear, log, loglog };

  struct Constant {
    double M;
  };
  struct Exponential {  // M exp(b / delta^gamma)
    double M;
    double b;
    double gamma;
  };
  struct Tabulated {
    std::vector<std::pair<double, double>> samples;  // (delta, value), sorted
    Scale scale = Scale::linear;
  };

  static MDeltaProfile constant(double M);
  static MDeltaProfile exponential(double M, double b, double gamma);
  static MDeltaProfile tabulated(std::vector<std::pair<double, double>> samples,
                                 Scale scale = Scale::linear);

  bool is_tabulated() const {
    return std::holds_alternative<Tabulated>(v_);
  }
  const std::variant<Constant, Exponential, Tabulated>& data() const {
    return v_;
  }

  // log log M(delta); for tabulated profiles delta must be a sample point or
  // inside the sampled range (log-linear interpolation).
  double loglog_at(double delta) const;

  std::string to_json() const;
  static MDeltaProfile from_json(const std::string& text);

 private:
  explicit MDeltaProfile(std::variant<Constant, Exponential, Tabulated> v)
      : v_(std::move(v)) {}
  std::variant<Constant, Exponential, Tabulated> v_;
};

enum class Confidence { analytic, extrapolated };
std::string to_string(Confidence c);

struct CarlemanResult {
  bool finite;
  double value;  // +inf when divergent
  Confidence confidence;
};

struct CarlemanOptions {
  // Per-decade contribution ratio above which the extrapolation of a
  // tabulated profile is declared divergent.  1/delta-type integrands give
  // ratio ~1, any integrable log power gives <~ 0.35.
  double divergence_ratio = 0.7;
  double quad_rel_tol = 1e-11;
};

// Finiteness (and value, where finite) of  int_0^{pi/2} log log M(delta)
// d delta.  Closed-form variants are decided analytically -- the
// exponential family is always finite; tabulated variants use per-decade
// Richardson-style extrapolation toward delta = 0 and carry an
// `extrapolated` confidence tag.
CarlemanResult carleman_loglog(const MDeltaProfile& m,
                               const CarlemanOptions& opts = {});

// delta -> a(delta) > 0.
class ADeltaProfile {
 public:
  struct Constant {
    double a;
  };
  struct Power {  // c * delta^p, the serializable closed-form descriptor
    double c;
    double p;
  };
  struct Tabulated {
    std::vector<std::pair<double, double>> samples;  // (delta, a), sorted
  };
  struct Callback {
    std::function<double(double)> f;
  };

  static ADeltaProfile constant(double a);
  static ADeltaProfile power(double c, double p);
  static ADeltaProfile tabulated(std::vector<std::pair<double, double>> samples);
  static ADeltaProfile callback(std::function<double(double)> f);

  const std::variant<Constant, Power, Tabulated, Callback>& data() const {
    return v_;
  }

  std::string to_json() const;  // Callback variants do not serialize
  static ADeltaProfile from_json(const std::string& text);

 private:
  explicit ADeltaProfile(std::variant<Constant, Power, Tabulated, Callback> v)
      : v_(std::move(v)) {}
  std::variant<Constant, Power, Tabulated, Callback> v_;
};

// Necessary uniqueness condition a(delta)/delta -> +inf as delta -> 0.
// Analytic for constant/power variants; a monotone-growth heuristic over the
// smallest sampled decade otherwise.  Only the necessary direction is
// decided -- no sufficiency claim.
bool a_delta_condition(const ADeltaProfile& a);

struct LogIntegralOptions {
  double c = 1.0;            // abscissa of the sampled vertical line
  double threshold = -10.0;  // truncated-integral divergence threshold
  double flatten_ratio = 0.5;
};

// Heuristic divergence check of  int log|P(z)| / (1 + |z|^2) d|z|  along the
// line Re z = c from samples (y, log|P(c+iy)|) on a symmetric height grid.
// True when the truncated integral falls below the threshold while the
// per-decade increments show no flattening.
bool log_integral_divergence(
    const std::vector<std::pair<double, double>>& samples,
    const LogIntegralOptions& opts = {});

// Havin's shift abscissa h = b / (a - c) for 0 < c < a.
double havin_shift(double b, double a, double c);

// Companion checks for |P(h+iy)| < M_h e^{-c|y|} on samples (y, |P(h+iy)|).
double havin_min_constant(const std::vector<std::pair<double, double>>& samples,
                          double c);
bool havin_check(const std::vector<std::pair<double, double>>& samples,
                 double c, double M_h);

}  // namespace gevreykit

#endif
