#include "gevreykit/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gevreykit/quadrature.hpp"
#include "json.hpp"

namespace gevreykit {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

MDeltaProfile MDeltaProfile::constant(double M) {
  if (!(M > 0.0) || !(std::log(M) > 1.0))
    throw std::domain_error("MDeltaProfile: need log M > 1");
  return MDeltaProfile(Constant{M});
}

MDeltaProfile MDeltaProfile::exponential(double M, double b, double gamma) {
  if (!(M > 0.0) || !(b > 0.0) || !(gamma > 0.0))
    throw std::domain_error("MDeltaProfile: M, b, gamma must be positive");
  // log M(delta) = log M + b/delta^gamma blows up toward 0, where the
  // standing assumption matters; at the right endpoint we only require
  // log M(delta) > 0 so that log log M stays defined on all of (0, pi/2).
  double worst = std::log(M) + b * std::pow(2.0 / M_PI, gamma);
  if (!(worst > 0.0))
    throw std::domain_error(
        "MDeltaProfile: log M(delta) must stay positive on (0, pi/2)");
  return MDeltaProfile(Exponential{M, b, gamma});
}

MDeltaProfile MDeltaProfile::tabulated(
    std::vector<std::pair<double, double>> samples, Scale scale) {
  if (samples.size() < 2)
    throw std::domain_error("MDeltaProfile: need at least two samples");
  std::sort(samples.begin(), samples.end());
  for (auto& [d, v] : samples) {
    if (!(d > 0.0) || !(d <= M_PI_2 + 1e-12))
      throw std::domain_error("MDeltaProfile: sample delta outside (0, pi/2]");
    double ll;
    switch (scale) {
      case Scale::linear:
        if (!(v > 0.0)) throw std::domain_error("MDeltaProfile: M <= 0");
        ll = std::log(std::log(v));
        break;
      case Scale::log:
        ll = std::log(v);
        break;
      case Scale::loglog:
        ll = v;
        break;
      default:
        throw std::domain_error("MDeltaProfile: bad scale");
    }
    if (!(ll > 0.0) || !std::isfinite(ll))
      throw std::domain_error(
          "MDeltaProfile: log M(delta) > 1 violated at a sample");
    v = ll;  // normalized to loglog internally
  }
  Tabulated t;
  t.samples = std::move(samples);
  t.scale = scale;
  return MDeltaProfile(std::move(t));
}

double MDeltaProfile::loglog_at(double delta) const {
  if (!(delta > 0.0)) throw std::domain_error("loglog_at: delta <= 0");
  if (auto* c = std::get_if<Constant>(&v_))
    return std::log(std::log(c->M));
  if (auto* e = std::get_if<Exponential>(&v_))
    return std::log(std::log(e->M) + e->b * std::pow(delta, -e->gamma));
  const auto& t = std::get<Tabulated>(v_);
  const auto& s = t.samples;
  if (delta <= s.front().first) return s.front().second;
  if (delta >= s.back().first) return s.back().second;
  auto it = std::lower_bound(
      s.begin(), s.end(), delta,
      [](const auto& p, double d) { return p.first < d; });
  auto lo = *(it - 1);
  auto hi = *it;
  // interpolation linear in log delta, matching the log-spaced grids the
  // checkers work with
  double w = (std::log(delta) - std::log(lo.first)) /
             (std::log(hi.first) - std::log(lo.first));
  return lo.second + w * (hi.second - lo.second);
}

std::string to_string(Confidence c) {
  return c == Confidence::analytic ? "analytic" : "extrapolated";
}

namespace {

CarlemanResult carleman_closed_form(const MDeltaProfile& m,
                                    const CarlemanOptions& opts) {
  // Constant: the integrand is the constant log log M.
  if (auto* c = std::get_if<MDeltaProfile::Constant>(&m.data())) {
    return {true, M_PI_2 * std::log(std::log(c->M)), Confidence::analytic};
  }
  // Exponential: log log M(delta) ~ gamma log(1/delta) near 0, an
  // integrable singularity, so the integral is finite for every
  // (M, b, gamma).  Value by tanh-sinh, which absorbs the endpoint log.
  QuadratureOptions q;
  q.rel_tol = opts.quad_rel_tol;
  q.max_level = 12;
  double v = tanh_sinh_real([&](double d) { return m.loglog_at(d); }, 0.0,
                            M_PI_2, q);
  return {true, v, Confidence::analytic};
}

}  // namespace

CarlemanResult carleman_loglog(const MDeltaProfile& m,
                               const CarlemanOptions& opts) {
  if (!m.is_tabulated()) return carleman_closed_form(m, opts);

  const auto& t = std::get<MDeltaProfile::Tabulated>(m.data());
  const auto& s = t.samples;
  double d_min = s.front().first;
  double d_max = s.back().first;

  // Trapezoid over the sampled range.
  double body = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i)
    body += 0.5 * (s[i].second + s[i - 1].second) *
            (s[i].first - s[i - 1].first);
  if (d_max < M_PI_2)  // flat continuation of the last sample to pi/2
    body += s.back().second * (M_PI_2 - d_max);

  // Improper part toward 0: compare contributions of successive decades
  // [d, 10 d].  An integrable tail has geometrically shrinking decades; a
  // ratio at or above opts.divergence_ratio signals divergence.
  auto decade = [&](double lo) {
    QuadratureOptions q;
    q.rel_tol = 1e-9;
    q.max_level = 10;
    return tanh_sinh_real([&](double d) { return m.loglog_at(d); }, lo,
                          std::min(10.0 * lo, d_max), q);
  };
  int decades = static_cast<int>(std::floor(std::log10(d_max / d_min)));
  if (decades < 2) {
    // Not enough range to extrapolate; report the truncated value only.
    return {true, body, Confidence::extrapolated};
  }
  double last = decade(d_min);
  double prev = decade(d_min * 10.0);
  double ratio = prev > 0.0 ? last / prev : 0.0;
  if (ratio >= opts.divergence_ratio) {
    return {false, kInf, Confidence::extrapolated};
  }
  // Geometric extrapolation of the remaining tail below d_min.
  double tail = ratio < 1.0 ? last * ratio / (1.0 - ratio) : 0.0;
  return {true, body + tail, Confidence::extrapolated};
}

ADeltaProfile ADeltaProfile::constant(double a) {
  if (!(a > 0.0)) throw std::domain_error("ADeltaProfile: a must be positive");
  return ADeltaProfile(Constant{a});
}

ADeltaProfile ADeltaProfile::power(double c, double p) {
  if (!(c > 0.0)) throw std::domain_error("ADeltaProfile: c must be positive");
  return ADeltaProfile(Power{c, p});
}

ADeltaProfile ADeltaProfile::tabulated(
    std::vector<std::pair<double, double>> samples) {
  if (samples.empty()) throw std::domain_error("ADeltaProfile: empty grid");
  std::sort(samples.begin(), samples.end());
  for (const auto& [d, a] : samples)
    if (!(d > 0.0) || !(a > 0.0))
      throw std::domain_error("ADeltaProfile: samples must be positive");
  return ADeltaProfile(Tabulated{std::move(samples)});
}

ADeltaProfile ADeltaProfile::callback(std::function<double(double)> f) {
  if (!f) throw std::domain_error("ADeltaProfile: null callback");
  return ADeltaProfile(Callback{std::move(f)});
}

bool a_delta_condition(const ADeltaProfile& a) {
  if (std::get_if<ADeltaProfile::Constant>(&a.data())) return true;
  if (auto* p = std::get_if<ADeltaProfile::Power>(&a.data()))
    return p->p < 1.0;  // c delta^{p-1} -> inf iff p < 1

  // Sampled variants: a(delta)/delta must keep growing toward delta = 0.
  std::vector<std::pair<double, double>> ratios;  // (delta, a/delta)
  if (auto* cb = std::get_if<ADeltaProfile::Callback>(&a.data())) {
    for (int j = 2; j <= 10; ++j) {
      double d = std::pow(10.0, -j);
      double v = cb->f(d);
      if (!(v > 0.0))
        throw std::domain_error("a_delta_condition: a(delta) <= 0");
      ratios.emplace_back(d, v / d);
    }
  } else {
    const auto& t = std::get<ADeltaProfile::Tabulated>(a.data());
    for (const auto& [d, v] : t.samples) ratios.emplace_back(d, v / d);
  }
  if (ratios.size() < 2)
    throw std::domain_error("a_delta_condition: need at least two samples");
  std::sort(ratios.begin(), ratios.end());
  // Monotone growth over the smallest sampled decade, with real gain.
  double d_min = ratios.front().first;
  double last = -kInf;
  double first_in_decade = -1.0;
  for (auto it = ratios.rbegin(); it != ratios.rend(); ++it) {
    if (it->first > 10.0 * d_min) continue;
    if (first_in_decade < 0.0) first_in_decade = it->second;
    if (it->second < last) return false;
    last = it->second;
  }
  return last >= 1.5 * first_in_decade;
}

bool log_integral_divergence(
    const std::vector<std::pair<double, double>>& samples,
    const LogIntegralOptions& opts) {
  if (samples.size() < 16)
    throw std::domain_error("log_integral_divergence: need >= 16 samples");
  auto pts = samples;
  std::sort(pts.begin(), pts.end());

  // Trapezoid of log|P| / (1 + |z|^2) with the arc measure
  // d|z| = |y| / sqrt(c^2 + y^2) dy along the line Re z = c.
  const double c2 = opts.c * opts.c;
  auto integrand = [&](double y, double v) {
    double z2 = c2 + y * y;
    return v * std::fabs(y) / std::sqrt(z2) / (1.0 + z2);
  };
  double y_max = std::max(std::fabs(pts.front().first),
                          std::fabs(pts.back().first));

  auto truncated = [&](double cut) {
    double acc = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      double y0 = pts[i - 1].first, y1 = pts[i].first;
      if (std::fabs(y0) > cut || std::fabs(y1) > cut) continue;
      acc += 0.5 * (integrand(y0, pts[i - 1].second) +
                    integrand(y1, pts[i].second)) *
             (y1 - y0);
    }
    return acc;
  };

  double full = truncated(y_max);
  if (full > opts.threshold) return false;
  // Flattening test: the outermost decade must still contribute a sizable
  // share of the one before it, otherwise the tail is converging.
  double inner2 = truncated(y_max / 100.0);
  double inner1 = truncated(y_max / 10.0);
  double d_outer = full - inner1;
  double d_prev = inner1 - inner2;
  if (d_prev >= 0.0) return false;  // nothing accumulating
  return d_outer <= opts.flatten_ratio * d_prev;
}

double havin_shift(double b, double a, double c) {
  if (!(b > 0.0)) throw std::domain_error("havin_shift: b must be positive");
  if (!(c > 0.0) || !(c < a))
    throw std::domain_error("havin_shift: need 0 < c < a");
  return b / (a - c);
}

double havin_min_constant(
    const std::vector<std::pair<double, double>>& samples, double c) {
  if (samples.empty()) throw std::domain_error("havin_min_constant: no samples");
  double m = 0.0;
  for (const auto& [y, absP] : samples)
    m = std::max(m, absP * std::exp(c * std::fabs(y)));
  return m;
}

bool havin_check(const std::vector<std::pair<double, double>>& samples,
                 double c, double M_h) {
  if (samples.empty()) throw std::domain_error("havin_check: no samples");
  for (const auto& [y, absP] : samples)
    if (!(absP < M_h * std::exp(-c * std::fabs(y)))) return false;
  return true;
}

// ---------------------------------------------------------------- JSON --

namespace {
using nlohmann::json;

json samples_to_json(const std::vector<std::pair<double, double>>& s) {
  json a = json::array();
  for (const auto& [d, v] : s) a.push_back({d, v});
  return a;
}

std::vector<std::pair<double, double>> samples_from_json(const json& a) {
  std::vector<std::pair<double, double>> s;
  for (const auto& e : a) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("profile samples must be [delta, value]");
    s.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return s;
}
}  // namespace

std::string MDeltaProfile::to_json() const {
  json j;
  if (auto* c = std::get_if<Constant>(&v_)) {
    j["variant"] = "constant";
    j["M"] = c->M;
  } else if (auto* e = std::get_if<Exponential>(&v_)) {
    j["variant"] = "exponential";
    j["M"] = e->M;
    j["b"] = e->b;
    j["gamma"] = e->gamma;
  } else {
    const auto& t = std::get<Tabulated>(v_);
    j["variant"] = "tabulated";
    j["scale"] = "loglog";  // normalized representation
    j["samples"] = samples_to_json(t.samples);
  }
  return j.dump();
}

MDeltaProfile MDeltaProfile::from_json(const std::string& text) {
  json j = json::parse(text);
  std::string variant = j.at("variant").get<std::string>();
  if (variant == "constant") return constant(j.at("M").get<double>());
  if (variant == "exponential")
    return exponential(j.at("M").get<double>(), j.at("b").get<double>(),
                       j.at("gamma").get<double>());
  if (variant == "tabulated") {
    Scale s = Scale::linear;
    if (j.contains("scale")) {
      std::string tag = j["scale"].get<std::string>();
      if (tag == "linear")
        s = Scale::linear;
      else if (tag == "log")
        s = Scale::log;
      else if (tag == "loglog")
        s = Scale::loglog;
      else
        throw std::invalid_argument("MDeltaProfile: bad scale tag " + tag);
    }
    return tabulated(samples_from_json(j.at("samples")), s);
  }
  throw std::invalid_argument("MDeltaProfile: bad variant " + variant);
}

std::string ADeltaProfile::to_json() const {
  json j;
  if (auto* c = std::get_if<Constant>(&v_)) {
    j["variant"] = "constant";
    j["a"] = c->a;
  } else if (auto* p = std::get_if<Power>(&v_)) {
    j["variant"] = "power";
    j["coeff"] = p->c;
    j["exponent"] = p->p;
  } else if (auto* t = std::get_if<Tabulated>(&v_)) {
    j["variant"] = "tabulated";
    j["samples"] = samples_to_json(t->samples);
  } else {
    throw std::invalid_argument("ADeltaProfile: callbacks do not serialize");
  }
  return j.dump();
}

ADeltaProfile ADeltaProfile::from_json(const std::string& text) {
  json j = json::parse(text);
  std::string variant = j.at("variant").get<std::string>();
  if (variant == "constant") return constant(j.at("a").get<double>());
  if (variant == "power")
    return power(j.at("coeff").get<double>(), j.at("exponent").get<double>());
  if (variant == "tabulated")
    return tabulated(samples_from_json(j.at("samples")));
  throw std::invalid_argument("ADeltaProfile: bad variant " + variant);
}

}  // namespace gevreykit
