#include "gevreykit/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gevreykit/errors.hpp"
#include "json.hpp"

namespace gevreykit {

std::string to_string(SeqKind kind) {
  switch (kind) {
    case SeqKind::bernoulli:
      return "bernoulli";
    case SeqKind::binet_taylor:
      return "binet-taylor";
    case SeqKind::stirling:
      return "stirling";
    case SeqKind::user:
      return "user";
  }
  return "user";
}

SeqKind seq_kind_from_string(const std::string& tag) {
  if (tag == "bernoulli") return SeqKind::bernoulli;
  if (tag == "binet-taylor") return SeqKind::binet_taylor;
  if (tag == "stirling") return SeqKind::stirling;
  if (tag == "user") return SeqKind::user;
  throw std::invalid_argument("unknown coefficient kind: " + tag);
}

CoefficientSequence CoefficientSequence::checked(
    SeqKind kind, std::vector<Rational> values) {
  if (values.empty())
    throw std::invalid_argument("coefficient sequence must be nonempty");
  switch (kind) {
    case SeqKind::bernoulli:
      if (values[0] != Rational(1))
        throw std::invalid_argument("bernoulli sequence must start with B_0 = 1");
      // (-1)^{k+1} B_{2k} > 0 for k >= 1
      for (std::size_t k = 1; k < values.size(); ++k)
        if ((k % 2 == 1 ? values[k] : -values[k]).sign() <= 0)
          throw std::invalid_argument(
              "bernoulli sequence violates the sign alternation of B_{2k}");
      break;
    case SeqKind::binet_taylor:
    case SeqKind::stirling:
      for (std::size_t k = 1; k < values.size(); k += 2)
        if (!values[k].is_zero())
          throw std::invalid_argument(
              "odd-index coefficients must vanish for an even F(t)");
      break;
    case SeqKind::user:
      break;
  }
  return CoefficientSequence{kind, std::move(values)};
}

std::vector<double> CoefficientSequence::as_doubles() const {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i].to_double();
  return out;
}

namespace {

// Taylor coefficients b_n of t/(e^t - 1), all indices.  Multiplying by the
// series of (e^t - 1)/t, whose coefficients are 1/(n+1)!, gives the
// convolution identity  sum_{j<=n} b_j / (n - j + 1)! = [n == 0].
std::vector<Rational> egf_bernoulli(int n_top) {
  std::vector<Rational> inv_fact(n_top + 2);
  mpz_class f = 1;
  inv_fact[0] = Rational(1);
  for (int k = 1; k <= n_top + 1; ++k) {
    f *= k;
    inv_fact[k] = Rational(mpq_class(1, f));
  }
  std::vector<Rational> b(n_top + 1);
  b[0] = Rational(1);
  for (int n = 1; n <= n_top; ++n) {
    Rational acc;
    for (int j = 0; j < n; ++j) acc = acc + b[j] * inv_fact[n - j + 1];
    b[n] = -acc;
  }
  return b;
}

}  // namespace

CoefficientSequence bernoulli_numbers(int n_max) {
  if (n_max < 0) throw std::domain_error("bernoulli_numbers: n_max < 0");
  auto b = egf_bernoulli(2 * n_max);
  std::vector<Rational> out(n_max + 1);
  for (int j = 0; j <= n_max; ++j)
    out[j] = b[2 * j] * Rational(factorial_mpz(2 * j));
  return CoefficientSequence::checked(SeqKind::bernoulli, std::move(out));
}

CoefficientSequence binet_taylor_coeffs(int n_max) {
  if (n_max < 0) throw std::domain_error("binet_taylor_coeffs: n_max < 0");
  // Numerator series of F(t): t/2 - 1 + t/(e^t - 1).
  auto b = egf_bernoulli(n_max + 2);
  std::vector<Rational> c(n_max + 3);
  c[0] = b[0] - Rational(1);
  c[1] = b[1] + Rational(1, 2);
  for (int n = 2; n < static_cast<int>(c.size()); ++n) c[n] = b[n];
  // Division by t^2 is exact: both low coefficients cancel.
  GK_INTERNAL_CHECK(c[0].is_zero() && c[1].is_zero());
  std::vector<Rational> f(n_max + 1);
  for (int k = 0; k <= n_max; ++k) f[k] = c[k + 2];
  return CoefficientSequence::checked(SeqKind::binet_taylor, std::move(f));
}

CoefficientSequence stirling_coeffs(int n_max) {
  if (n_max < 0) throw std::domain_error("stirling_coeffs: n_max < 0");
  auto f = binet_taylor_coeffs(n_max);
  auto bern = bernoulli_numbers(n_max / 2 + 1);
  std::vector<Rational> p(n_max + 1);
  for (int k = 0; k <= n_max; ++k) {
    p[k] = f[k] * Rational(factorial_mpz(k));
    if (k % 2 == 0) {
      // p_{2k-2} = B_{2k} / (2k (2k-1)) must agree exactly.
      long twok = k + 2;
      Rational via_bern = bern[twok / 2] / Rational(twok * (twok - 1));
      GK_INTERNAL_CHECK(p[k] == via_bern);
    } else {
      GK_INTERNAL_CHECK(p[k].is_zero());
    }
  }
  return CoefficientSequence::checked(SeqKind::stirling, std::move(p));
}

double bernoulli_asymptotic(int n) {
  if (n < 0) throw std::domain_error("bernoulli_asymptotic: n < 0");
  double ln2pi = std::log(2.0 * M_PI);
  double e = M_LN2 + std::lgamma(2.0 * n + 3.0) - (2.0 * n + 2.0) * ln2pi;
  double mag = std::exp(e);  // overflows to +inf for very large n
  return (n % 2 == 0) ? mag : -mag;
}

double gevrey_order_estimate(const CoefficientSequence& seq, IndexWindow w) {
  if (w.hi < w.lo || w.hi >= seq.size())
    throw std::domain_error("gevrey_order_estimate: bad window");
  if (w.hi - w.lo + 1 < 8)
    throw std::domain_error("gevrey_order_estimate: window length < 8");

  // Least squares of y = log|p_n| on {n log n, n, 1}; zero entries skipped.
  double s[3][3] = {};
  double r[3] = {};
  std::size_t used = 0;
  for (std::size_t n = w.lo; n <= w.hi; ++n) {
    if (seq[n].is_zero()) continue;
    double nn = static_cast<double>(n);
    double x[3] = {nn > 0 ? nn * std::log(nn) : 0.0, nn, 1.0};
    double y = seq[n].log_abs();
    for (int i = 0; i < 3; ++i) {
      r[i] += x[i] * y;
      for (int j = 0; j < 3; ++j) s[i][j] += x[i] * x[j];
    }
    ++used;
  }
  if (used < 4) throw std::runtime_error("degenerate sequence");
  if (seq[w.hi].is_zero() && (w.hi == 0 || seq[w.hi - 1].is_zero()))
    throw std::domain_error("gevrey_order_estimate: zero window tail");

  // 3x3 Cramer solve.
  auto det3 = [](const double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  double d = det3(s);
  if (std::fabs(d) < 1e-30) throw std::runtime_error("degenerate sequence");
  double m0[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m0[i][j] = (j == 0) ? r[i] : s[i][j];
  double slope = det3(m0) / d;

  if (slope < 1e-9) return std::numeric_limits<double>::infinity();
  return 1.0 / slope;
}

std::string sequence_to_json(const CoefficientSequence& seq) {
  nlohmann::json j;
  j["kind"] = to_string(seq.kind);
  auto vals = nlohmann::json::array();
  for (const auto& v : seq.values)
    vals.push_back({v.num_str(), v.den_str()});
  j["values"] = std::move(vals);
  return j.dump();
}

CoefficientSequence sequence_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SeqKind kind = seq_kind_from_string(j.at("kind").get<std::string>());
  std::vector<Rational> values;
  for (const auto& pair : j.at("values")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("coefficient entries must be [num, den]");
    values.emplace_back(pair[0].get<std::string>(),
                        pair[1].get<std::string>());
  }
  return CoefficientSequence::checked(kind, std::move(values));
}

}  // namespace gevreykit
