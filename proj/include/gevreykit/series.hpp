#ifndef GEVREYKIT_SERIES_HPP
#define GEVREYKIT_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gevreykit/rational.hpp"

namespace gevreykit {

enum class SeqKind { bernoulli, binet_taylor, stirling, user };

std::string to_string(SeqKind kind);
SeqKind seq_kind_from_string(const std::string& tag);

// Index-contiguous exact coefficient list starting at 0.
//
// Conventions per kind:
//   bernoulli    entry j holds B_{2j}; B_1 = -1/2 is folded into the -t/2
//                term of the generating function and never stored
//   binet_taylor entry k holds f_k, the Taylor coefficient of
//                F(t) = (1/t)(1/2 - 1/t + 1/(e^t - 1)) at t = 0
//   stirling     entry k holds p_k = f_k k!
//   user         no structural constraints
struct CoefficientSequence {
  SeqKind kind = SeqKind::user;
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }
  const Rational& operator[](std::size_t i) const { return values[i]; }

  // Checks the kind-specific invariants; throws std::invalid_argument.
  static CoefficientSequence checked(SeqKind kind,
                                     std::vector<Rational> values);

  std::vector<double> as_doubles() const;
};

// Exact B_0, B_2, ..., B_{2 n_max} from the convolution recurrence of
// t/(e^t - 1) against (e^t - 1)/t.
CoefficientSequence bernoulli_numbers(int n_max);

// Exact f_0..f_{n_max}: power-series division of the numerator series
// t/2 - 1 + t/(e^t - 1) by t^2 (the constant and linear coefficients cancel
// identically, which is checked).
CoefficientSequence binet_taylor_coeffs(int n_max);

// Exact p_0..p_{n_max}, p_k = f_k k!, cross-checked against
// B_{2k} / (2k (2k-1)) at every even index.  A mismatch aborts.
CoefficientSequence stirling_coeffs(int n_max);

// Leading term (-1)^n 2 (2n+2)! / (2 pi)^{2n+2} of B_{2n+2}, evaluated in
// log space.  Saturates to +/-inf once the exponent leaves double range.
double bernoulli_asymptotic(int n);

// Inclusive index window into a sequence.
struct IndexWindow {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

// Heuristic Gevrey order from coefficient growth: least-squares fit of
// log|p_n| with regressors {n log n, n, 1} over the window (zero entries are
// skipped, as with the vanishing odd Stirling coefficients), order = 1/slope
// of the n log n regressor.  Returns +inf when no factorial growth is
// detected.  Not a theorem; a diagnostic.
double gevrey_order_estimate(const CoefficientSequence& seq, IndexWindow w);

// JSON: {"kind": tag, "values": [["num","den"], ...]} with exact decimal
// strings.
std::string sequence_to_json(const CoefficientSequence& seq);
CoefficientSequence sequence_from_json(const std::string& text);

}  // namespace gevreykit

#endif
