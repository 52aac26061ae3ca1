#ifndef GEVREYKIT_REPORT_HPP
#define GEVREYKIT_REPORT_HPP

#include <complex>
#include <string>
#include <vector>

namespace gevreykit {

enum class RowStatus {
  pass,
  fail,
  skipped_outside,   // grid point outside the sector
  skipped_radius,    // |z| at or below the sigma exclusion
  indeterminate,     // bound below the configured measurement noise floor
};
std::string to_string(RowStatus s);

struct EstimateRow {
  std::complex<double> z;
  int n;
  double remainder;
  double bound;
  double ratio;
  RowStatus status;
};

// Materialized comparison of measured remainders against a bound family.
// pass holds iff no row failed; skipped and indeterminate rows are excluded
// from the verdict but kept in the output.
struct EstimateReport {
  double tolerance = 0.0;
  bool pass = false;
  std::vector<EstimateRow> rows;

  std::size_t count(RowStatus s) const;
  void finalize();  // recomputes pass from rows

  // columns: re(z),im(z),n,remainder,bound,ratio,pass
  std::string to_csv() const;
  std::string to_json() const;
};

}  // namespace gevreykit

#endif
