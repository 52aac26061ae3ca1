#include "gevreykit/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace gevreykit {

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::pass:
      return "pass";
    case RowStatus::fail:
      return "fail";
    case RowStatus::skipped_outside:
      return "skipped";
    case RowStatus::skipped_radius:
      return "skipped";
    case RowStatus::indeterminate:
      return "indeterminate";
  }
  return "fail";
}

std::size_t EstimateReport::count(RowStatus s) const {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (r.status == s) ++n;
  return n;
}

void EstimateReport::finalize() {
  pass = true;
  for (const auto& r : rows)
    if (r.status == RowStatus::fail) pass = false;
}

namespace {
std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}
}  // namespace

std::string EstimateReport::to_csv() const {
  std::string out = "re(z),im(z),n,remainder,bound,ratio,pass\n";
  for (const auto& r : rows) {
    out += g17(r.z.real()) + "," + g17(r.z.imag()) + "," +
           std::to_string(r.n) + "," + g17(r.remainder) + "," + g17(r.bound) +
           "," + g17(r.ratio) + "," + to_string(r.status) + "\n";
  }
  return out;
}

std::string EstimateReport::to_json() const {
  nlohmann::json j;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  auto rows_j = nlohmann::json::array();
  for (const auto& r : rows) {
    rows_j.push_back({{"z", {r.z.real(), r.z.imag()}},
                      {"n", r.n},
                      {"remainder", r.remainder},
                      {"bound", r.bound},
                      {"ratio", r.ratio},
                      {"status", to_string(r.status)}});
  }
  j["rows"] = std::move(rows_j);
  return j.dump();
}

}  // namespace gevreykit
