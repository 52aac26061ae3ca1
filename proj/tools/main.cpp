// gevreykit command-line front end: coefficient generation, Borel summation,
// Gevrey estimate verification, uniqueness-class checks, and Stirling error
// tables.  Batch-oriented: every invocation is deterministic and exits with
//   0  success (verify: all checks passed)
//   1  verify found a failing estimate
//   2  parse or domain errors
//   3  Laplace ray obstructed by an approximant pole

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gevreykit/borel.hpp"
#include "gevreykit/errors.hpp"
#include "gevreykit/gevrey.hpp"
#include "gevreykit/mp.hpp"
#include "gevreykit/profiles.hpp"
#include "gevreykit/sectors.hpp"
#include "gevreykit/series.hpp"
#include "gevreykit/stirling.hpp"
#include "json.hpp"

using namespace gevreykit;
using nlohmann::json;

namespace {

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

Complex parse_complex(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return {std::stod(text), 0.0};
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

// Polar grid specs "r1:r2:count@angle" (angle in radians), single points
// "r@angle"; multiple specs separated by ';'.
std::vector<Complex> parse_grid(const std::string& text) {
  std::vector<Complex> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto at = item.find('@');
    double angle = 0.0;
    std::string radial = item;
    if (at != std::string::npos) {
      angle = std::stod(item.substr(at + 1));
      radial = item.substr(0, at);
    }
    auto c1 = radial.find(':');
    if (c1 == std::string::npos) {
      grid.push_back(std::polar(std::stod(radial), angle));
      continue;
    }
    auto c2 = radial.find(':', c1 + 1);
    if (c2 == std::string::npos)
      throw std::invalid_argument("grid spec must be r1:r2:count@angle");
    double r1 = std::stod(radial.substr(0, c1));
    double r2 = std::stod(radial.substr(c1 + 1, c2 - c1 - 1));
    long count = std::stol(radial.substr(c2 + 1));
    if (count < 1) throw std::invalid_argument("grid count must be >= 1");
    for (long i = 0; i < count; ++i) {
      double r = count == 1 ? r1 : r1 + (r2 - r1) * i / double(count - 1);
      grid.push_back(std::polar(r, angle));
    }
  }
  if (grid.empty()) throw std::invalid_argument("empty grid");
  return grid;
}

GevreyExpansion load_expansion(const std::string& path) {
  json j = json::parse(slurp(path));
  CoefficientSequence coeffs =
      j.contains("coeffs_file")
          ? sequence_from_json(slurp(j["coeffs_file"].get<std::string>()))
          : sequence_from_json(j.at("coeffs").dump());
  return GevreyExpansion::make(
      std::move(coeffs), j.value("order", 1.0), j.at("M").get<double>(),
      j.at("a").get<double>(), j.value("sigma", 0.0), j.value("K_P", 1.0));
}

int cmd_coeffs(const std::string& kind, int n, const std::string& out) {
  CoefficientSequence seq;
  if (kind == "bernoulli")
    seq = bernoulli_numbers(n);
  else if (kind == "binet")
    seq = binet_taylor_coeffs(n);
  else if (kind == "stirling")
    seq = stirling_coeffs(n);
  else {
    std::cerr << "error: unknown coefficient kind '" << kind
              << "' (expected bernoulli, binet, or stirling)\n";
    return 2;
  }
  emit(sequence_to_json(seq), out);
  return 0;
}

int cmd_borel_sum(const std::string& coeff_file, const std::string& z_text,
                  int m, int n, double ray, int quad_nodes,
                  const std::string& scheme, double tol,
                  const std::string& out) {
  auto p = sequence_from_json(slurp(coeff_file));
  Complex z = parse_complex(z_text);
  BorelSumConfig cfg;
  cfg.m = m;
  cfg.n = n;
  cfg.ray_angle = ray;
  cfg.quad.nodes = quad_nodes;
  cfg.quad.tolerance = tol;
  if (scheme == "gauss-laguerre")
    cfg.quad.scheme = QuadScheme::gauss_laguerre;
  else if (scheme != "tanh-sinh")
    throw std::invalid_argument("scheme must be tanh-sinh or gauss-laguerre");
  auto sum = borel_sum(p, z, cfg);
  emit(sum.to_json(), out);
  return 0;
}

int cmd_verify(const std::string& expansion_file, const std::string& sampler,
               const std::string& grid_text, int n_max, double tol,
               double noise_rel, double noise_abs, const std::string& format,
               const std::string& out) {
  auto e = load_expansion(expansion_file);
  if (n_max < 0) n_max = static_cast<int>(e.coeffs.size()) - 1;

  std::function<Complex(Complex)> f;
  std::vector<Complex> grid;
  Sector sector(-M_PI_2, M_PI_2);

  if (sampler == "binet") {
    f = [](Complex z) { return binet_P(z, binet_config_for(z)); };
    grid = parse_grid(grid_text);
  } else if (sampler.rfind("counterexample:", 0) == 0) {
    double delta = std::stod(sampler.substr(15));
    auto fam = counterexample([](Complex) { return Complex{1.0, 0.0}; },
                              delta, 1.0);
    f = fam.sampler;
    sector = fam.sector;
    grid = parse_grid(grid_text);
  } else if (sampler.rfind("file:", 0) == 0) {
    // the sampled file fixes both the grid and the values; accept any
    // argument off the negative real axis
    sector = Sector(-M_PI, M_PI);
    json j = json::parse(slurp(sampler.substr(5)));
    auto values =
        std::make_shared<std::map<std::pair<double, double>, Complex>>();
    for (const auto& row : j) {
      Complex z{row.at("z")[0].get<double>(), row.at("z")[1].get<double>()};
      Complex v{row.at("value")[0].get<double>(),
                row.at("value")[1].get<double>()};
      grid.push_back(z);
      (*values)[{z.real(), z.imag()}] = v;
    }
    f = [values](Complex z) {
      auto it = values->find({z.real(), z.imag()});
      if (it == values->end())
        throw std::domain_error("file sampler: no value for grid point");
      return it->second;
    };
  } else {
    throw std::invalid_argument(
        "sampler must be binet, counterexample:<delta>, or file:<path>");
  }

  VerifyOptions opts;
  opts.tolerance = tol;
  opts.noise_floor_rel = noise_rel;
  opts.noise_floor_abs = noise_abs;
  auto rep = verify_gevrey(f, e, sector, grid, n_max, opts);
  emit(format == "json" ? rep.to_json() : rep.to_csv(), out);
  return rep.pass ? 0 : 1;
}

int cmd_uniqueness(const std::string& m_profile_file,
                   const std::string& a_profile_file,
                   const std::string& sector_text, double k,
                   const std::string& out) {
  auto colon = sector_text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("sector spec must be alpha:beta");
  Sector s(std::stod(sector_text.substr(0, colon)),
           std::stod(sector_text.substr(colon + 1)));
  auto m = MDeltaProfile::from_json(slurp(m_profile_file));

  json verdict;
  verdict["sector"] = {{"alpha", s.alpha}, {"beta", s.beta}};
  verdict["opening"] = opening(s);
  verdict["k"] = k;
  Criticality crit = criticality(s, k);
  verdict["criticality"] = to_string(crit);

  auto loglog = carleman_loglog(m);
  verdict["loglog"] = {{"finite", loglog.finite},
                       {"value", loglog.finite ? json(loglog.value) : json()},
                       {"confidence", to_string(loglog.confidence)}};

  std::optional<bool> a_ok;
  if (!a_profile_file.empty())
    a_ok = a_delta_condition(ADeltaProfile::from_json(slurp(a_profile_file)));
  verdict["a_condition"] = a_ok ? json(*a_ok) : json();

  std::string unique, reason;
  if (crit == Criticality::subcritical) {
    unique = "no";
    reason = "subcritical opening: the counterexample family phi(z) e^{-z}/z "
             "realizes the same null expansion";
  } else if (a_ok && !*a_ok) {
    unique = "unknown";
    reason = "necessary condition a(delta)/delta -> inf fails";
  } else if (loglog.finite) {
    unique = "yes";
    reason = "critical opening with finite log log integral";
  } else {
    unique = "unknown";
    reason = "log log integral diverges; no uniqueness criterion applies";
  }
  verdict["unique"] = unique;
  verdict["reason"] = reason;
  emit(verdict.dump(2), out);
  return 0;
}

int cmd_stirling_table(const std::string& z_list, long prec,
                       const std::string& out) {
  std::vector<double> zs;
  std::stringstream ss(z_list);
  std::string item;
  while (std::getline(ss, item, ',')) zs.push_back(std::stod(item));
  if (zs.empty()) throw std::invalid_argument("empty |z| list");

  std::string csv = "abs_z,n_opt,bound,actual_error,error_cap\n";
  for (double zd : zs) {
    auto tr = optimal_error_stirling({zd, 0.0});
    mp::Real z = mp::Real::of(zd, prec);
    mp::Real P = mp::binet_P_quad(z, prec);
    mp::Real S = mp::stirling_partial_sum(z, static_cast<int>(tr.n_opt), prec);
    double actual = abs(P - S).to_double();
    double cap = 0.94891 * std::exp(-2.0 * M_PI * zd);
    csv += g17(zd) + "," + std::to_string(tr.n_opt) + "," + g17(tr.bound) +
           "," + g17(actual) + "," + g17(cap) + "\n";
  }
  emit(csv, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gevreykit: Gevrey expansions, Borel summation, and "
               "uniqueness-class diagnostics"};
  app.require_subcommand(1);

  // coeffs
  std::string kind, out;
  int n_terms = 8;
  auto* coeffs = app.add_subcommand("coeffs", "generate exact coefficients");
  coeffs->add_option("kind", kind, "bernoulli | binet | stirling")->required();
  coeffs->add_option("--n", n_terms, "highest index to generate")
      ->required()
      ->check(CLI::NonNegativeNumber);
  coeffs->add_option("--out", out, "output path (default stdout)");

  // borel-sum
  std::string coeff_file, z_text = "5,0", scheme = "tanh-sinh", bs_out;
  int bs_m = -1, bs_n = -1, quad_nodes = 64;
  double ray = 0.0, bs_tol = 1e-12;
  auto* bsum =
      app.add_subcommand("borel-sum", "Borel-Laplace summation of a series");
  bsum->add_option("coeffs", coeff_file, "coefficient JSON file")->required();
  bsum->add_option("--z", z_text, "evaluation point re,im")->required();
  bsum->add_option("--m", bs_m, "numerator order (default auto)");
  bsum->add_option("--n", bs_n, "denominator order (default auto)");
  bsum->add_option("--ray", ray, "Laplace ray angle (radians)");
  bsum->add_option("--quad-nodes", quad_nodes, "gauss-laguerre node count");
  bsum->add_option("--scheme", scheme, "tanh-sinh | gauss-laguerre");
  bsum->add_option("--tol", bs_tol, "quadrature tolerance")
      ->check(CLI::PositiveNumber);
  bsum->add_option("--out", bs_out, "output path (default stdout)");

  // verify
  std::string exp_file, sampler = "binet", grid_text = "5:10:2@0";
  std::string format = "csv", v_out;
  int n_max = -1;
  double v_tol = 1e-9, noise_rel = 0.0, noise_abs = 0.0;
  auto* verify =
      app.add_subcommand("verify", "check a Gevrey bound family on a grid");
  verify->add_option("expansion", exp_file, "expansion JSON file")->required();
  verify->add_option("--sampler", sampler,
                     "binet | counterexample:<delta> | file:<path>");
  verify->add_option("--grid", grid_text, "r1:r2:count@angle[;...]");
  verify->add_option("--n-max", n_max, "highest truncation order");
  verify->add_option("--tol", v_tol, "relative slack on ratio <= 1")
      ->check(CLI::PositiveNumber);
  verify->add_option("--noise-floor-rel", noise_rel,
                     "mark bounds below rel*|P(z)| indeterminate");
  verify->add_option("--noise-floor-abs", noise_abs,
                     "mark bounds below this absolute level indeterminate");
  verify->add_option("--format", format, "csv | json");
  verify->add_option("--out", v_out, "output path (default stdout)");

  // uniqueness
  std::string m_file, a_file;
  std::string sector_text = "-1.5707963267948966:1.5707963267948966";
  double k = 1.0;
  std::string u_out;
  auto* uniq = app.add_subcommand("uniqueness", "classify a uniqueness class");
  uniq->add_option("--m-profile", m_file, "M(delta) profile JSON")->required();
  uniq->add_option("--a-profile", a_file, "a(delta) profile JSON (optional)");
  uniq->add_option("--sector", sector_text, "alpha:beta (radians)");
  uniq->add_option("--k", k, "Gevrey order");
  uniq->add_option("--out", u_out, "output path (default stdout)");

  // stirling-table
  std::string z_list = "5,10,20", t_out;
  long prec = 320;
  auto* table = app.add_subcommand("stirling-table",
                                   "optimal-truncation error table");
  table->add_option("--z-list", z_list, "comma-separated |z| values");
  table->add_option("--prec", prec, "oracle precision in bits")
      ->check(CLI::Range(64L, 4096L));
  table->add_option("--out", t_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*coeffs) return cmd_coeffs(kind, n_terms, out);
    if (*bsum)
      return cmd_borel_sum(coeff_file, z_text, bs_m, bs_n, ray, quad_nodes,
                           scheme, bs_tol, bs_out);
    if (*verify)
      return cmd_verify(exp_file, sampler, grid_text, n_max, v_tol, noise_rel,
                        noise_abs, format, v_out);
    if (*uniq) return cmd_uniqueness(m_file, a_file, sector_text, k, u_out);
    if (*table) return cmd_stirling_table(z_list, prec, t_out);
  } catch (const RayObstructed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
