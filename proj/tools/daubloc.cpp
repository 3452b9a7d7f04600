// daubloc: eigenvalues and operator norms of radial localization operators.
//
// Interval lists are flat pairs a1,b1,a2,b2,... in the profile domain, the
// half-line of r^2 values. The pi scaling happens inside the library.

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "daubloc/error.hpp"
#include "daubloc/experiments.hpp"
#include "daubloc/quadrature_oracle.hpp"
#include "daubloc/serialize.hpp"
#include "daubloc/spectrum.hpp"
#include "daubloc/verify.hpp"

namespace {

using daubloc::io::Json;

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

double parse_number(const std::string& text, const std::string& flag) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(value)) {
    throw daubloc::ValidationError(flag + ": '" + text + "' is not a finite number");
  }
  return value;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  for (const std::string& part : split(text)) out.push_back(parse_number(part, flag));
  return out;
}

int parse_count(double value, const std::string& flag) {
  if (value != std::floor(value) || value < 1 || value > 1e7) {
    throw daubloc::ValidationError(flag + ": count must be a positive integer");
  }
  return static_cast<int>(value);
}

struct GridSpec {
  double lo;
  double hi;
  int count;
};

GridSpec parse_grid(const std::string& text, const std::string& flag) {
  const std::vector<double> v = parse_list(text, flag);
  if (v.size() != 3) throw daubloc::ValidationError(flag + " expects min,max,count");
  return {v[0], v[1], parse_count(v[2], flag)};
}

daubloc::IntervalUnion parse_intervals(const std::string& text) {
  const std::vector<double> v = parse_list(text, "--intervals");
  if (v.size() % 2 != 0) throw daubloc::ValidationError("--intervals expects an even count of endpoints a1,b1,a2,b2,...");
  std::vector<std::pair<double, double>> pairs;
  for (std::size_t i = 0; i < v.size(); i += 2) pairs.emplace_back(v[i], v[i + 1]);
  return daubloc::make_union(pairs);
}

struct Output {
  std::string format = "json";
  std::string out;
  std::string stem;  ///< file name used when --out names a directory

  void emit(const Json& json, const std::string& csv) const {
    const std::string text = format == "csv" ? csv : daubloc::io::dump(json);
    if (out.empty()) {
      std::cout << text;
      return;
    }
    std::filesystem::path path(out);
    if (std::filesystem::is_directory(path)) path /= stem + "." + format;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw daubloc::ValidationError("cannot open '" + path.string() + "' for writing");
    file << text;
    if (!file) throw daubloc::ValidationError("failed writing '" + path.string() + "'");
  }
};

// Debugging path: every mass from the brute-force integrator instead of the
// incomplete gamma evaluation. Only the cutoff comes from the library.
double oracle_mass(const daubloc::IntervalUnion& E, daubloc::Index k) {
  double total = 0.0;
  for (const daubloc::Interval& piece : E.intervals()) {
    total += daubloc::oracle::integrate_fk(k, std::numbers::pi * piece.a, std::numbers::pi * piece.b, 1e-14).value;
  }
  return total;
}

daubloc::Spectrum oracle_spectrum(const daubloc::IntervalUnion& E, std::optional<daubloc::Index> K) {
  const double top = std::numbers::pi * E.sup();
  const daubloc::Index last = K ? *K : daubloc::auto_cutoff(top);
  daubloc::Spectrum sp;
  for (daubloc::Index k = 0; k <= last; ++k) sp.lambdas.push_back(oracle_mass(E, k));
  sp.tail_bound = E.empty() ? 0.0 : daubloc::oracle::integrate_fk(last + 1, 0.0, top, 1e-14).value;
  sp.set_measure_scaled = std::numbers::pi * E.measure();
  return sp;
}

daubloc::NormEstimate oracle_norm(const daubloc::IntervalUnion& E) {
  const daubloc::Spectrum sp = oracle_spectrum(E, std::nullopt);
  daubloc::NormEstimate est;
  for (std::size_t k = 0; k < sp.lambdas.size(); ++k) {
    if (sp.lambdas[k] > est.value) {
      est.value = sp.lambdas[k];
      est.argmax_k = static_cast<daubloc::Index>(k);
    }
  }
  est.tail_bound = sp.tail_bound;
  est.k_searched = static_cast<daubloc::Index>(sp.lambdas.size());
  return est;
}

std::string csv_of(const daubloc::NormEstimate& e) {
  using daubloc::io::format_number;
  return "value,argmax_k,tail_bound,k_searched\n" + format_number(e.value) + "," + std::to_string(e.argmax_k) + "," +
         format_number(e.tail_bound) + "," + std::to_string(e.k_searched) + "\n";
}

daubloc::CantorReport single_cantor(int n, double piR2, bool lambda0_only) {
  daubloc::CantorReport report;
  report.rows.push_back(daubloc::cantor_row(n, piR2, "sweep", lambda0_only));
  const daubloc::CantorRow& row = report.rows.front();
  report.envelope_lambda0 = daubloc::envelope_of(report.rows, n, true);
  report.envelope = lambda0_only ? report.envelope_lambda0 : daubloc::envelope_of(report.rows, n);
  if (row.in_range) {
    report.per_n.push_back(
        daubloc::summarize_ratios(n, {piR2}, {lambda0_only ? row.ratio_lambda0 : row.ratio_norm}));
  }
  return report;
}

int run_verify(const std::string& suite, const Output& output) {
  const std::vector<daubloc::verify::SuiteResult> results = daubloc::verify::run_suites(suite);
  Json suites = Json::array();
  std::string csv = "suite,property,checks,failures\n";
  std::size_t failures = 0;
  std::size_t checks = 0;
  for (const auto& result : results) {
    Json properties = Json::array();
    for (const auto& p : result.properties) {
      properties.push_back(Json{{"name", p.name}, {"checks", p.checks}, {"failures", p.failures}, {"examples", p.examples}});
      csv += result.suite + "," + p.name + "," + std::to_string(p.checks) + "," + std::to_string(p.failures) + "\n";
      for (const std::string& example : p.examples) {
        std::cerr << "violation: " << result.suite << ": " << p.name << ": " << example << "\n";
      }
    }
    suites.push_back(Json{{"suite", result.suite},
                          {"checks", result.checks()},
                          {"failures", result.failures()},
                          {"properties", properties}});
    checks += result.checks();
    failures += result.failures();
  }
  output.emit(Json{{"suites", suites}, {"checks", checks}, {"failures", failures}}, csv);
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalues and operator norms of radially symmetric localization operators"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  double tol = 1e-12;
  app.add_option("--tol", tol, "Tolerance for infinite sums, in (0, 1e-3]")->capture_default_str();
  app.add_option("--format", output.format, "Output encoding")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", output.out, "Output file, or a directory for <subcommand>.<format>");
  bool use_oracle = false;
  app.add_flag("--oracle", use_oracle)->group("");

  std::string intervals;
  std::optional<long long> kmax;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues lambda_0..lambda_K of a finite interval union");
  spectrum_cmd->add_option("--intervals", intervals, "Profile intervals a1,b1,a2,b2,...")->required();
  spectrum_cmd->add_option("--kmax", kmax, "Last index K (default: automatic cutoff), at most 1e7");

  std::string norm_intervals;
  std::string cantor_arg;
  auto* norm_cmd = app.add_subcommand("norm", "Operator norm of an interval union or a Cantor iterate");
  auto* norm_iv = norm_cmd->add_option("--intervals", norm_intervals, "Profile intervals a1,b1,a2,b2,...");
  auto* norm_ct = norm_cmd->add_option("--cantor", cantor_arg, "Cantor iterate L,n");
  norm_iv->excludes(norm_ct);
  norm_cmd->require_option(1);

  std::string ring_grid;
  auto* ring_cmd = app.add_subcommand("ring", "Thin rings [R^2, R^2 + 1/pi]");
  ring_cmd->add_option("--piR2-grid", ring_grid, "Log grid min,max,count of pi R^2")->required();

  std::string s_grid;
  auto* comb_cmd = app.add_subcommand("comb", "Equidistant interval sets E(s)");
  comb_cmd->add_option("--s-grid", s_grid, "Linear grid min,max,count of s in [0, 1]")->required();

  daubloc::CantorOptions cantor;
  std::optional<int> single_n;
  std::optional<double> single_x;
  auto* cantor_cmd = app.add_subcommand("cantor", "Cantor disks: sweep over iterates or a single row");
  auto* nmax_opt = cantor_cmd->add_option("--nmax", cantor.n_max, "Largest iterate of the sweep, at most 16");
  cantor_cmd->add_option("--per-n", cantor.x_per_n, "Log-spaced pi R^2 values per iterate")->capture_default_str();
  cantor_cmd->add_flag("--fup", cantor.fup, "Add the coupled row pi R^2 = c 3^{n/2} per iterate");
  cantor_cmd->add_option("--fup-const", cantor.fup_const, "Coupling constant c")->capture_default_str();
  auto* n_opt = cantor_cmd->add_option("--n", single_n, "Iterate of a single row");
  auto* x_opt = cantor_cmd->add_option("--piR2", single_x, "pi R^2 of a single row");
  cantor_cmd->add_flag("--lambda0-only", cantor.lambda0_only, "Skip the spectrum, report lambda_0 only");
  n_opt->needs(x_opt);
  x_opt->needs(n_opt);
  nmax_opt->excludes(n_opt);

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites; exit 2 on any violation");
  verify_cmd->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"gamma", "sets", "spectrum", "cantor", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const auto parsed = app.get_subcommands();
    std::cerr << "error: " << e.what() << "\n\n" << (parsed.empty() ? app.help() : parsed.front()->help());
    return 1;
  }

  try {
    if (!(tol > 0.0 && tol <= 1e-3)) throw daubloc::ValidationError("--tol must lie in (0, 1e-3]");
    output.stem = app.get_subcommands().front()->get_name();
    if (use_oracle && !*spectrum_cmd && !*norm_cmd) throw daubloc::ValidationError("--oracle applies to spectrum and norm");

    if (*spectrum_cmd) {
      if (kmax && (*kmax < 0 || *kmax > daubloc::kMaxIndex)) throw daubloc::ValidationError("--kmax must lie in [0, 1e7]");
      const auto set = parse_intervals(intervals);
      const auto K = kmax ? std::optional<daubloc::Index>(*kmax) : std::nullopt;
      const auto sp = use_oracle ? oracle_spectrum(set, K) : daubloc::spectrum(set, K);
      output.emit(daubloc::io::to_json(sp), daubloc::io::to_csv(sp));
    } else if (*norm_cmd) {
      daubloc::IntervalUnion set;
      if (!cantor_arg.empty()) {
        const std::vector<double> v = parse_list(cantor_arg, "--cantor");
        if (v.size() != 2 || v[1] != std::floor(v[1]) || v[1] < 0) {
          throw daubloc::ValidationError("--cantor expects L,n with an integer n >= 0");
        }
        set = daubloc::cantor_expand(daubloc::CantorSpec(v[0], static_cast<int>(v[1])));
      } else {
        set = parse_intervals(norm_intervals);
      }
      const auto est = use_oracle ? oracle_norm(set) : daubloc::operator_norm(set);
      output.emit(daubloc::io::to_json(est), csv_of(est));
    } else if (*ring_cmd) {
      const GridSpec g = parse_grid(ring_grid, "--piR2-grid");
      const auto report = daubloc::run_ring(daubloc::log_grid(g.lo, g.hi, g.count));
      for (const auto& row : report.rows) {
        if (row.skipped) std::cerr << "warning: piR2 = " << row.piR2 << " " << row.note << "\n";
      }
      output.emit(daubloc::io::to_json(report), daubloc::io::to_csv(report));
    } else if (*comb_cmd) {
      const GridSpec g = parse_grid(s_grid, "--s-grid");
      if (g.lo < 0.0 || g.hi > 1.0) throw daubloc::ValidationError("--s-grid values must lie in [0, 1]");
      const auto report = daubloc::run_comb(daubloc::linear_grid(g.lo, g.hi, g.count), tol);
      output.emit(daubloc::io::to_json(report), daubloc::io::to_csv(report));
    } else if (*cantor_cmd) {
      daubloc::CantorReport report;
      if (single_n) {
        if (!(*single_x > 0.0)) throw daubloc::ValidationError("--piR2 must be positive");
        report = single_cantor(*single_n, *single_x, cantor.lambda0_only);
      } else {
        if (nmax_opt->count() == 0) throw daubloc::ValidationError("cantor needs --nmax or --n with --piR2");
        report = daubloc::run_cantor(cantor);
      }
      output.emit(daubloc::io::to_json(report), daubloc::io::to_csv(report));
    } else if (*verify_cmd) {
      return run_verify(suite, output);
    }
  } catch (const daubloc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
