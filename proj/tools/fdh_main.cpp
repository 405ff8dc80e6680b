// fdh: command-line front end for FDH efficiency, scale-ratio and
// returns-to-scale analysis.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 verification failure
// or internal invariant violation.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "fdh/fdh.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInvariant = 3;

struct Options {
  std::string input;
  double eps = fdh::Tolerance::kDefault;
  bool project = false;
  bool exact = false;
  std::string out;

  std::string technology = "vrs";
  std::string orientation = "input";
  std::string dmu;
  std::optional<double> alpha_max;
  std::string emit;

  std::size_t grid_steps = 10000;
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
};

std::optional<std::filesystem::path> out_path(const Options& opt) {
  if (opt.out.empty()) return std::nullopt;
  return std::filesystem::path(opt.out);
}

// Copy of d with unit o moved to its output-oriented VRS projection
// (x_o, phi_V * y_o).
template <fdh::Scalar T>
fdh::BasicDataset<T> project_unit(const fdh::BasicDataset<T>& d, std::size_t o) {
  const T factor = fdh::phi(d, fdh::Delta::kVrs, o).value;
  fdh::RawTable<T> raw;
  raw.names = d.names();
  raw.input_labels = d.input_labels();
  raw.output_labels = d.output_labels();
  for (std::size_t j = 0; j < d.size(); ++j) {
    raw.inputs.emplace_back(d.inputs_of(j).begin(), d.inputs_of(j).end());
    std::vector<T> y(d.outputs_of(j).begin(), d.outputs_of(j).end());
    if (j == o) {
      for (auto& v : y) v = v * factor;
    }
    raw.outputs.push_back(std::move(y));
  }
  return fdh::validate_dataset(std::move(raw));
}

template <fdh::Scalar T>
std::vector<fdh::UnitAssessment<T>> assess(const fdh::BasicDataset<T>& d, const Options& opt,
                                           const fdh::Tolerance& tol) {
  std::vector<fdh::UnitAssessment<T>> units = fdh::classify_all(d, tol);
  if (!opt.project) return units;
  for (std::size_t o = 0; o < d.size(); ++o) {
    if (std::holds_alternative<fdh::InefficientUnit<T>>(units[o])) {
      units[o] = fdh::classify_unit(project_unit(d, o), o, tol);
    }
  }
  return units;
}

template <fdh::Scalar T>
int run_efficiency(const fdh::BasicDataset<T>& d, const Options& opt) {
  const fdh::Delta delta = fdh::parse_delta(opt.technology);
  const fdh::Orientation orientation = fdh::parse_orientation(opt.orientation);
  std::ostringstream os;
  os << "dmu,score,witness,delta\n";
  char buf[64];
  for (std::size_t o = 0; o < d.size(); ++o) {
    const auto s = fdh::score(d, delta, orientation, o);
    std::snprintf(buf, sizeof buf, "%.12g", fdh::to_double(s.value));
    os << d.name(o) << "," << buf << "," << d.name(s.witness) << ",";
    std::snprintf(buf, sizeof buf, "%.12g", fdh::to_double(s.witness_delta));
    os << buf << "\n";
  }
  fdh::write_text(os.str(), out_path(opt));
  return 0;
}

template <fdh::Scalar T>
int run_report(const fdh::BasicDataset<T>& d, const Options& opt, bool include_scores) {
  const fdh::Tolerance tol(opt.eps);
  fdh::ReportOptions options{tol, include_scores, opt.project};
  fdh::write_text(fdh::render_report(d, assess(d, opt, tol), options), out_path(opt));
  return 0;
}

template <fdh::Scalar T>
int run_ratios(const fdh::BasicDataset<T>& d, const Options& opt) {
  const fdh::Tolerance tol(opt.eps);
  std::size_t o = d.index_of(opt.dmu);
  if (opt.project && !fdh::is_efficient(d, fdh::Delta::kVrs, o)) {
    const auto projected = project_unit(d, o);
    fdh::write_text(fdh::render_ratios(projected, o, fdh::scale_ratios(projected, o, tol)),
                    out_path(opt));
    return 0;
  }
  fdh::write_text(fdh::render_ratios(d, o, fdh::scale_ratios(d, o, tol)), out_path(opt));
  return 0;
}

template <fdh::Scalar T>
int run_response(const fdh::BasicDataset<T>& d, const Options& opt) {
  const std::size_t o = d.index_of(opt.dmu);
  const auto response = fdh::build_response(d, o);
  std::ostringstream os;
  fdh::write_response_csv(response, os, opt.alpha_max);
  std::optional<std::filesystem::path> path = out_path(opt);
  if (!opt.emit.empty()) path = opt.emit;
  fdh::write_text(os.str(), path);
  if (fdh::is_efficient(d, fdh::Delta::kVrs, o)) {
    const auto derivs = fdh::one_sided_step_derivatives(response);
    std::cerr << d.name(o) << ": right derivative at 1 = " << fdh::to_string(derivs.right)
              << ", left derivative at 1 = " << fdh::to_string(derivs.left) << "\n";
  }
  return 0;
}

int run_verify(const Options& opt) {
  fdh::oracle::OracleConfig cfg;
  cfg.grid_steps = opt.grid_steps;
  cfg.seed = opt.seed;
  const fdh::Tolerance tol(opt.eps);
  fdh::oracle::VerificationReport report = fdh::oracle::verify_random(cfg, opt.trials, tol);
  if (!opt.input.empty()) {
    fdh::oracle::verify_dataset(fdh::read_csv(opt.input), cfg, tol, report);
  }
  std::ostringstream os;
  report.print(os);
  fdh::write_text(os.str(), out_path(opt));
  return report.passed() ? 0 : kExitInvariant;
}

template <fdh::Scalar T>
int dispatch(const std::string& command, const fdh::BasicDataset<T>& d, const Options& opt) {
  if (command == "efficiency") return run_efficiency(d, opt);
  if (command == "classify") return run_report(d, opt, false);
  if (command == "report") return run_report(d, opt, true);
  if (command == "ratios") return run_ratios(d, opt);
  if (command == "response") return run_response(d, opt);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FDH efficiency, scale ratios and returns-to-scale analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--input", opt.input, "CSV data file (dmu,in_*,out_*)");
  app.add_option("--eps", opt.eps, "Tolerance for classification thresholds")
      ->check(CLI::Range(0.0, 1e-3));
  app.add_flag("--project", opt.project,
               "Classify inefficient units after output-oriented VRS projection");
  app.add_flag("--exact", opt.exact, "Use exact rational arithmetic");
  app.add_option("--out", opt.out, "Write output to this file instead of stdout");

  auto* efficiency = app.add_subcommand("efficiency", "Radial efficiency scores for every unit");
  efficiency->add_option("--technology", opt.technology, "vrs|crs|nirs|ndrs")
      ->check(CLI::IsMember({"vrs", "crs", "nirs", "ndrs"}, CLI::ignore_case));
  efficiency->add_option("--orientation", opt.orientation, "input|output")
      ->check(CLI::IsMember({"input", "output"}, CLI::ignore_case));

  app.add_subcommand("classify", "One-sided and global returns to scale (JSON)");
  app.add_subcommand("report", "Scores, ratios and classes for every unit (JSON)");

  auto* ratios = app.add_subcommand("ratios", "Maximum incremental / minimum decremental ratio");
  ratios->add_option("--dmu", opt.dmu, "Unit name")->required();

  auto* response = app.add_subcommand("response", "Response function steps as CSV");
  response->add_option("--dmu", opt.dmu, "Unit name")->required();
  response->add_option("--alpha-max", opt.alpha_max, "Drop steps beyond this input proportion");
  response->add_option("--emit", opt.emit, "Write the step CSV to this path");

  auto* verify = app.add_subcommand("verify", "Cross-check against the brute-force oracle");
  verify->add_option("--grid-steps", opt.grid_steps, "Alpha grid resolution")
      ->check(CLI::Range(std::size_t{100}, std::size_t{10000000}));
  verify->add_option("--seed", opt.seed, "First random seed");
  verify->add_option("--trials", opt.trials, "Number of random data sets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "verify") return run_verify(opt);
    if (opt.input.empty()) {
      std::cerr << "--input is required for '" << command << "'\n";
      return kExitUsage;
    }
    const fdh::ExactDataset exact = fdh::read_csv(opt.input);
    if (opt.exact) return dispatch(command, exact, opt);
    return dispatch(command, exact.cast<double>(), opt);
  } catch (const fdh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
