// slicealg: algebra inspection, verification suites and zero scans.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "slicealg/algebra_io.hpp"
#include "slicealg/suites.hpp"
#include "slicealg/zero_scan.hpp"

using namespace slicealg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

double default_tolerance() {
  if (const char* env = std::getenv("SLICE_ALGEBRA_TOL")) {
    try {
      std::size_t used = 0;
      const double v = std::stod(env, &used);
      if (used == std::string(env).size() && v > 0.0) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::ParseError, std::string("bad SLICE_ALGEBRA_TOL '") + env + "'");
  }
  return kDefaultTolerance;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

std::string read_text(const std::string& path_or_inline) {
  if (std::filesystem::exists(path_or_inline)) {
    std::ifstream in(path_or_inline, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return path_or_inline;
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, what + ": " + e.what());
  }
}

StemPolynomial read_poly(const std::string& arg, int n) {
  const nlohmann::json j = parse_json(read_text(arg), "polynomial");
  if (!j.is_array() || j.empty())
    throw Error(ErrorCode::ParseError, "polynomial must be a non-empty list of coefficients");
  std::vector<Element> coeffs;
  for (const auto& c : j) coeffs.push_back(element_from_json(c, n));
  return stem_from_slice_poly(n, coeffs);
}

struct Common {
  std::string algebra = "quaternions";
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;
  bool tol_given = false;
  std::string json_path;
  std::string csv_path;
};

void emit(const Common& c, const nlohmann::json& j, const std::string& csv) {
  const std::string text = j.dump(2) + "\n";
  if (c.json_path.empty()) {
    std::cout << text;
  } else {
    write_file(c.json_path, text);
  }
  if (!c.csv_path.empty()) write_file(c.csv_path, csv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square roots of -1, slice functions and zero varieties in real algebras"};
  app.require_subcommand(1);

  Common common;
  int trials = 200;
  bool timing = false;
  bool serial = false;
  std::string suite;
  std::string poly;
  std::string region_text = "-2,2,-2,2";
  std::string target_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", common.algebra,
                    "Builtin name (\"clifford p q\", quaternions, complex, reals) or JSON file")
        ->capture_default_str();
    sub->add_option("--seed", common.seed, "RNG seed")->capture_default_str();
    sub->add_option("--tol", common.tol, "Tolerance (default 1e-9 or SLICE_ALGEBRA_TOL)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--json", common.json_path, "Write the JSON report here instead of stdout");
    sub->add_option("--csv", common.csv_path, "Also write a CSV table here");
  };

  auto* info = app.add_subcommand("info", "Dimension, labels, unit/associativity check, zerodivisor probe");
  add_common(info);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify);
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", trials, "Number of trials")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_flag("--timing", timing, "Include wall time in the report");
  verify->add_flag("--serial", serial, "Run trials on one thread");

  auto* roots = app.add_subcommand("roots", "Scan for zeros of a slice polynomial");
  add_common(roots);
  roots->add_option("--poly", poly, "Coefficient list (file or inline JSON), index = degree")->required();
  roots->add_option("--region", region_text, "x0,x1,y0,y1")->capture_default_str();
  roots->add_option("--target", target_text, "Target value as a JSON array (default 0)");
  roots->add_flag("--serial", serial, "Run the scan on one thread");

  auto* exporter = app.add_subcommand("export", "Write the structure constants as JSON");
  add_common(exporter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    common.tol_given = false;
    for (auto* sub : {info, verify, roots, exporter})
      if (sub->parsed() && sub->count("--tol") > 0) common.tol_given = true;
    if (!common.tol_given) common.tol = default_tolerance();
    const Algebra alg = resolve_algebra(common.algebra);
    const Execution exec = serial ? Execution::Serial : Execution::Parallel;

    if (info->parsed()) {
      emit(common, algebra_info(alg, common.seed), "");
      return kExitPass;
    }
    if (exporter->parsed()) {
      emit(common, algebra_to_json(alg), "");
      return kExitPass;
    }
    if (verify->parsed()) {
      SuiteOptions opt;
      opt.trials = trials;
      opt.seed = common.seed;
      opt.tol = common.tol;
      opt.execution = exec;
      SuiteReport report = run_suite(suite, alg, opt);
      if (!timing) report.wall_seconds.reset();
      emit(common, to_json(report), to_csv(report));
      if (!common.json_path.empty())
        std::cerr << report.suite << " on " << report.algebra << ": " << report.pass_count << "/"
                  << report.trials << " passed, max residual " << report.max_residual << "\n";
      return report.passed() ? kExitPass : kExitFail;
    }
    if (roots->parsed()) {
      const StemPolynomial stem = read_poly(poly, alg.dimension());
      const Region region = parse_region(region_text);
      const Element target = target_text.empty()
                                 ? alg.zero()
                                 : element_from_json(parse_json(read_text(target_text), "target"),
                                                     alg.dimension());
      ZeroScanOptions opt;
      opt.seed = common.seed;
      opt.execution = exec;
      const auto entries = discrete_zero_scan(alg, stem, region, target, opt);
      emit(common, to_json(entries), to_csv(entries));
      return kExitPass;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
