#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "slicealg/parallel.hpp"
#include "slicealg/sqrt_locus.hpp"

namespace slicealg {

struct TrialFailure {
  int trial = 0;
  double residual = 0.0;
  nlohmann::json input;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::string algebra;
  int trials = 0;
  double max_residual = 0.0;
  int pass_count = 0;
  std::vector<TrialFailure> failures;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  std::optional<double> wall_seconds;  // only reported on request

  bool passed() const noexcept { return failures.empty(); }
};

nlohmann::json to_json(const SuiteReport& r);
/// One row per failure: trial,residual,detail.
std::string to_csv(const SuiteReport& r);

struct SuiteOptions {
  int trials = 200;
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;
  Execution execution = Execution::Parallel;
};

const std::vector<std::string>& suite_names();

/// Runs one verification suite. Trials draw from make_rng(seed, trial) and
/// are reduced in trial order, so the report does not depend on execution.
/// Throws SuiteNotApplicable, or ParseError for an unknown suite name.
SuiteReport run_suite(std::string_view name, const Algebra& alg, const SuiteOptions& options);

/// Roots used to start sampling: seed_roots, else find_seed_root.
/// Throws NotFound when S looks empty.
std::vector<RootOfMinusOne> sampling_seeds(const Algebra& alg, std::uint64_t seed = 0);

/// A nonzero non-invertible element if one is found among basis elements,
/// 1 +- e_i, e_i +- e_j and random probes.
std::optional<Element> find_zerodivisor(const Algebra& alg, std::uint64_t seed = 0);

/// N, labels, associativity and unit residuals, zerodivisor probe.
nlohmann::json algebra_info(const Algebra& alg, std::uint64_t seed = 0);

}  // namespace slicealg
