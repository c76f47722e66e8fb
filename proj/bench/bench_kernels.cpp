// Serial vs OpenMP timings for the data-parallel kernels.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "slicealg/suites.hpp"
#include "slicealg/zero_scan.hpp"

using namespace slicealg;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, int reps, const std::function<void(Execution)>& fn) {
  const double serial = best_of(reps, [&] { fn(Execution::Serial); });
  const double parallel = best_of(reps, [&] { fn(Execution::Parallel); });
  std::printf("%-28s %10.4f %10.4f %7.2fx\n", name.c_str(), serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial/parallel kernel benchmark"};
  int reps = 3;
  int grid = 201;
  app.add_option("--reps", reps, "repetitions, best time kept");
  app.add_option("--grid", grid, "zero-scan grid size");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", available_threads());
  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial s", "omp s", "speedup");

  const Algebra c = clifford_algebra(0, 3);
  const Algebra h = quaternions();
  const auto f8 = stem_from_slice_poly(8, {c.unit(), c.zero(), c.unit()});
  const auto probes = zero_scan_probes(c, 64, 0);
  row("residual grid cl(0,3)", reps, [&](Execution e) {
    zero_scan_residual_grid(c, f8, Region{}, c.zero(), probes, grid, e);
  });
  row("zero scan cl(0,3)", reps, [&](Execution e) {
    ZeroScanOptions o;
    o.grid = grid;
    o.execution = e;
    discrete_zero_scan(c, f8, Region{}, c.zero(), o);
  });
  const Algebra c4 = clifford_algebra(2, 2);
  row("associativity cl(2,2)", reps, [&](Execution e) { c4.associativity_residual(e); });
  for (const char* suite : {"zero-variety", "absorption", "twistor"}) {
    row(std::string("suite ") + suite, reps, [&](Execution e) {
      SuiteOptions o;
      o.trials = 1000;
      o.execution = e;
      run_suite(suite, h, o);
    });
  }
  return 0;
}
