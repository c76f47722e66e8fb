#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "slicealg/parallel.hpp"
#include "slicealg/slice_functions.hpp"

namespace slicealg {

/// Rectangle [x0, x1] x [y0, y1] in C.
struct Region {
  double x0 = -2.0, x1 = 2.0, y0 = -2.0, y1 = 2.0;
};

/// Widens the y-range to [-Y, Y], Y = max(|y0|, |y1|). Throws ParseError on an
/// empty or non-finite rectangle.
Region symmetrized(const Region& r);

/// Parses "x0,x1,y0,y1".
Region parse_region(const std::string& text);

struct ZeroScanOptions {
  int grid = 101;
  int newton_iterations = 30;
  double dedup_radius = 1e-5;
  double real_threshold = 1e-6;
  int probe_roots = 64;
  double sphere_fraction = 0.9;
  double accept_residual = 1e-8;
  std::uint64_t seed = 0;
  Execution execution = Execution::Parallel;
};

struct ZeroScanEntry {
  Complex z;
  std::string cls;  // "real", "sphere" or "isolated"
  int witnesses = 0;
  double residual = 0.0;
};

/// Zeros of f(x + s y) - target over the region: grid minima of
/// min_s |pi(F(z), s) - target| over probe roots, joint Newton polish on
/// (z, s), dedup, classification, conjugate mirroring. Sorted by (Re z, Im z).
/// Throws NotIntrinsic.
std::vector<ZeroScanEntry> discrete_zero_scan(const Algebra& alg, const StemPolynomial& f,
                                              const Region& region, const Element& target,
                                              const ZeroScanOptions& options = {});

/// Residual grid alone, row-major over the symmetrized region. Exposed so the
/// serial and parallel kernels can be compared and benchmarked.
std::vector<double> zero_scan_residual_grid(const Algebra& alg, const StemPolynomial& f,
                                            const Region& region, const Element& target,
                                            const std::vector<RootOfMinusOne>& probes, int grid,
                                            Execution execution);

/// The probe set: probe_roots / 2 sampled roots and their negatives.
std::vector<RootOfMinusOne> zero_scan_probes(const Algebra& alg, int count, std::uint64_t seed);

nlohmann::json to_json(const std::vector<ZeroScanEntry>& entries);
std::string to_csv(const std::vector<ZeroScanEntry>& entries);

}  // namespace slicealg
