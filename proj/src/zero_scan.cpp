#include "slicealg/zero_scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "slicealg/linalg.hpp"

namespace slicealg {

namespace {

constexpr int kMaxCandidates = 256;
constexpr double kWitnessTolerance = 1e-6;

struct Grid {
  Region r;
  int n;
  double x(int i) const { return n == 1 ? r.x0 : r.x0 + (r.x1 - r.x0) * i / (n - 1); }
  double y(int j) const { return n == 1 ? 0.0 : r.y0 + (r.y1 - r.y0) * j / (n - 1); }
};

double probe_residual(const Algebra& alg, const Element& alpha, const Element& beta,
                      const RootOfMinusOne& s) {
  return (alpha + alg.multiply(s.element(), beta)).norm();
}

struct Polished {
  bool ok = false;
  Complex z;
  Element s;  // empty for real zeros
  double residual = std::numeric_limits<double>::infinity();
};

// Gauss-Newton for alpha(x) = target on the real line.
Polished polish_real(const StemPolynomial& f, const Element& target, double x, int iterations) {
  auto residual = [&](double t) { return f(Complex(t, 0)).re - target; };
  Element g = residual(x);
  for (int it = 0; it < iterations && g.norm() > 0.0; ++it) {
    const Element p = f.derivative(Complex(x, 0)).re;
    const double pp = p.squaredNorm();
    if (pp == 0.0) break;
    double step = -p.dot(g) / pp;
    bool improved = false;
    for (int h = 0; h < 20; ++h, step *= 0.5) {
      const Element gn = residual(x + step);
      if (gn.norm() < g.norm()) {
        x += step;
        g = gn;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return {true, Complex(x, 0.0), Element(), g.norm()};
}

// Joint Gauss-Newton on (x, y, s) for alpha - target + s beta = 0, s^2 + 1 = 0.
Polished polish_joint(const Algebra& alg, const StemPolynomial& f, const Element& target,
                      Complex z, Element s, int iterations) {
  const int n = alg.dimension();
  auto residual = [&](Complex p, const Element& q) {
    const ComplexElement fz = f(p);
    Eigen::VectorXd g(2 * n);
    g.head(n) = fz.re - target + alg.multiply(q, fz.im);
    g.tail(n) = alg.multiply(q, q) + alg.unit();
    return g;
  };
  Eigen::VectorXd g = residual(z, s);
  for (int it = 0; it < iterations && g.norm() > 0.0; ++it) {
    const ComplexElement fz = f(z);
    const ComplexElement df = f.derivative(z);
    Matrix jac = Matrix::Zero(2 * n, n + 2);
    jac.block(0, 0, n, 1) = df.re + alg.multiply(s, df.im);
    jac.block(0, 1, n, 1) = -df.im + alg.multiply(s, df.re);
    jac.block(0, 2, n, n) = alg.right(fz.im);
    jac.block(n, 2, n, n) = alg.left(s) + alg.right(s);
    Eigen::VectorXd step = linalg::lstsq(jac, -g);
    bool improved = false;
    for (int h = 0; h < 20; ++h, step *= 0.5) {
      const Complex zn = z + Complex(step(0), step(1));
      const Element sn = s + step.tail(n);
      const Eigen::VectorXd gn = residual(zn, sn);
      if (gn.norm() < g.norm()) {
        z = zn;
        s = sn;
        g = gn;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return {true, z, std::move(s), g.norm()};
}

bool inside(const Region& r, Complex z) {
  const double slack = 1e-9 * (1.0 + std::abs(r.x1 - r.x0) + std::abs(r.y1 - r.y0));
  return z.real() >= r.x0 - slack && z.real() <= r.x1 + slack && z.imag() >= r.y0 - slack &&
         z.imag() <= r.y1 + slack;
}

}  // namespace

Region symmetrized(const Region& r) {
  const bool finite = std::isfinite(r.x0) && std::isfinite(r.x1) && std::isfinite(r.y0) &&
                      std::isfinite(r.y1);
  if (!finite || r.x1 < r.x0 || r.y1 < r.y0)
    throw Error(ErrorCode::ParseError, "region must be a non-empty finite rectangle");
  const double y = std::max(std::abs(r.y0), std::abs(r.y1));
  return {r.x0, r.x1, -y, y};
}

Region parse_region(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad region component '" + item + "'");
    }
  }
  if (v.size() != 4) throw Error(ErrorCode::ParseError, "region must be x0,x1,y0,y1");
  return symmetrized({v[0], v[1], v[2], v[3]});
}

std::vector<RootOfMinusOne> zero_scan_probes(const Algebra& alg, int count, std::uint64_t seed) {
  std::vector<RootOfMinusOne> seeds = seed_roots(alg);
  if (seeds.empty()) {
    try {
      seeds.push_back(find_seed_root(alg, seed));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotFound) throw;
      return {};
    }
  }
  std::vector<RootOfMinusOne> probes;
  const int half = std::max(1, count / 2);
  for (int k = 0; k < half; ++k) {
    Rng rng = make_rng(seed, 0x5CA7 + static_cast<std::uint64_t>(k));
    probes.push_back(sample_root(alg, seeds[k % seeds.size()], rng));
  }
  for (int k = 0; k < half; ++k) probes.push_back(probes[k].negated());
  return probes;
}

std::vector<double> zero_scan_residual_grid(const Algebra& alg, const StemPolynomial& f,
                                            const Region& region, const Element& target,
                                            const std::vector<RootOfMinusOne>& probes, int grid,
                                            Execution execution) {
  const Grid g{region, grid};
  std::vector<double> out(static_cast<std::size_t>(grid) * grid);
  for_each_index(grid, execution, [&](int j) {
    const double y = g.y(j);
    for (int i = 0; i < grid; ++i) {
      const ComplexElement fz = f(Complex(g.x(i), y));
      const Element alpha = fz.re - target;
      double best = std::numeric_limits<double>::infinity();
      if (probes.empty()) {
        if (y == 0.0) best = alpha.norm();
      } else {
        for (const auto& s : probes) best = std::min(best, probe_residual(alg, alpha, fz.im, s));
      }
      out[static_cast<std::size_t>(j) * grid + i] = best;
    }
  });
  return out;
}

std::vector<ZeroScanEntry> discrete_zero_scan(const Algebra& alg, const StemPolynomial& f,
                                              const Region& region, const Element& target,
                                              const ZeroScanOptions& options) {
  if (!f.intrinsic()) throw Error(ErrorCode::NotIntrinsic, "zero scan needs an intrinsic stem");
  if (f.dimension() != alg.dimension() || target.size() != alg.dimension())
    throw Error(ErrorCode::DimensionMismatch, "stem, target and algebra disagree in dimension");
  const Region r = symmetrized(region);
  const int n = r.y1 > r.y0 ? options.grid : 1;
  const int nx = options.grid;
  const std::vector<RootOfMinusOne> probes =
      zero_scan_probes(alg, options.probe_roots, options.seed);

  // Square grid; a degenerate y-range collapses to the real line.
  Region grid_region = r;
  std::vector<double> res;
  if (n == 1) {
    res.resize(nx);
    const Grid g{r, nx};
    for (int i = 0; i < nx; ++i) {
      const ComplexElement fz = f(Complex(g.x(i), 0.0));
      res[i] = (fz.re - target).norm();
    }
  } else {
    res = zero_scan_residual_grid(alg, f, grid_region, target, probes, nx, options.execution);
  }
  const Grid g{grid_region, nx};
  auto at = [&](int i, int j) { return res[static_cast<std::size_t>(j) * nx + i]; };

  // Local minima in the closed upper half of the grid.
  struct Candidate {
    int i, j;
    double r;
  };
  std::vector<Candidate> candidates;
  const int j0 = n == 1 ? 0 : (n - 1) / 2;
  for (int j = j0; j < n; ++j) {
    if (n > 1 && g.y(j) < 0.0) continue;
    for (int i = 0; i < nx; ++i) {
      const double v = at(i, j);
      if (!std::isfinite(v)) continue;
      bool minimum = true;
      for (int dj = -1; dj <= 1 && minimum; ++dj)
        for (int di = -1; di <= 1; ++di) {
          const int ii = i + di, jj = j + dj;
          if ((di == 0 && dj == 0) || ii < 0 || ii >= nx || jj < 0 || jj >= n) continue;
          if (at(ii, jj) < v) {
            minimum = false;
            break;
          }
        }
      if (minimum) candidates.push_back({i, j, v});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.r < b.r; });
  if (candidates.size() > kMaxCandidates) candidates.resize(kMaxCandidates);

  const double scale = 1.0 + target.norm();
  std::vector<Polished> polished(candidates.size());
  for_each_index(static_cast<int>(candidates.size()), options.execution, [&](int c) {
    const Candidate& cand = candidates[c];
    const Complex z0(g.x(cand.i), n == 1 ? 0.0 : g.y(cand.j));
    Polished p;
    if (probes.empty() || n == 1) {
      p = polish_real(f, target, z0.real(), options.newton_iterations);
    } else {
      const ComplexElement fz = f(z0);
      const Element alpha = fz.re - target;
      std::size_t best = 0;
      double best_r = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < probes.size(); ++k) {
        const double v = probe_residual(alg, alpha, fz.im, probes[k]);
        if (v < best_r) {
          best_r = v;
          best = k;
        }
      }
      p = polish_joint(alg, f, target, z0, probes[best].element(), options.newton_iterations);
      if (p.z.imag() < 0.0) {
        p.z = std::conj(p.z);
        p.s = -p.s;
      }
      if (p.z.imag() <= options.real_threshold)
        p = polish_real(f, target, p.z.real(), options.newton_iterations);
    }
    p.ok = std::isfinite(p.residual) && p.residual <= options.accept_residual * scale &&
           inside(r, p.z);
    polished[c] = std::move(p);
  });

  std::vector<Polished> accepted;
  for (auto& p : polished)
    if (p.ok) accepted.push_back(std::move(p));
  std::stable_sort(accepted.begin(), accepted.end(), [](const Polished& a, const Polished& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });
  std::vector<Polished> unique;
  for (auto& p : accepted) {
    auto dup = std::find_if(unique.begin(), unique.end(), [&](const Polished& q) {
      return std::abs(q.z - p.z) <= options.dedup_radius;
    });
    if (dup == unique.end()) {
      unique.push_back(std::move(p));
    } else if (p.residual < dup->residual) {
      *dup = std::move(p);
    }
  }

  std::vector<ZeroScanEntry> out;
  for (const auto& p : unique) {
    ZeroScanEntry e;
    e.residual = p.residual;
    if (p.s.size() == 0) {
      e.z = Complex(p.z.real(), 0.0);
      e.cls = "real";
      e.witnesses = static_cast<int>(probes.size());
      out.push_back(e);
      continue;
    }
    e.z = p.z;
    const ComplexElement fz = f(p.z);
    const Element alpha = fz.re - target;
    int count = 0;
    for (const auto& s : probes)
      if (probe_residual(alg, alpha, fz.im, s) <= kWitnessTolerance * scale) ++count;
    if (count >= options.sphere_fraction * static_cast<double>(probes.size())) {
      e.cls = "sphere";
      e.witnesses = count;
    } else {
      e.cls = "isolated";
      e.witnesses = std::max(count, 1);
    }
    out.push_back(e);
    ZeroScanEntry mirror = e;
    mirror.z = std::conj(e.z);
    out.push_back(mirror);
  }
  std::sort(out.begin(), out.end(), [](const ZeroScanEntry& a, const ZeroScanEntry& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });
  return out;
}

nlohmann::json to_json(const std::vector<ZeroScanEntry>& entries) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries) {
    out.push_back({{"z", {e.z.real(), e.z.imag()}},
                   {"class", e.cls},
                   {"witnesses", e.witnesses},
                   {"residual", e.residual}});
  }
  return out;
}

std::string to_csv(const std::vector<ZeroScanEntry>& entries) {
  std::ostringstream os;
  os.precision(17);
  os << "re,im,class\n";
  for (const auto& e : entries) os << e.z.real() << ',' << e.z.imag() << ',' << e.cls << '\n';
  return os.str();
}

}  // namespace slicealg
