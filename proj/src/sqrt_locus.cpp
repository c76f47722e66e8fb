#include "slicealg/sqrt_locus.hpp"

#include <cmath>
#include <string>

namespace slicealg {

namespace {

constexpr int kSeedStarts = 50;
constexpr int kSeedIterations = 100;
constexpr double kConjugatorConditionCap = 1e-2;
constexpr double kIntegerSnap = 0.01;

bool same_element(const Element& a, const Element& b) { return (a - b).norm() <= 1e-12; }

}  // namespace

RootOfMinusOne RootOfMinusOne::from(const Algebra& alg, Element s, double tol) {
  const double r = root_residual(alg, s);
  if (!(r <= tol))
    throw Error(ErrorCode::NotARoot, "|s^2 + 1| = " + std::to_string(r));
  return RootOfMinusOne(std::move(s), r);
}

double root_residual(const Algebra& alg, const Element& s) {
  return (alg.multiply(s, s) + alg.unit()).norm();
}

bool is_root(const Algebra& alg, const Element& s, double tol) {
  return root_residual(alg, s) <= tol;
}

std::optional<Element> newton_root_in(const Algebra& alg, const Element& offset,
                                      const Matrix& directions, Eigen::VectorXd t,
                                      int iterations, double tol) {
  auto point = [&](const Eigen::VectorXd& p) -> Element {
    return directions.cols() == 0 ? offset : Element(offset + directions * p);
  };
  auto residual = [&](const Element& s) -> Element { return alg.multiply(s, s) + alg.unit(); };

  Element s = point(t);
  Element g = residual(s);
  double norm = g.norm();
  for (int it = 0; it < iterations && norm > 1e-14; ++it) {
    if (directions.cols() == 0) break;
    const Matrix jac = (alg.left(s) + alg.right(s)) * directions;
    const Eigen::VectorXd step = linalg::lstsq(jac, -g);
    double scale = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 30; ++halving) {
      const Eigen::VectorXd trial_t = t + scale * step;
      const Element trial = point(trial_t);
      const Element trial_g = residual(trial);
      if (trial_g.norm() < norm) {
        t = trial_t;
        s = trial;
        g = trial_g;
        norm = trial_g.norm();
        improved = true;
        break;
      }
      scale *= 0.5;
    }
    if (!improved) break;
  }
  if (norm <= tol) return s;
  return std::nullopt;
}

RootOfMinusOne find_seed_root(const Algebra& alg, std::uint64_t seed) {
  const int n = alg.dimension();
  for (int i = 0; i < n; ++i)
    if (is_root(alg, alg.basis(i))) return RootOfMinusOne::from(alg, alg.basis(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Element prod = alg.multiply(alg.basis(i), alg.basis(j));
      if (is_root(alg, prod)) return RootOfMinusOne::from(alg, prod);
    }
  Rng rng = make_rng(seed, 0x5EED);
  const Matrix all = Matrix::Identity(n, n);
  for (int start = 0; start < kSeedStarts; ++start) {
    const auto found =
        newton_root_in(alg, alg.zero(), all, random_element(n, rng), kSeedIterations);
    if (found) return RootOfMinusOne::from(alg, *found);
  }
  throw Error(ErrorCode::NotFound, "no square root of -1 found in " + alg.name() + " after " +
                                       std::to_string(kSeedStarts) + " Newton starts");
}

std::vector<RootOfMinusOne> seed_roots(const Algebra& alg) {
  const int n = alg.dimension();
  std::vector<RootOfMinusOne> out;
  auto add = [&](const Element& e) {
    if (!is_root(alg, e)) return;
    for (const auto& r : out)
      if (same_element(r.element(), e)) return;
    out.push_back(RootOfMinusOne::from(alg, e));
  };
  for (int i = 0; i < n; ++i) add(alg.basis(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) add(alg.multiply(alg.basis(i), alg.basis(j)));
  if (alg.clifford_signature()) add(alg.basis(pseudoscalar_index(alg)));
  return out;
}

TangentFrame tangent_frame(const Algebra& alg, const RootOfMinusOne& s) {
  const Element& e = s.element();
  const Matrix kernel = linalg::null_space(Matrix(alg.left(e) + alg.right(e)));
  const Matrix ls = alg.left(e);
  // Re-express the kernel as pairs (h, s h) so J_S acts blockwise.
  Matrix basis(alg.dimension(), 0);
  for (Eigen::Index c = 0; c < kernel.cols() && basis.cols() < kernel.cols(); ++c) {
    Matrix trial(alg.dimension(), basis.cols() + 1);
    trial << basis, kernel.col(c);
    if (linalg::numerical_rank(trial) <= basis.cols()) continue;
    Matrix next(alg.dimension(), basis.cols() + 2);
    next << basis, kernel.col(c), ls * kernel.col(c);
    basis = next;
  }
  return {s, basis};
}

int component_invariant(const Algebra& alg, const RootOfMinusOne& s) {
  const double tr = (alg.left(s.element()) * alg.right(s.element())).trace();
  const double snapped = std::round(tr);
  if (std::abs(tr - snapped) > kIntegerSnap)
    throw Error(ErrorCode::NonIntegerTrace, "tr T_s = " + std::to_string(tr));
  return static_cast<int>(snapped);
}

RootOfMinusOne conjugate_root(const Algebra& alg, const Element& y, const RootOfMinusOne& s) {
  const Element y_inv = inverse(alg, y);
  const Element conj = alg.multiply(alg.multiply(y, s.element()), y_inv);
  return RootOfMinusOne::from(alg, conj);
}

namespace {

Element polish_root(const Algebra& alg, const Element& s) {
  const Element g = alg.multiply(s, s) + alg.unit();
  const Element step = linalg::lstsq(alg.left(s) + alg.right(s), -g);
  const Element polished = s + step;
  return root_residual(alg, polished) < g.norm() ? polished : s;
}

}  // namespace

RootOfMinusOne sample_root(const Algebra& alg, const RootOfMinusOne& seed,
                           const std::function<Element()>& draw_conjugator) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Element y = draw_conjugator();
    if (is_zerodivisor(alg, y)) continue;
    if (linalg::inverse_condition(alg.left(y)) < kConjugatorConditionCap) continue;
    const Element y_inv = inverse(alg, y);
    const Element conj = alg.multiply(alg.multiply(y, seed.element()), y_inv);
    return RootOfMinusOne::from(alg, polish_root(alg, conj));
  }
  throw Error(ErrorCode::NotFound, "no usable conjugating element drawn");
}

RootOfMinusOne sample_root(const Algebra& alg, const RootOfMinusOne& seed, Rng& rng) {
  return sample_root(alg, seed, [&] { return random_element(alg.dimension(), rng); });
}

Element j_structure(const Algebra& alg, const RootOfMinusOne& s, const Element& h, double tol) {
  const Element& e = s.element();
  const double anti = (alg.multiply(e, h) + alg.multiply(h, e)).norm();
  if (anti > tol * (1.0 + e.norm() * h.norm()))
    throw Error(ErrorCode::NotTangent, "|sh + hs| = " + std::to_string(anti));
  return alg.multiply(e, h);
}

Element nijenhuis(const Algebra& alg, const RootOfMinusOne& s, const Element& x,
                  const Element& y, double tol) {
  const Element sx = j_structure(alg, s, x, tol);
  const Element sy = j_structure(alg, s, y, tol);
  const Element& e = s.element();
  return alg.multiply(e, alg.multiply(y, x)) - alg.multiply(e, alg.multiply(x, y)) +
         alg.multiply(sx, y) - alg.multiply(sy, x);
}

ComplexSubspace minus_i_eigenspace(const Algebra& alg, const RootOfMinusOne& s) {
  const int n = alg.dimension();
  const Matrix ls = alg.left(s.element());
  ComplexMatrix all(n, n);
  all.real() = Matrix::Identity(n, n);
  all.imag() = ls;
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(all);
  qr.setThreshold(kRankTolerance);
  const Eigen::Index rank = qr.rank();
  std::vector<int> pivots(qr.colsPermutation().indices().data(),
                          qr.colsPermutation().indices().data() + rank);
  std::sort(pivots.begin(), pivots.end());
  ComplexMatrix basis(n, rank);
  for (Eigen::Index c = 0; c < rank; ++c) basis.col(c) = all.col(pivots[c]);
  return {basis};
}

double clifford_trace_formula(const Algebra& alg, const Element& s) {
  const auto& sig = alg.clifford_signature();
  if (!sig) throw Error(ErrorCode::PreconditionFailed, "not a Clifford algebra");
  const int n = sig->generators();
  const double scale = std::ldexp(1.0, n);
  const double s0 = s(0);
  const double sw = n > 0 ? s(pseudoscalar_index(alg)) : 0.0;
  const int diff = ((sig->p - sig->q) % 4 + 4) % 4;
  if (n == 0 || diff % 2 == 0) return scale * s0 * s0;
  if (diff == 3) return scale * (s0 * s0 - sw * sw);
  return scale * (s0 * s0 + sw * sw);
}

IdentityReport verify_operator_identities(const Algebra& alg, const Element& a, double tol) {
  const Matrix l = alg.left(a);
  const Matrix r = alg.right(a);
  const Matrix f = l + r;
  const Matrix t = l * r;
  IdentityReport report;
  const double c = (r * l - l * r).norm() / (1.0 + l.norm() * r.norm());
  report.push_back({"[R_a, L_a] = 0", c, c <= tol});
  const double q = (f * f - (l * l + r * r + 2.0 * t)).norm() / (1.0 + f.squaredNorm());
  report.push_back({"F_a^2 = L_a^2 + R_a^2 + 2 T_a", q, q <= tol});
  return report;
}

IdentityReport verify_root_operator_identities(const Algebra& alg, const RootOfMinusOne& s,
                                               double tol) {
  const Matrix l = alg.left(s.element());
  const Matrix r = alg.right(s.element());
  const Matrix f = l + r;
  const Matrix t = l * r;
  const Matrix id = Matrix::Identity(l.rows(), l.cols());
  IdentityReport report;
  auto add = [&](std::string name, const Matrix& diff, double scale) {
    const double res = diff.norm() / (1.0 + scale);
    report.push_back({std::move(name), res, res <= tol});
  };
  add("L_s^2 = -I", l * l + id, l.squaredNorm());
  add("R_s^2 = -I", r * r + id, r.squaredNorm());
  add("R_s F_s = T_s - I", r * f - (t - id), r.norm() * f.norm());
  add("F_s^2 = 2 T_s - 2 I", f * f - (2.0 * t - 2.0 * id), f.squaredNorm());
  add("T_s^2 = I", t * t - id, t.squaredNorm());
  return report;
}

IdentityReport verify_trace_identities(const Algebra& alg, const RootOfMinusOne& s, double tol) {
  const Element& e = s.element();
  const Matrix l = alg.left(e);
  const Matrix r = alg.right(e);
  IdentityReport report;
  auto add = [&](std::string name, double residual) {
    report.push_back({std::move(name), residual, residual <= tol});
  };
  add("tr L_s = 0", std::abs(l.trace()));
  add("tr R_s = 0", std::abs(r.trace()));
  add("tr F_s = 0", std::abs((l + r).trace()));
  const double tr_t = (l * r).trace();
  add("tr T_s integer", std::abs(tr_t - std::round(tr_t)));
  if (const auto& sig = alg.clifford_signature(); sig && sig->generators() > 0) {
    add("s_0 = 0", std::abs(e(0)));
    add("tr T_s = signature formula", std::abs(tr_t - clifford_trace_formula(alg, e)));
    const int diff = ((sig->p - sig->q) % 4 + 4) % 4;
    if (diff == 1) add("s_w = 0", std::abs(e(pseudoscalar_index(alg))));
  }
  return report;
}

std::pair<Complex, RootOfMinusOne> sigma_involution(Complex z, const RootOfMinusOne& s) {
  return {std::conj(z), s.negated()};
}

}  // namespace slicealg
