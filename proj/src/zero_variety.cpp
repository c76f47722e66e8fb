#include "slicealg/zero_variety.hpp"

#include <string>

namespace slicealg {

namespace {

constexpr int kWitnessStarts = 20;
constexpr int kWitnessIterations = 100;

void require_witness(const Algebra& alg, const ComplexElement& w, const RootOfMinusOne& s,
                     double tol) {
  const double r = pi_tensor_eval(alg, w, s).norm();
  if (r > tol * (1.0 + w.norm()))
    throw Error(ErrorCode::PreconditionFailed,
                "supplied root is not a witness: |pi(w, s)| = " + std::to_string(r));
}

// s^2 + 1 is evaluated with error proportional to |s|^2, which matters on
// non-compact S.
double root_tolerance(const Element& s, double tol) { return tol * (1.0 + s.squaredNorm()); }

bool accept_root(const Algebra& alg, const Element& s, double tol) {
  return root_residual(alg, s) <= root_tolerance(s, tol);
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Member: return "member";
    case Verdict::NonMember: return "non-member";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

ComplexElement multiply(const Algebra& alg, const ComplexElement& w, const ComplexElement& wp) {
  return {alg.multiply(w.re, wp.re) - alg.multiply(w.im, wp.im),
          alg.multiply(w.re, wp.im) + alg.multiply(w.im, wp.re)};
}

std::pair<ComplexElement, RootOfMinusOne> tau_involution(const ComplexElement& w,
                                                         const RootOfMinusOne& s) {
  return {w.conj(), s.negated()};
}

Element pi_eval(const Algebra& alg, Complex z, const RootOfMinusOne& s) {
  return z.real() * alg.unit() + z.imag() * s.element();
}

Element pi_tensor_eval(const Algebra& alg, const ComplexElement& w, const RootOfMinusOne& s) {
  return w.re + alg.multiply(s.element(), w.im);
}

WitnessSearch zero_variety_witness_within(const Algebra& alg, const ComplexElement& w,
                                          const Matrix& ambient, std::uint64_t seed,
                                          double tol) {
  const double scale = 1.0 + w.norm();
  // s = ambient * t must satisfy s b = -a, i.e. (R_b ambient) t = -a.
  const Matrix system = alg.right(w.im) * ambient;
  const Eigen::VectorXd particular = linalg::lstsq(system, -w.re);
  if ((system * particular + w.re).norm() > tol * scale) return {Verdict::NonMember, {}};

  const Matrix kernel = linalg::null_space(system);
  const Element offset = ambient * particular;
  auto accept = [&](const Element& s) -> WitnessSearch {
    auto root = RootOfMinusOne::from(alg, s, root_tolerance(s, tol));
    const double r = pi_tensor_eval(alg, w, root).norm();
    return {Verdict::Member, ZeroWitness{w, std::move(root), r}};
  };

  if (kernel.cols() == 0) {
    if (accept_root(alg, offset, tol)) return accept(offset);
    return {Verdict::NonMember, {}};
  }
  if (accept_root(alg, offset, tol)) return accept(offset);

  const Matrix directions = ambient * kernel;
  Rng rng = make_rng(seed, 0x21E7);
  for (int start = 0; start < kWitnessStarts; ++start) {
    Eigen::VectorXd t0(directions.cols());
    for (Eigen::Index i = 0; i < t0.size(); ++i) t0(i) = standard_normal(rng);
    if (auto s = newton_root_in(alg, offset, directions, t0, kWitnessIterations, tol)) {
      // The affine constraint holds exactly in exact arithmetic; re-check it.
      if (pi_tensor_eval(alg, w, RootOfMinusOne::from(alg, *s, root_tolerance(*s, tol))).norm() <=
          tol * scale)
        return accept(*s);
    }
  }
  return {Verdict::Inconclusive, {}};
}

WitnessSearch zero_variety_witness(const Algebra& alg, const ComplexElement& w,
                                   std::uint64_t seed, double tol) {
  if (!is_zerodivisor(alg, w.im)) {
    const Element s = -alg.multiply(w.re, inverse(alg, w.im));
    if (!accept_root(alg, s, tol)) return {Verdict::NonMember, {}};
    auto root = RootOfMinusOne::from(alg, s, root_tolerance(s, tol));
    const double r = pi_tensor_eval(alg, w, root).norm();
    return {Verdict::Member, ZeroWitness{w, std::move(root), r}};
  }
  const int n = alg.dimension();
  return zero_variety_witness_within(alg, w, Matrix::Identity(n, n), seed, tol);
}

WitnessSearch leaf_membership(const Algebra& alg, const ComplexElement& w, const Element& a,
                              std::uint64_t seed, double tol) {
  WitnessSearch out = zero_variety_witness(alg, {w.re - a, w.im}, seed, tol);
  if (out.witness) out.witness->w = w;
  return out;
}

ZeroWitness right_absorption(const Algebra& alg, const ComplexElement& w,
                             const RootOfMinusOne& s, const ComplexElement& wp, double tol) {
  require_witness(alg, w, s, tol);
  ComplexElement product = multiply(alg, w, wp);
  const double r = pi_tensor_eval(alg, product, s).norm();
  return {std::move(product), s, r};
}

LeftAbsorption left_absorption(const Algebra& alg, const ComplexElement& w,
                               const RootOfMinusOne& a, const ComplexElement& wp,
                               std::uint64_t seed, double tol) {
  require_witness(alg, w, a, tol);
  const ComplexElement product = multiply(alg, wp, w);
  LeftAbsorption out;

  const Element& p = wp.re;
  const Element& t = wp.im;
  const Element m = alg.multiply(t, a.element()) - p;
  if (!is_zerodivisor(alg, m)) {
    const Element b = alg.multiply(alg.multiply(m, a.element()), inverse(alg, m));
    out.formula_root_residual = root_residual(alg, b);
    if (out.formula_root_residual <= root_tolerance(b, tol)) {
      auto root = RootOfMinusOne::from(alg, b, root_tolerance(b, tol));
      const double r = pi_tensor_eval(alg, product, root).norm();
      out.verdict = Verdict::Member;
      out.by_formula = true;
      out.witness = ZeroWitness{product, std::move(root), r};
      return out;
    }
  }
  WitnessSearch fallback = zero_variety_witness(alg, product, seed, tol);
  out.verdict = fallback.verdict;
  out.witness = std::move(fallback.witness);
  return out;
}

}  // namespace slicealg
