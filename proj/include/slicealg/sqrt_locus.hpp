#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "slicealg/algebra.hpp"
#include "slicealg/random.hpp"
#include "slicealg/report.hpp"

namespace slicealg {

/// An element s with s^2 = -1 (to tolerance) together with its residual.
class RootOfMinusOne {
 public:
  /// Throws NotARoot if |s^2 + 1| > tol.
  static RootOfMinusOne from(const Algebra& alg, Element s, double tol = kDefaultTolerance);

  const Element& element() const noexcept { return s_; }
  double residual() const noexcept { return residual_; }
  RootOfMinusOne negated() const { return RootOfMinusOne(-s_, residual_); }

 private:
  RootOfMinusOne(Element s, double residual) : s_(std::move(s)), residual_(residual) {}
  Element s_;
  double residual_ = 0.0;
};

/// Basis (columns) of T_s S = {h : sh + hs = 0}, arranged in pairs (h, s h).
struct TangentFrame {
  RootOfMinusOne base;
  Matrix basis;

  int dimension() const noexcept { return static_cast<int>(basis.cols()); }
};

/// Complex subspace of C (x) A; column j encodes re + i*im.
struct ComplexSubspace {
  ComplexMatrix basis;

  int rank() const noexcept { return static_cast<int>(basis.cols()); }
};

double root_residual(const Algebra& alg, const Element& s);
bool is_root(const Algebra& alg, const Element& s, double tol = kDefaultTolerance);

/// Basis elements (then degree-2 basis products) squaring to -1, then damped
/// Newton on a^2 + 1 = 0 from random starts. Throws NotFound.
RootOfMinusOne find_seed_root(const Algebra& alg, std::uint64_t seed = 0);

/// Every distinct root among basis elements, degree-2 products and, for
/// Clifford algebras, the pseudoscalar. Used to reach more than one
/// component of S when sampling. Empty if none are found.
std::vector<RootOfMinusOne> seed_roots(const Algebra& alg);

TangentFrame tangent_frame(const Algebra& alg, const RootOfMinusOne& s);

/// round(tr T_s); NonIntegerTrace if tr T_s is more than 0.01 from an integer.
int component_invariant(const Algebra& alg, const RootOfMinusOne& s);

/// y s y^-1. Throws ZeroDivisor.
RootOfMinusOne conjugate_root(const Algebra& alg, const Element& y, const RootOfMinusOne& s);

/// Conjugates seed by a random invertible y (i.i.d. normal coefficients,
/// rejecting zerodivisors and y with cond(L_y) > 100), then applies one
/// Newton correction back onto S.
RootOfMinusOne sample_root(const Algebra& alg, const RootOfMinusOne& seed, Rng& rng);

/// Same, with the conjugating element supplied by the caller.
RootOfMinusOne sample_root(const Algebra& alg, const RootOfMinusOne& seed,
                           const std::function<Element()>& draw_conjugator);

/// J_S(s, h) = s h. Throws NotTangent unless |sh + hs| <= tol (1 + |s||h|).
Element j_structure(const Algebra& alg, const RootOfMinusOne& s, const Element& h,
                    double tol = kDefaultTolerance);

/// N(x, y) = s(yx) - s(xy) + (sx)y - (sy)x for tangent x, y at s. Throws NotTangent.
Element nijenhuis(const Algebra& alg, const RootOfMinusOne& s, const Element& x,
                  const Element& y, double tol = kDefaultTolerance);

/// W(L_s) = {1 (x) v + i (x) s v}, the (-i)-eigenspace of L_s on C (x) A,
/// with columns of the form (e_j, s e_j).
ComplexSubspace minus_i_eigenspace(const Algebra& alg, const RootOfMinusOne& s);

/// [R_a, L_a] = 0 and F_a^2 = L_a^2 + R_a^2 + 2 T_a. Residuals are Frobenius
/// norms divided by 1 + the product of the operand norms, since roots on a
/// non-compact S can be large.
IdentityReport verify_operator_identities(const Algebra& alg, const Element& a,
                                          double tol = kDefaultTolerance);

/// L_s^2 = R_s^2 = -I, R_s F_s = T_s - I, F_s^2 = 2 T_s - 2 I, T_s^2 = I.
IdentityReport verify_root_operator_identities(const Algebra& alg, const RootOfMinusOne& s,
                                               double tol = kDefaultTolerance);

/// Traces of L_s, R_s, F_s; for Clifford algebras also s_0 = 0 and the
/// signature formula for tr T_s.
IdentityReport verify_trace_identities(const Algebra& alg, const RootOfMinusOne& s,
                                       double tol = kDefaultTolerance);

/// Expected tr T_s for a Clifford algebra of signature (p, q):
/// 2^n s_0^2 (p - q even), 2^n (s_0^2 - s_w^2) (p - q = 3 mod 4),
/// 2^n (s_0^2 + s_w^2) (p - q = 1 mod 4).
double clifford_trace_formula(const Algebra& alg, const Element& s);

/// The involution (z, s) -> (conj z, -s).
std::pair<Complex, RootOfMinusOne> sigma_involution(Complex z, const RootOfMinusOne& s);

/// Newton projection of an arbitrary element onto S inside the affine set
/// offset + span(directions). Returns nullopt if it does not converge.
/// Shared by the seed search, the zero-variety witness search and S_0
/// sampling.
std::optional<Element> newton_root_in(const Algebra& alg, const Element& offset,
                                      const Matrix& directions, Eigen::VectorXd start,
                                      int iterations = 100, double tol = kDefaultTolerance);

}  // namespace slicealg
