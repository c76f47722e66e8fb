#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "slicealg/algebra.hpp"
#include "slicealg/sqrt_locus.hpp"

namespace slicealg {

/// w = 1 (x) re + i (x) im in C (x) A.
struct ComplexElement {
  Element re;
  Element im;

  static ComplexElement real(Element a) {
    Element zero = Element::Zero(a.size());
    return {std::move(a), std::move(zero)};
  }
  static ComplexElement zero(int n) { return {Element::Zero(n), Element::Zero(n)}; }

  int dimension() const noexcept { return static_cast<int>(re.size()); }
  /// conj(z (x) a) = conj(z) (x) a.
  ComplexElement conj() const { return {re, -im}; }
  double norm() const { return std::sqrt(re.squaredNorm() + im.squaredNorm()); }
  ComplexVector as_vector() const {
    ComplexVector v(re.size());
    v.real() = re;
    v.imag() = im;
    return v;
  }
  static ComplexElement from_vector(const ComplexVector& v) { return {v.real(), v.imag()}; }
};

inline ComplexElement operator+(const ComplexElement& a, const ComplexElement& b) {
  return {a.re + b.re, a.im + b.im};
}
inline ComplexElement operator-(const ComplexElement& a, const ComplexElement& b) {
  return {a.re - b.re, a.im - b.im};
}
/// Complex scalar acting on the C factor.
inline ComplexElement operator*(Complex z, const ComplexElement& w) {
  return {z.real() * w.re - z.imag() * w.im, z.real() * w.im + z.imag() * w.re};
}

/// (a + ib)(c + id) = (ac - bd) + i(ad + bc), products taken in A.
ComplexElement multiply(const Algebra& alg, const ComplexElement& w, const ComplexElement& wp);

/// tau(w, s) = (conj w, -s).
std::pair<ComplexElement, RootOfMinusOne> tau_involution(const ComplexElement& w,
                                                         const RootOfMinusOne& s);

/// pi(x + iy, s) = x + s y.
Element pi_eval(const Algebra& alg, Complex z, const RootOfMinusOne& s);

/// pi(1 (x) a + i (x) b, s) = a + s b.
Element pi_tensor_eval(const Algebra& alg, const ComplexElement& w, const RootOfMinusOne& s);

struct ZeroWitness {
  ComplexElement w;
  RootOfMinusOne s;
  double residual = 0.0;  // |pi(w, s)|
};

enum class Verdict { Member, NonMember, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

struct WitnessSearch {
  Verdict verdict = Verdict::NonMember;
  std::optional<ZeroWitness> witness;
};

/// Looks for s in S with a + s b = 0. With b invertible the answer is
/// decided by is_root(-a b^-1); otherwise Newton runs on s^2 + 1 = 0 over the
/// affine solutions of s b = -a, and failure is reported as Inconclusive.
WitnessSearch zero_variety_witness(const Algebra& alg, const ComplexElement& w,
                                   std::uint64_t seed = 0, double tol = kDefaultTolerance);

/// Same search with s restricted to the span of `ambient` (orthonormal
/// columns), e.g. the antisymmetric subspace A_0.
WitnessSearch zero_variety_witness_within(const Algebra& alg, const ComplexElement& w,
                                          const Matrix& ambient, std::uint64_t seed = 0,
                                          double tol = kDefaultTolerance);

/// Witness for pi(w, s) = a, i.e. membership of w in the leaf Z(a).
WitnessSearch leaf_membership(const Algebra& alg, const ComplexElement& w, const Element& a,
                              std::uint64_t seed = 0, double tol = kDefaultTolerance);

/// (w wp, s): the witness of w also annihilates w wp.
/// Throws PreconditionFailed if s is not a witness for w.
ZeroWitness right_absorption(const Algebra& alg, const ComplexElement& w,
                             const RootOfMinusOne& s, const ComplexElement& wp,
                             double tol = kDefaultTolerance);

struct LeftAbsorption {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<ZeroWitness> witness;
  bool by_formula = false;         // witness came from the closed form
  double formula_root_residual = -1.0;  // |b^2 + 1| of the closed form, if used
};

/// Witness for wp w given the witness a of w. With wp = p + i t and
/// t a - p invertible the root is b = (t a - p) a (t a - p)^-1; otherwise
/// falls back to zero_variety_witness(wp w).
/// Throws PreconditionFailed if a is not a witness for w.
LeftAbsorption left_absorption(const Algebra& alg, const ComplexElement& w,
                               const RootOfMinusOne& a, const ComplexElement& wp,
                               std::uint64_t seed = 0, double tol = kDefaultTolerance);

}  // namespace slicealg
