#pragma once

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "slicealg/zero_variety.hpp"

namespace slicealg {

/// F(z) = sum_k z^k c_k with coefficients in C (x) A.
class StemPolynomial {
 public:
  StemPolynomial(int dimension, std::vector<ComplexElement> coefficients);

  int dimension() const noexcept { return dimension_; }
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<ComplexElement>& coefficients() const noexcept { return coefficients_; }
  bool intrinsic() const noexcept { return intrinsic_; }

  /// Horner on the complex scalar.
  ComplexElement operator()(Complex z) const;
  ComplexElement derivative(Complex z) const;

  StemPolynomial operator+(const StemPolynomial& other) const;

 private:
  int dimension_;
  std::vector<ComplexElement> coefficients_;
  bool intrinsic_ = true;
};

/// c_k = 1 (x) a_k.
StemPolynomial stem_from_slice_poly(int dimension, const std::vector<Element>& a);

/// max over 32 fixed sample points of |F(conj z) - conj F(z)| <= tol (1 + |F(z)|).
bool is_intrinsic(const StemPolynomial& f, double tol = kDefaultTolerance);

/// pi(F(z), s). Throws NotIntrinsic.
Element eval_slice(const Algebra& alg, const StemPolynomial& f, Complex z,
                   const RootOfMinusOne& s);

/// (alpha(z), beta(z)) = (Re F(z), Im F(z)). Throws NotIntrinsic.
std::pair<Element, Element> alpha_beta(const StemPolynomial& f, Complex z);

/// |(d/dx + L_s d/dy) f(x + s y)| by central differences with step h.
/// Throws NotIntrinsic.
double cauchy_riemann_residual(const Algebra& alg, const StemPolynomial& f, Complex z,
                               const RootOfMinusOne& s, double h = 1e-5);

/// As above but skips the intrinsic check (used to probe non-intrinsic stems).
double cauchy_riemann_residual_unchecked(const Algebra& alg, const StemPolynomial& f, Complex z,
                                         const RootOfMinusOne& s, double h = 1e-5);

/// Phi(z, s). Identity, conjugation s -> y^-1 s y, or a caller-supplied map.
class TwistMap {
 public:
  using Callback = std::function<Element(Complex, const Element&)>;

  static TwistMap identity() { return TwistMap(Identity{}); }
  /// Throws ZeroDivisor if y is not invertible.
  static TwistMap fixed_automorphism(const Algebra& alg, const Element& y);
  static TwistMap per_z(Callback fn) { return TwistMap(std::move(fn)); }

  /// Throws InvalidTwist if the result is not a root of -1.
  RootOfMinusOne apply(const Algebra& alg, Complex z, const RootOfMinusOne& s,
                       double tol = kDefaultTolerance) const;

 private:
  struct Identity {};
  struct Conjugation {
    Element y;
    Element y_inverse;
  };
  using Kind = std::variant<Identity, Conjugation, Callback>;
  explicit TwistMap(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

/// pi(F(z), Phi(z, s)). Throws NotIntrinsic, InvalidTwist.
Element eval_generalized(const Algebra& alg, const StemPolynomial& f, const TwistMap& phi,
                         Complex z, const RootOfMinusOne& s);

}  // namespace slicealg
