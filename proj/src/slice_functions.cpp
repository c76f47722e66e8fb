#include "slicealg/slice_functions.hpp"

#include <cmath>
#include <numbers>

namespace slicealg {

namespace {

void require_intrinsic(const StemPolynomial& f) {
  if (!f.intrinsic()) throw Error(ErrorCode::NotIntrinsic, "stem polynomial is not intrinsic");
}

// Fixed points on a spiral in the annulus 0.3 <= |z| <= 1.5.
std::vector<Complex> intrinsic_probe_points() {
  std::vector<Complex> pts;
  pts.reserve(32);
  for (int k = 0; k < 32; ++k) {
    const double r = 0.3 + 1.2 * k / 31.0;
    const double theta = 2.0 * std::numbers::pi * (0.137 + 0.618 * k);
    pts.push_back(std::polar(r, theta));
  }
  return pts;
}

}  // namespace

StemPolynomial::StemPolynomial(int dimension, std::vector<ComplexElement> coefficients)
    : dimension_(dimension), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) coefficients_.push_back(ComplexElement::zero(dimension_));
  for (const auto& c : coefficients_) {
    if (c.re.size() != dimension_ || c.im.size() != dimension_)
      throw Error(ErrorCode::DimensionMismatch, "stem coefficient has the wrong dimension");
  }
  intrinsic_ = is_intrinsic(*this);
}

ComplexElement StemPolynomial::operator()(Complex z) const {
  ComplexElement acc = coefficients_.back();
  for (int k = degree() - 1; k >= 0; --k) acc = z * acc + coefficients_[k];
  return acc;
}

ComplexElement StemPolynomial::derivative(Complex z) const {
  if (degree() == 0) return ComplexElement::zero(dimension_);
  ComplexElement acc = static_cast<double>(degree()) * coefficients_.back();
  for (int k = degree() - 1; k >= 1; --k)
    acc = z * acc + static_cast<double>(k) * coefficients_[k];
  return acc;
}

StemPolynomial StemPolynomial::operator+(const StemPolynomial& other) const {
  if (other.dimension_ != dimension_)
    throw Error(ErrorCode::DimensionMismatch, "adding stems over different algebras");
  const std::size_t n = std::max(coefficients_.size(), other.coefficients_.size());
  std::vector<ComplexElement> sum(n, ComplexElement::zero(dimension_));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) sum[k] = sum[k] + coefficients_[k];
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k)
    sum[k] = sum[k] + other.coefficients_[k];
  return StemPolynomial(dimension_, std::move(sum));
}

StemPolynomial stem_from_slice_poly(int dimension, const std::vector<Element>& a) {
  std::vector<ComplexElement> c;
  c.reserve(a.size());
  for (const auto& ak : a) {
    if (ak.size() != dimension)
      throw Error(ErrorCode::DimensionMismatch, "slice coefficient has the wrong dimension");
    c.push_back(ComplexElement::real(ak));
  }
  return StemPolynomial(dimension, std::move(c));
}

bool is_intrinsic(const StemPolynomial& f, double tol) {
  for (Complex z : intrinsic_probe_points()) {
    const ComplexElement fz = f(z);
    const ComplexElement gap = f(std::conj(z)) - fz.conj();
    if (gap.norm() > tol * (1.0 + fz.norm())) return false;
  }
  return true;
}

Element eval_slice(const Algebra& alg, const StemPolynomial& f, Complex z,
                   const RootOfMinusOne& s) {
  require_intrinsic(f);
  return pi_tensor_eval(alg, f(z), s);
}

std::pair<Element, Element> alpha_beta(const StemPolynomial& f, Complex z) {
  require_intrinsic(f);
  ComplexElement fz = f(z);
  return {std::move(fz.re), std::move(fz.im)};
}

double cauchy_riemann_residual_unchecked(const Algebra& alg, const StemPolynomial& f, Complex z,
                                         const RootOfMinusOne& s, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::PreconditionFailed, "finite-difference step must be > 0");
  auto g = [&](Complex p) { return pi_tensor_eval(alg, f(p), s); };
  const Element dx = (g(z + Complex(h, 0)) - g(z - Complex(h, 0))) / (2.0 * h);
  const Element dy = (g(z + Complex(0, h)) - g(z - Complex(0, h))) / (2.0 * h);
  return (dx + alg.multiply(s.element(), dy)).norm();
}

double cauchy_riemann_residual(const Algebra& alg, const StemPolynomial& f, Complex z,
                               const RootOfMinusOne& s, double h) {
  require_intrinsic(f);
  return cauchy_riemann_residual_unchecked(alg, f, z, s, h);
}

TwistMap TwistMap::fixed_automorphism(const Algebra& alg, const Element& y) {
  return TwistMap(Conjugation{y, inverse(alg, y)});
}

RootOfMinusOne TwistMap::apply(const Algebra& alg, Complex z, const RootOfMinusOne& s,
                               double tol) const {
  Element out;
  if (std::holds_alternative<Identity>(kind_)) return s;
  if (const auto* c = std::get_if<Conjugation>(&kind_)) {
    out = alg.multiply(alg.multiply(c->y_inverse, s.element()), c->y);
  } else {
    out = std::get<Callback>(kind_)(z, s.element());
  }
  if (out.size() != alg.dimension() || !is_root(alg, out, tol))
    throw Error(ErrorCode::InvalidTwist, "twist map leaves the set of roots of -1");
  return RootOfMinusOne::from(alg, std::move(out), tol);
}

Element eval_generalized(const Algebra& alg, const StemPolynomial& f, const TwistMap& phi,
                         Complex z, const RootOfMinusOne& s) {
  require_intrinsic(f);
  return pi_tensor_eval(alg, f(z), phi.apply(alg, z, s));
}

}  // namespace slicealg
