#include "slicealg/twistor.hpp"

#include <Eigen/LU>

#include "slicealg/linalg.hpp"

namespace slicealg {

namespace {

constexpr double kZeroCoordinate = 1e-12;

}  // namespace

ProjectivePoint::ProjectivePoint(ComplexVector coords) : coords_(std::move(coords)) {
  const double scale = coords_.cwiseAbs().maxCoeff();
  if (coords_.size() == 0 || !(scale > 0.0))
    throw Error(ErrorCode::DegenerateImage, "projective point with all coordinates zero");
  for (Eigen::Index i = 0; i < coords_.size(); ++i) {
    if (std::abs(coords_(i)) > kZeroCoordinate * scale) {
      const Complex lead = coords_(i);
      coords_ /= lead;
      coords_(i) = 1.0;
      break;
    }
  }
}

double ProjectivePoint::chordal_distance(const ProjectivePoint& other) const {
  if (other.size() != size()) return 1.0;
  const ComplexVector u = coords_.normalized();
  const ComplexVector v = other.coords_.normalized();
  return (v - u * u.dot(v)).norm();
}

ProjectivePoint make_point(std::initializer_list<Complex> coords) {
  ComplexVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (Complex c : coords) v(i++) = c;
  return ProjectivePoint(std::move(v));
}

nlohmann::json to_json(const ProjectivePoint& p) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < p.size(); ++i) out.push_back({p[i].real(), p[i].imag()});
  return out;
}

QuaternionFrame detect_quaternion_frame(const Algebra& alg) {
  const int n = alg.dimension();
  if (n != 4) throw Error(ErrorCode::NoQuaternionFrame, "algebra is not 4-dimensional");
  for (int a = 0; a < n; ++a) {
    if (a == alg.unit_index() || !is_root(alg, alg.basis(a))) continue;
    for (int b = 0; b < n; ++b) {
      if (b == a || b == alg.unit_index() || !is_root(alg, alg.basis(b))) continue;
      const Element i = alg.basis(a), j = alg.basis(b);
      const Element k = alg.multiply(i, j);
      if ((k + alg.multiply(j, i)).norm() > kDefaultTolerance) continue;
      Matrix m(4, 4);
      m << alg.unit(), i, j, k;
      Eigen::FullPivLU<Matrix> lu(m);
      if (lu.rank() < 4) continue;
      return {a, b, alg.unit(), i, j, k, lu.inverse()};
    }
  }
  throw Error(ErrorCode::NoQuaternionFrame, "no basis elements I, J with I^2 = J^2 = -1, IJ = -JI");
}

Element gamma(const QuaternionFrame& f, Complex z, Complex w) {
  return z.real() * f.one + z.imag() * f.i + w.real() * f.j + w.imag() * f.k;
}

ProjectivePoint segre1(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.size() != 2 || q.size() != 2)
    throw Error(ErrorCode::DimensionMismatch, "segre1 takes two points of CP^1");
  return make_point({p[0] * q[0], p[0] * q[1], p[1] * q[0], p[1] * q[1]});
}

Element rho1(const Algebra& alg, const QuaternionFrame& f, const ProjectivePoint& p) {
  if (p.size() != 4) throw Error(ErrorCode::DimensionMismatch, "rho1 takes a point of CP^3");
  const double scale = p.coords().cwiseAbs().maxCoeff();
  if (std::abs(p[0]) <= kZeroCoordinate * scale && std::abs(p[1]) <= kZeroCoordinate * scale)
    throw Error(ErrorCode::BasePointAtInfinity, "w_0 = w_1 = 0");
  return alg.multiply(inverse(alg, gamma(f, p[0], p[1])), gamma(f, p[2], p[3]));
}

Element rho(const Algebra& alg, const QuaternionFrame& f, Complex z, const ProjectivePoint& u) {
  return rho1(alg, f, segre1(make_point({1.0, z}), u));
}

RootOfMinusOne twistor_root(const Algebra& alg, const QuaternionFrame& f,
                            const ProjectivePoint& u) {
  if (u.size() != 2) throw Error(ErrorCode::DimensionMismatch, "u must be a point of CP^1");
  const Element g = gamma(f, u[0], u[1]);
  return RootOfMinusOne::from(alg, alg.multiply(alg.multiply(inverse(alg, g), f.i), g));
}

ProjectivePoint segre2(const ProjectivePoint& p, const ProjectivePoint& u) {
  if (p.size() != 5 || u.size() != 2)
    throw Error(ErrorCode::DimensionMismatch, "segre2 takes points of CP^4 and CP^1");
  ComplexVector w(10);
  for (int k = 0; k < 5; ++k) {
    w(2 * k) = p[k] * u[0];
    w(2 * k + 1) = p[k] * u[1];
  }
  return ProjectivePoint(std::move(w));
}

ProjectivePoint delta1(const ProjectivePoint& p) {
  if (p.size() != 10) throw Error(ErrorCode::DimensionMismatch, "delta1 takes a point of CP^9");
  const Complex i(0.0, 1.0);
  ComplexVector out(4);
  out << p[0], p[1], p[2] + i * p[4] - p[7] + i * p[9], p[3] - i * p[5] + p[6] + i * p[8];
  return ProjectivePoint(std::move(out));
}

ProjectivePoint twistor_lift(const Algebra& alg, const QuaternionFrame& f,
                             const StemPolynomial& stem, Complex z, const ProjectivePoint& u) {
  if (!stem.intrinsic()) throw Error(ErrorCode::NotIntrinsic, "twistor lift needs an intrinsic stem");
  if (stem.dimension() != alg.dimension())
    throw Error(ErrorCode::DimensionMismatch, "stem and algebra disagree in dimension");
  const ComplexElement fz = stem(z);
  const Eigen::Vector4d re = f.coordinates(fz.re);
  const Eigen::Vector4d im = f.coordinates(fz.im);
  ComplexVector p(5);
  p(0) = 1.0;
  for (int k = 0; k < 4; ++k) p(k + 1) = Complex(re(k), im(k));
  return delta1(segre2(ProjectivePoint(std::move(p)), u));
}

ComplexSubspace stereographic_fiber(const Algebra& alg, const RootOfMinusOne& u,
                                    const RootOfMinusOne& s) {
  const int n = alg.dimension();
  const Matrix lu = alg.left(u.element());
  const Matrix op = alg.right(s.element()) * lu + Matrix::Identity(n, n);
  const Matrix kernel = linalg::null_space(op);
  // Complex basis: add v only if it is outside the span of the pairs so far.
  Matrix pairs(n, 0);
  ComplexMatrix basis(n, 0);
  for (Eigen::Index c = 0; c < kernel.cols() && pairs.cols() < kernel.cols(); ++c) {
    const Element v = kernel.col(c);
    Matrix trial(n, pairs.cols() + 1);
    trial << pairs, v;
    if (linalg::numerical_rank(trial) <= pairs.cols()) continue;
    const Element uv = lu * v;
    Matrix grown(n, pairs.cols() + 2);
    grown << pairs, v, uv;
    pairs = grown;
    basis.conservativeResize(n, basis.cols() + 1);
    basis.col(basis.cols() - 1).real() = v;
    basis.col(basis.cols() - 1).imag() = -uv;
  }
  return {basis};
}

Section standard_section(const Algebra& alg, const RootOfMinusOne& u) {
  return [&alg, u](const RootOfMinusOne& s) {
    return Element(alg.unit() - alg.multiply(u.element(), s.element()));
  };
}

ProjectivePoint generalized_twistor(const Algebra& alg, const StemPolynomial& stem,
                                    const Section& sigma, Complex z, const RootOfMinusOne& s,
                                    const RootOfMinusOne& u, double tol) {
  if (!stem.intrinsic()) throw Error(ErrorCode::NotIntrinsic, "twistor needs an intrinsic stem");
  const Element sig = sigma(s);
  if (sig.size() != alg.dimension())
    throw Error(ErrorCode::BadSection, "section returned an element of the wrong dimension");
  const Element gap = alg.multiply(sig, s.element()) - alg.multiply(u.element(), sig);
  if (sig.norm() == 0.0 || gap.norm() > tol * (1.0 + sig.norm()))
    throw Error(ErrorCode::BadSection, "section value is not in the fiber over s");
  if (is_zerodivisor(alg, sig)) throw Error(ErrorCode::BadSection, "section value is a zerodivisor");

  const ComplexElement fz = stem(z);
  const Element usig = alg.multiply(u.element(), sig);
  const Element second = alg.multiply(sig, fz.re) + alg.multiply(usig, fz.im);
  const Element usecond = alg.multiply(u.element(), second);
  const int n = alg.dimension();
  ComplexVector coords(2 * n);
  coords.head(n).real() = sig;
  coords.head(n).imag() = -usig;
  coords.tail(n).real() = second;
  coords.tail(n).imag() = -usecond;
  return ProjectivePoint(std::move(coords));
}

Element rho1_general(const Algebra& alg, const ProjectivePoint& p) {
  const int n = alg.dimension();
  if (p.size() != 2 * n) throw Error(ErrorCode::DimensionMismatch, "point is not in P(E + E)");
  // Real part decodes a - i u a back to a, up to the common factor lambda_u.
  const Element first = p.coords().head(n).real();
  const Element second = p.coords().tail(n).real();
  return alg.multiply(inverse(alg, first), second);
}

}  // namespace slicealg
