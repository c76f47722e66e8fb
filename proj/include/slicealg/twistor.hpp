#pragma once

#include <functional>

#include "json.hpp"
#include "slicealg/slice_functions.hpp"

namespace slicealg {

/// Point of CP^{n-1}, scaled so that its first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  /// Throws DegenerateImage if every coordinate vanishes.
  explicit ProjectivePoint(ComplexVector coords);

  const ComplexVector& coords() const noexcept { return coords_; }
  int size() const noexcept { return static_cast<int>(coords_.size()); }
  Complex operator[](int i) const { return coords_(i); }

  /// sin of the angle between the lines; 0 for equal points.
  double chordal_distance(const ProjectivePoint& other) const;
  bool operator==(const ProjectivePoint& other) const { return chordal_distance(other) <= 1e-9; }

 private:
  ComplexVector coords_;
};

ProjectivePoint make_point(std::initializer_list<Complex> coords);

nlohmann::json to_json(const ProjectivePoint& p);

/// {1, I, J, K} with I^2 = J^2 = -1, K = IJ = -JI, spanning a 4-dimensional algebra.
struct QuaternionFrame {
  int i_index = -1;
  int j_index = -1;
  Element one, i, j, k;
  Matrix to_frame;  // element coordinates -> (c_1, c_I, c_J, c_K)

  Eigen::Vector4d coordinates(const Element& q) const { return to_frame * q; }
};

/// Searches basis elements for I and J. Throws NoQuaternionFrame.
QuaternionFrame detect_quaternion_frame(const Algebra& alg);

/// z_I + w_I J.
Element gamma(const QuaternionFrame& f, Complex z, Complex w);

ProjectivePoint segre1(const ProjectivePoint& p, const ProjectivePoint& q);

/// gamma(w_0, w_1)^-1 gamma(w_2, w_3). Throws BasePointAtInfinity.
Element rho1(const Algebra& alg, const QuaternionFrame& f, const ProjectivePoint& p);

/// rho(z, u) = gamma(u)^-1 z_I gamma(u) = rho1(segre1([1:z], u)).
Element rho(const Algebra& alg, const QuaternionFrame& f, Complex z, const ProjectivePoint& u);

/// The root gamma(u)^-1 I gamma(u) so that rho(z, u) = pi(z, s(u)).
RootOfMinusOne twistor_root(const Algebra& alg, const QuaternionFrame& f,
                            const ProjectivePoint& u);

/// CP^4 x CP^1 -> CP^9 with w_{2k} = p_k u_0, w_{2k+1} = p_k u_1.
ProjectivePoint segre2(const ProjectivePoint& p, const ProjectivePoint& u);

/// [w0 : w1 : w2 + i w4 - w7 + i w9 : w3 - i w5 + w6 + i w8]. Throws DegenerateImage.
ProjectivePoint delta1(const ProjectivePoint& w);

/// delta1(segre2([1 : F_1(z) : F_I(z) : F_J(z) : F_K(z)], u)). Throws NotIntrinsic,
/// DegenerateImage.
ProjectivePoint twistor_lift(const Algebra& alg, const QuaternionFrame& f,
                             const StemPolynomial& stem, Complex z, const ProjectivePoint& u);

/// V_s = ker(R_s L_u + I), closed under L_u. Columns are v - i u v for a
/// complex basis v, so L_u acts as multiplication by i.
ComplexSubspace stereographic_fiber(const Algebra& alg, const RootOfMinusOne& u,
                                    const RootOfMinusOne& s);

using Section = std::function<Element(const RootOfMinusOne&)>;

/// sigma(s) = 1 - u s, which satisfies sigma s = u sigma and vanishes only at s = -u.
Section standard_section(const Algebra& alg, const RootOfMinusOne& u);

/// [gamma(sigma) : gamma(sigma A + u sigma B)] in P(E + E) with F(z) = A + iB and
/// gamma(a) = a - i u a. Throws NotIntrinsic, BadSection.
ProjectivePoint generalized_twistor(const Algebra& alg, const StemPolynomial& stem,
                                    const Section& sigma, Complex z, const RootOfMinusOne& s,
                                    const RootOfMinusOne& u, double tol = kDefaultTolerance);

/// gamma(first)^-1 gamma(second) for a point of P(E + E). Throws ZeroDivisor.
Element rho1_general(const Algebra& alg, const ProjectivePoint& p);

}  // namespace slicealg
