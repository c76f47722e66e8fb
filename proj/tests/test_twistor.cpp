#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "slicealg/twistor.hpp"

using namespace slicealg;

namespace {

Element q(double a, double b, double c, double d) {
  Element e(4);
  e << a, b, c, d;
  return e;
}

const Algebra& H() {
  static const Algebra h = quaternions();
  return h;
}

const QuaternionFrame& F() {
  static const QuaternionFrame f = detect_quaternion_frame(H());
  return f;
}

const Complex I(0, 1);

StemPolynomial random_stem(int degree, Rng& rng) {
  std::vector<Element> c;
  for (int k = 0; k <= degree; ++k) c.push_back(random_element(4, rng));
  return stem_from_slice_poly(4, c);
}

}  // namespace

TEST_CASE("projective points") {
  const auto p = make_point({0, 2, 4});
  CHECK(p[1] == Complex(1, 0));
  CHECK(p[2] == Complex(2, 0));
  CHECK(p == make_point({0, Complex(0, 3), Complex(0, 6)}));
  CHECK_FALSE(p == make_point({0, 1, 3}));
  CHECK_THROWS_AS(make_point({0, 0}), Error);
}

TEST_CASE("frame detection") {
  CHECK(F().i.isApprox(q(0, 1, 0, 0)));
  CHECK(F().k.isApprox(q(0, 0, 0, 1)));
  const auto c02 = detect_quaternion_frame(clifford_algebra(0, 2));
  CHECK(c02.i_index == 1);
  for (const Algebra& a : {clifford_algebra(0, 3), clifford_algebra(1, 1), complex_numbers()}) {
    try {
      detect_quaternion_frame(a);
      FAIL("expected NoQuaternionFrame");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoQuaternionFrame);
    }
  }
}

TEST_CASE("gamma") {
  CHECK(gamma(F(), 1, 0).isApprox(H().unit()));
  CHECK(gamma(F(), I, 0).isApprox(F().i));
  CHECK(gamma(F(), 0, 1).isApprox(F().j));
  CHECK(gamma(F(), 0, I).isApprox(F().k));
  Rng rng = make_rng(51);
  for (int k = 0; k < 50; ++k) {
    const Complex z = random_complex(rng), w = random_complex(rng), l = random_complex(rng);
    CHECK(H().multiply(gamma(F(), z, w), F().i).isApprox(gamma(F(), I * z, -I * w)));
    CHECK(gamma(F(), l * z, l * w).isApprox(H().multiply(gamma(F(), l, 0), gamma(F(), z, w))));
  }
}

TEST_CASE("segre1 and rho1") {
  CHECK(segre1(make_point({1, 0}), make_point({1, 0})) == make_point({1, 0, 0, 0}));
  Rng rng = make_rng(52);
  for (int k = 0; k < 50; ++k) {
    const Complex z = random_complex(rng), u0 = random_complex(rng), u1 = random_complex(rng);
    const auto w = segre1(make_point({1, z}), make_point({u0, u1}));
    CHECK(w == make_point({u0, u1, z * u0, z * u1}));
    CHECK(std::abs(w[0] * w[3] - w[1] * w[2]) < 1e-12);
    CHECK(rho1(H(), F(), make_point({1, 0, z, u0})).isApprox(gamma(F(), z, u0)));
    const Element slice = rho1(H(), F(), segre1(make_point({1, z}), make_point({1, 0})));
    CHECK(slice.isApprox(q(z.real(), z.imag(), 0, 0)));
    // Scale invariance.
    const Complex l = random_complex(rng);
    CHECK(rho1(H(), F(), ProjectivePoint(l * w.coords())).isApprox(rho1(H(), F(), w)));
  }
  try {
    rho1(H(), F(), make_point({0, 0, 1, 0}));
    FAIL("expected BasePointAtInfinity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BasePointAtInfinity);
  }
}

TEST_CASE("delta1") {
  Rng rng = make_rng(53);
  const Complex z = random_complex(rng), u0 = random_complex(rng), u1 = random_complex(rng);
  CHECK(delta1(segre2(make_point({1, z, 0, 0, 0}), make_point({u0, u1}))) ==
        make_point({u0, u1, z * u0, z * u1}));
  ComplexVector w = ComplexVector::Zero(10);
  w(4) = Complex(2, 1);
  CHECK(delta1(ProjectivePoint(w)) == make_point({0, 0, I * Complex(2, 1), 0}));
  try {
    delta1(ProjectivePoint(ComplexVector::Unit(10, 7) - ComplexVector::Unit(10, 2)));
  } catch (const Error&) {
    FAIL("w2 - w7 should not vanish");
  }
  // w2 = w7 cancels in the third slot and nothing else is set.
  ComplexVector cancel = ComplexVector::Zero(10);
  cancel(2) = 1;
  cancel(7) = 1;
  try {
    delta1(ProjectivePoint(cancel));
    FAIL("expected DegenerateImage");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateImage);
  }
}

TEST_CASE("evaluation map factors through delta1") {
  // rho1(delta1(S2([1 : q], u))) = rho(z, u) q with z (x) q; here p = [1 : z q0 : ...].
  Rng rng = make_rng(54);
  for (int k = 0; k < 200; ++k) {
    const Complex z = random_complex(rng);
    const Element qe = random_element(4, rng);
    const auto u = make_point({random_complex(rng), random_complex(rng)});
    ComplexVector p(5);
    p(0) = 1;
    for (int c = 0; c < 4; ++c) p(c + 1) = z * qe(c);
    const Element lhs = rho1(H(), F(), delta1(segre2(ProjectivePoint(p), u)));
    const auto rz = oracle::from_vec(rho(H(), F(), z, u));
    const Element rhs = oracle::to_vec(oracle::qmul(rz, oracle::from_vec(qe)));
    CHECK((lhs - rhs).norm() <= 1e-10 * (1 + rhs.norm()));
  }
}

TEST_CASE("twistor lift") {
  Rng rng = make_rng(55);
  const auto one = stem_from_slice_poly(4, {H().unit()});
  const auto x = stem_from_slice_poly(4, {H().zero(), H().unit()});
  for (int k = 0; k < 20; ++k) {
    const Complex z = random_complex(rng), u0 = random_complex(rng), u1 = random_complex(rng);
    const auto u = make_point({u0, u1});
    CHECK(twistor_lift(H(), F(), one, z, u) == make_point({u0, u1, u0, u1}));
    CHECK(twistor_lift(H(), F(), x, z, u) == make_point({u0, u1, z * u0, z * u1}));
  }
  for (int k = 0; k < 20; ++k) {
    const auto f = random_stem(static_cast<int>(rng() % 6), rng);
    const Complex z = random_complex(rng);
    ComplexMatrix stack(6, 4);
    for (int m = 0; m < 6; ++m) {
      const auto u = make_point({random_complex(rng), random_complex(rng)});
      const auto lift = twistor_lift(H(), F(), f, z, u);
      stack.row(m) = lift.coords().transpose();
      // f(rho(z, u)) = rho1(lift(z, u)).
      const Element lhs = eval_slice(H(), f, z, twistor_root(H(), F(), u));
      CHECK((lhs - rho1(H(), F(), lift)).norm() <= 1e-8 * (1 + lhs.norm()));
      CHECK(rho(H(), F(), z, u).isApprox(pi_eval(H(), z, twistor_root(H(), F(), u))));
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(stack);
    CHECK(svd.singularValues()(2) <= 1e-8 * svd.singularValues()(0));
    CHECK(svd.singularValues()(1) > 1e-6 * svd.singularValues()(0));
  }
}

TEST_CASE("stereographic fibers") {
  const auto i = RootOfMinusOne::from(H(), F().i);
  const auto fiber = stereographic_fiber(H(), i, i.negated());
  CHECK(fiber.rank() == 1);
  const auto at_i = stereographic_fiber(H(), i, i);
  REQUIRE(at_i.rank() == 1);
  // 1 is in V_i since R_i L_i 1 = -1: the real span contains the unit.
  Matrix span(4, 2);
  span << at_i.basis.col(0).real(), -at_i.basis.col(0).imag();
  CHECK((span * span.completeOrthogonalDecomposition().solve(H().unit()) - H().unit()).norm() < 1e-12);

  const Algebra c = complex_numbers();
  const auto ci = RootOfMinusOne::from(c, c.basis(1));
  CHECK(stereographic_fiber(c, ci, ci.negated()).rank() == 0);

  const Algebra c03 = clifford_algebra(0, 3);
  const auto u = RootOfMinusOne::from(c03, c03.basis(1));
  Rng rng = make_rng(56);
  for (int k = 0; k < 30; ++k) {
    const auto s = sample_root(c03, u, rng);
    const auto v = stereographic_fiber(c03, u, s);
    CHECK(v.rank() == 2);
    // L_u acts as multiplication by i in the encoding v - i u v.
    for (int col = 0; col < v.rank(); ++col) {
      const Element re = v.basis.col(col).real();
      const Element uv = c03.multiply(u.element(), re);
      CHECK((uv + Element(v.basis.col(col).imag())).norm() < 1e-12);
    }
  }
}

TEST_CASE("generalized twistor induces f") {
  const auto u = RootOfMinusOne::from(H(), F().i);
  const auto section = standard_section(H(), u);
  Rng rng = make_rng(57);
  for (int k = 0; k < 100; ++k) {
    const auto f = random_stem(3, rng);
    const auto s = sample_root(H(), u, rng);
    const Complex z = random_complex(rng);
    const auto p = generalized_twistor(H(), f, section, z, s, u);
    const Element lhs = eval_slice(H(), f, z, s);
    CHECK((rho1_general(H(), p) - lhs).norm() <= 1e-9 * (1 + lhs.norm()));
  }
  const auto one = stem_from_slice_poly(4, {H().unit()});
  const auto s = RootOfMinusOne::from(H(), F().j);
  const auto p = generalized_twistor(H(), one, section, Complex(0.3, 0.2), s, u);
  CHECK((p.coords().head(4) - p.coords().tail(4)).norm() < 1e-12);

  // A section value outside the fiber.
  const Section wrong = [](const RootOfMinusOne&) { return Element(q(1, 0, 0, 0)); };
  CHECK_THROWS_AS(generalized_twistor(H(), one, wrong, Complex(0, 1), s, u), Error);

  // A central idempotent of Clifford (0,3) is in the fiber over s = u but is a zerodivisor.
  const Algebra c03 = clifford_algebra(0, 3);
  const auto e1 = RootOfMinusOne::from(c03, c03.basis(1));
  const Element idem = 0.5 * (c03.unit() + c03.basis(pseudoscalar_index(c03)));
  const Section zd = [idem](const RootOfMinusOne&) { return idem; };
  const auto f3 = stem_from_slice_poly(8, {c03.unit()});
  try {
    generalized_twistor(c03, f3, zd, Complex(0, 1), e1, e1);
    FAIL("expected BadSection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadSection);
  }
}
