#include <cmath>
#include <limits>

#include "doctest.h"
#include "oracles.hpp"
#include "slicealg/zero_scan.hpp"
#include "slicealg/zero_variety.hpp"

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

RootOfMinusOne root(Element s) { return RootOfMinusOne::from(H(), std::move(s)); }

}  // namespace

TEST_CASE("pi evaluation") {
  const auto j = root(q(0, 0, 1, 0));
  CHECK(pi_eval(H(), Complex(3, 0), j).isApprox(q(3, 0, 0, 0)));
  CHECK(pi_eval(H(), Complex(0, 1), j).isApprox(j.element()));
  CHECK(pi_eval(H(), Complex(2, 3), root(q(0, 1, 0, 0))).isApprox(q(2, 3, 0, 0)));
  CHECK(pi_eval(H(), Complex(2, -3), j.negated()).isApprox(pi_eval(H(), Complex(2, 3), j)));

  const ComplexElement w{q(1, 0, 0, 0), q(0, 1, 0, 0)};
  CHECK(pi_tensor_eval(H(), w, root(q(0, 1, 0, 0))).norm() == 0.0);
  // 1 + j i = 1 - k.
  CHECK(pi_tensor_eval(H(), w, j).isApprox(q(1, 0, 0, -1)));
  CHECK(pi_tensor_eval(H(), ComplexElement::real(q(1, 2, 3, 4)), j).isApprox(q(1, 2, 3, 4)));
}

TEST_CASE("pi symmetries and W(L_s)") {
  Rng rng = make_rng(4);
  const auto seed = root(q(0, 1, 0, 0));
  for (int k = 0; k < 100; ++k) {
    const auto s = sample_root(H(), seed, rng);
    const ComplexElement w{random_element(4, rng), random_element(4, rng)};
    const auto [tw, ts] = tau_involution(w, s);
    CHECK((pi_tensor_eval(H(), tw, ts) - pi_tensor_eval(H(), w, s)).norm() < 1e-14);
    // pi(w, s) = 0 exactly on W(L_s).
    const ComplexSubspace sub = minus_i_eigenspace(H(), s);
    const ComplexVector coeff = ComplexVector::NullaryExpr(sub.rank(), [&] { return random_complex(rng); });
    const ComplexElement member = ComplexElement::from_vector(sub.basis * coeff);
    CHECK(pi_tensor_eval(H(), member, s).norm() < 1e-9);
    const bool in_span = pi_tensor_eval(H(), w, s).norm() < 1e-9;
    CHECK_FALSE(in_span);
  }
}

TEST_CASE("zero_variety_witness examples") {
  auto found = zero_variety_witness(H(), {q(1, 0, 0, 0), q(0, 1, 0, 0)});
  REQUIRE(found.verdict == Verdict::Member);
  CHECK(found.witness->s.element().isApprox(q(0, 1, 0, 0)));

  CHECK(zero_variety_witness(H(), ComplexElement::real(q(1, 0, 0, 0))).verdict == Verdict::NonMember);

  Rng rng = make_rng(8);
  const auto j = root(q(0, 0, 1, 0));
  for (int k = 0; k < 20; ++k) {
    const Element a = random_element(4, rng);
    const auto w = ComplexElement{a, H().multiply(j.element(), a)};
    const auto r = zero_variety_witness(H(), w);
    REQUIRE(r.verdict == Verdict::Member);
    CHECK((r.witness->s.element() - j.element()).norm() < 1e-12);
  }

  // The zero element has every root as a witness.
  const auto zero = zero_variety_witness(H(), ComplexElement::zero(4));
  CHECK(zero.verdict == Verdict::Member);
}

TEST_CASE("invertible b is decided by is_root(-a b^-1)") {
  Rng rng = make_rng(21);
  const auto seed = root(q(0, 1, 0, 0));
  std::vector<RootOfMinusOne> probes;
  for (int k = 0; k < 2000; ++k) probes.push_back(sample_root(H(), seed, rng));
  for (int trial = 0; trial < 100; ++trial) {
    ComplexElement w{random_element(4, rng), random_element(4, rng)};
    if (trial % 2 == 0) w.re = -H().multiply(probes[trial].element(), w.im);
    const auto verdict = zero_variety_witness(H(), w).verdict;
    // Oracle: quaternion -a b^-1 has unit norm and zero real part iff it is a root.
    const auto s = oracle::qscale(-1, oracle::qmul(oracle::from_vec(w.re), oracle::qinv(oracle::from_vec(w.im))));
    const bool expected = std::abs(s[0]) < 1e-9 && std::abs(oracle::qnorm2(s) - 1) < 1e-9;
    CHECK((verdict == Verdict::Member) == expected);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : probes) best = std::min(best, pi_tensor_eval(H(), w, p).norm());
    if (!expected) CHECK(best > 1e-6);
  }
}

TEST_CASE("zerodivisor b uses the affine Newton search") {
  const Algebra c11 = clifford_algebra(1, 1);
  const Element e2 = c11.basis(2);
  // b = 1 + e1 is a zerodivisor; w = (-s b, b) with s = e2 is a member.
  const Element b = c11.unit() + c11.basis(1);
  const ComplexElement w{-c11.multiply(e2, b), b};
  const auto r = zero_variety_witness(c11, w);
  REQUIRE(r.verdict == Verdict::Member);
  CHECK(r.witness->residual < 1e-9);
  CHECK(is_root(c11, r.witness->s.element()));
  // Inconsistent linear system: a = 1 cannot be written as -s b.
  CHECK(zero_variety_witness(c11, {c11.unit(), b}).verdict == Verdict::NonMember);
}

TEST_CASE("leaf membership") {
  const Element a = q(1, 2, 3, 4);
  const auto all = leaf_membership(H(), ComplexElement::real(a), a);
  REQUIRE(all.verdict == Verdict::Member);
  CHECK(all.witness->residual == 0.0);

  // (1 + j, i) at target 1: s = -j i^-1 = j i = -k.
  const auto r = leaf_membership(H(), {q(1, 0, 1, 0), q(0, 1, 0, 0)}, q(1, 0, 0, 0));
  REQUIRE(r.verdict == Verdict::Member);
  const auto expected = oracle::qscale(-1, oracle::qmul({0, 0, 1, 0}, oracle::qinv({0, 1, 0, 0})));
  CHECK((r.witness->s.element() - oracle::to_vec(expected)).norm() < 1e-12);
  CHECK(r.witness->s.element().isApprox(q(0, 0, 0, -1)));
}

TEST_CASE("right absorption") {
  const ComplexElement w{q(1, 0, 0, 0), q(0, 1, 0, 0)};
  const auto i = root(q(0, 1, 0, 0));
  const auto r = right_absorption(H(), w, i, ComplexElement::real(q(0, 0, 1, 0)));
  CHECK(r.w.re.isApprox(q(0, 0, 1, 0)));
  CHECK(r.w.im.isApprox(q(0, 0, 0, 1)));
  CHECK(r.residual < 1e-15);
  CHECK(right_absorption(H(), w, i, ComplexElement::real(H().unit())).w.im.isApprox(w.im));
  CHECK(right_absorption(H(), w, i, ComplexElement::zero(4)).residual == 0.0);
  try {
    right_absorption(H(), w, root(q(0, 0, 1, 0)), ComplexElement::zero(4));
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailed);
  }

  Rng rng = make_rng(12);
  for (int k = 0; k < 100; ++k) {
    const auto s = sample_root(H(), i, rng);
    const Element a = random_element(4, rng);
    const ComplexElement m{a, H().multiply(s.element(), a)};
    const ComplexElement wp{random_element(4, rng), random_element(4, rng)};
    CHECK(right_absorption(H(), m, s, wp).residual <= 1e-8 * (1 + m.norm() * wp.norm()));
  }
}

TEST_CASE("left absorption") {
  const ComplexElement w{q(1, 0, 0, 0), q(0, 1, 0, 0)};
  const auto i = root(q(0, 1, 0, 0));
  const auto r = left_absorption(H(), w, i, ComplexElement::real(q(0, 0, 1, 0)));
  REQUIRE(r.verdict == Verdict::Member);
  CHECK(r.by_formula);
  // Oracle: b = (t a - p) a (t a - p)^-1 with p = j, t = 0, a = i.
  const oracle::Quat m = oracle::qscale(-1, {0, 0, 1, 0});
  const auto b = oracle::qmul(oracle::qmul(m, {0, 1, 0, 0}), oracle::qinv(m));
  CHECK((r.witness->s.element() - oracle::to_vec(b)).norm() < 1e-12);
  CHECK(r.formula_root_residual < 1e-12);
  CHECK(r.witness->residual < 1e-12);

  const auto same = left_absorption(H(), w, i, ComplexElement::real(H().unit()));
  CHECK(same.witness->s.element().isApprox(i.element()));

  Rng rng = make_rng(13);
  for (int k = 0; k < 200; ++k) {
    const auto s = sample_root(H(), i, rng);
    const Element a = random_element(4, rng);
    const ComplexElement m{a, H().multiply(s.element(), a)};
    const ComplexElement wp{random_element(4, rng), random_element(4, rng)};
    const auto l = left_absorption(H(), m, s, wp);
    REQUIRE(l.verdict == Verdict::Member);
    CHECK(root_residual(H(), l.witness->s.element()) <= 1e-9);
    CHECK(l.witness->residual <= 1e-8 * (1 + m.norm() * wp.norm()));
  }
}

TEST_CASE("left absorption in a non-compact case reports a verdict") {
  const Algebra c11 = clifford_algebra(1, 1);
  const auto s = RootOfMinusOne::from(c11, c11.basis(2));
  const ComplexElement w{c11.unit(), s.element()};
  Rng rng = make_rng(14);
  for (int k = 0; k < 20; ++k) {
    const ComplexElement wp{random_element(4, rng), random_element(4, rng)};
    const auto l = left_absorption(c11, w, s, wp);
    if (l.witness) CHECK(l.witness->residual <= 1e-6 * (1 + wp.norm()));
  }
}

TEST_CASE("zero scan on the quaternions") {
  const int n = 4;
  const Element one = H().unit();
  const Element zero = H().zero();
  auto poly = [&](std::vector<double> c) {
    std::vector<Element> coeffs;
    for (double x : c) coeffs.push_back(x * one);
    return stem_from_slice_poly(n, coeffs);
  };

  SUBCASE("x^2 + 1") {
    const auto z = discrete_zero_scan(H(), poly({1, 0, 1}), {}, zero);
    REQUIRE(z.size() == 2);
    CHECK(std::abs(z[0].z - Complex(0, -1)) < 1e-9);
    CHECK(std::abs(z[1].z - Complex(0, 1)) < 1e-9);
    CHECK(z[1].cls == "sphere");
    CHECK(z[1].witnesses == 64);
  }
  SUBCASE("x^2 - 1") {
    const auto z = discrete_zero_scan(H(), poly({-1, 0, 1}), {}, zero);
    REQUIRE(z.size() == 2);
    CHECK(z[0].z == Complex(-1, 0));
    CHECK(z[1].z == Complex(1, 0));
    CHECK(z[0].cls == "real");
  }
  SUBCASE("x^2 + x + 1") {
    const auto z = discrete_zero_scan(H(), poly({1, 1, 1}), {}, zero);
    REQUIRE(z.size() == 2);
    const Complex expected(-0.5, std::sqrt(3.0) / 2);
    CHECK(std::abs(z[1].z - expected) < 1e-9);
    CHECK(z[1].cls == "sphere");
    // Every sampled s gives a zero at (-1 + sqrt(3) s) / 2.
    Rng rng = make_rng(1);
    for (int k = 0; k < 20; ++k) {
      const auto s = sample_root(H(), root(q(0, 1, 0, 0)), rng);
      const Element x = pi_eval(H(), expected, s);
      const Element px = H().multiply(x, x) + x + one;
      CHECK(px.norm() < 1e-12);
    }
  }
  SUBCASE("x - 1") {
    const auto z = discrete_zero_scan(H(), poly({-1, 1}), {}, zero);
    REQUIRE(z.size() == 1);
    CHECK(z[0].z == Complex(1, 0));
  }
  SUBCASE("isolated zero of x - q") {
    // x = q is the only zero: z = q0 + i|Im q| with the single root Im q / |Im q|.
    const Element target = q(0.5, 0.3, -0.4, 0);
    const auto z = discrete_zero_scan(H(), poly({0, 1}), {}, target);
    REQUIRE(z.size() == 2);
    CHECK(std::abs(z[1].z - Complex(0.5, 0.5)) < 1e-9);
    CHECK(z[1].cls == "isolated");
  }
  SUBCASE("non-intrinsic stem is rejected") {
    StemPolynomial f(n, {ComplexElement{zero, one}});
    try {
      discrete_zero_scan(H(), f, {}, zero);
      FAIL("expected NotIntrinsic");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotIntrinsic);
    }
  }
}

TEST_CASE("region parsing") {
  const Region r = parse_region("-1,2,0.5,1.5");
  CHECK(r.x0 == -1);
  CHECK(r.y0 == -1.5);
  CHECK(r.y1 == 1.5);
  CHECK_THROWS_AS(parse_region("1,2,3"), Error);
  CHECK_THROWS_AS(parse_region("a,b,c,d"), Error);
  CHECK_THROWS_AS(parse_region("2,1,0,1"), Error);
}

TEST_CASE("zero scan JSON schema") {
  const std::vector<ZeroScanEntry> e{{Complex(0, 1), "sphere", 64, 1e-16}};
  const auto j = to_json(e);
  CHECK(j[0]["z"][1] == 1.0);
  CHECK(j[0]["class"] == "sphere");
  CHECK(j[0]["witnesses"] == 64);
  CHECK(to_csv(e).rfind("re,im,class\n", 0) == 0);
}
