#include <algorithm>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "slicealg/algebra.hpp"
#include "slicealg/algebra_io.hpp"
#include "slicealg/random.hpp"

using namespace slicealg;

namespace {

Element q(double a, double b, double c, double d) {
  Element e(4);
  e << a, b, c, d;
  return e;
}

std::vector<double> quaternion_table() {
  std::vector<double> c(64, 0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      oracle::Quat a{}, b{};
      a[i] = 1;
      b[j] = 1;
      const auto p = oracle::qmul(a, b);
      for (int k = 0; k < 4; ++k) c[(i * 4 + j) * 4 + k] = p[k];
    }
  return c;
}

}  // namespace

TEST_CASE("quaternion table from Hamilton's rules") {
  const Algebra h = make_algebra(quaternion_table(), 0, {"1", "i", "j", "k"});
  CHECK(h.dimension() == 4);
  CHECK(h.multiply(q(0, 1, 0, 0), q(0, 0, 1, 0)).isApprox(q(0, 0, 0, 1)));
  CHECK(h.multiply(q(0, 0, 1, 0), q(0, 1, 0, 0)).isApprox(q(0, 0, 0, -1)));
  CHECK(h.associativity_residual() == 0.0);
}

TEST_CASE("make_algebra rejects broken tables") {
  SUBCASE("non-associative") {
    // Make j i = +k: then (j i) i = k i = j but j (i i) = -j.
    auto c = quaternion_table();
    c[(2 * 4 + 1) * 4 + 3] = 1;
    try {
      make_algebra(c, 0, {"1", "i", "j", "k"});
      FAIL("expected NonAssociative");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonAssociative);
    }
  }
  SUBCASE("bad unit") {
    auto c = quaternion_table();
    try {
      make_algebra(c, 1, {"1", "i", "j", "k"});
      FAIL("expected BadUnit");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadUnit);
    }
  }
  SUBCASE("wrong tensor size") {
    try {
      make_algebra(std::vector<double>(10, 0.0), 0, {"1"});
      FAIL("expected BadTensor");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadTensor);
    }
  }
}

TEST_CASE("reals") {
  const Algebra r = real_numbers();
  CHECK(r.dimension() == 1);
  CHECK(r.multiply(r.scalar(3), r.scalar(-2))(0) == doctest::Approx(-6));
}

TEST_CASE("clifford blade products match the swap-counting oracle") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 1}, {2, 0}, {0, 3}, {3, 0}, {1, 2}, {2, 2}, {1, 3}, {3, 2}}) {
    CAPTURE(p);
    CAPTURE(q);
    const Algebra a = clifford_algebra(p, q);
    const int n = p + q;
    const auto masks = oracle::clifford_masks(n);
    REQUIRE(a.dimension() == static_cast<int>(masks.size()));
    std::map<unsigned, int> index;
    for (std::size_t i = 0; i < masks.size(); ++i) index[masks[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < masks.size(); ++i)
      for (std::size_t j = 0; j < masks.size(); ++j) {
        const auto [sign, mask] = oracle::blade_product(masks[i], masks[j], p);
        for (int k = 0; k < a.dimension(); ++k)
          CHECK(a.constant(static_cast<int>(i), static_cast<int>(j), k) == (k == index[mask] ? sign : 0));
      }
  }
}

TEST_CASE("clifford examples") {
  const Algebra c01 = clifford_algebra(0, 1);
  CHECK(c01.dimension() == 2);
  CHECK(c01.multiply(c01.basis(1), c01.basis(1)).isApprox(-c01.unit()));

  const Algebra c02 = clifford_algebra(0, 2);
  CHECK(c02.dimension() == 4);
  CHECK(c02.multiply(c02.basis(1), c02.basis(1)).isApprox(-c02.unit()));
  const Element e12 = c02.basis(3);
  CHECK(c02.multiply(e12, e12).isApprox(-c02.unit()));
  CHECK(c02.labels() == std::vector<std::string>{"1", "e1", "e2", "e12"});

  const Algebra c11 = clifford_algebra(1, 1);
  CHECK(c11.multiply(c11.basis(1), c11.basis(1)).isApprox(c11.unit()));
  CHECK(c11.multiply(c11.basis(2), c11.basis(2)).isApprox(-c11.unit()));

  try {
    clifford_algebra(4, 3);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("operator matrices") {
  const Algebra h = quaternions();
  const Element i = q(0, 1, 0, 0);
  const Matrix l = operator_matrix(h, i, OperatorKind::L).entries;
  // Columns are L(1) = i, L(i) = -1, L(j) = k, L(k) = -j.
  Matrix expected(4, 4);
  expected << 0, -1, 0, 0,
              1, 0, 0, 0,
              0, 0, 0, -1,
              0, 0, 1, 0;
  CHECK(l.isApprox(expected));
  CHECK((l * l + Matrix::Identity(4, 4)).norm() == doctest::Approx(0).epsilon(1e-15));
  const Matrix t = operator_matrix(h, i, OperatorKind::T).entries;
  CHECK(t.trace() == doctest::Approx(0.0));
  // T_i = diag(-1, -1, 1, 1) on (1, i, j, k).
  CHECK(t.isApprox(Eigen::Vector4d(-1, -1, 1, 1).asDiagonal().toDenseMatrix()));
}

TEST_CASE("operator identities hold for random elements") {
  Rng rng = make_rng(7);
  for (const Algebra& a : {quaternions(), clifford_algebra(1, 2), clifford_algebra(2, 2)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Element x = random_element(a.dimension(), rng);
      const Element y = random_element(a.dimension(), rng);
      const Matrix l = operator_matrix(a, x, OperatorKind::L).entries;
      const Matrix r = operator_matrix(a, x, OperatorKind::R).entries;
      const Matrix f = operator_matrix(a, x, OperatorKind::F).entries;
      const Matrix t = operator_matrix(a, x, OperatorKind::T).entries;
      CHECK((f - l - r).norm() < 1e-12);
      CHECK((t - l * r).norm() < 1e-12);
      CHECK((r * l - l * r).norm() < 1e-10);
      CHECK((f * f - l * l - r * r - 2 * t).norm() < 1e-9);
      const Element xy = a.multiply(x, y);
      CHECK((a.left(xy) - l * a.left(y)).norm() < 1e-10);
      CHECK((a.right(xy) - a.right(y) * r).norm() < 1e-10);
      const Element z = random_element(a.dimension(), rng);
      CHECK((a.multiply(2.5 * x + y, z) - 2.5 * a.multiply(x, z) - a.multiply(y, z)).norm() < 1e-12);
      if (a.clifford_signature())
        CHECK(l.trace() == doctest::Approx(a.dimension() * x(0)));
    }
  }
}

TEST_CASE("multiply checks dimensions") {
  const Algebra h = quaternions();
  try {
    h.multiply(Element::Ones(3), h.unit());
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("inverse and zerodivisors") {
  const Algebra h = quaternions();
  CHECK(inverse(h, q(0, 1, 0, 0)).isApprox(q(0, -1, 0, 0)));
  CHECK(inverse(h, h.unit()).isApprox(h.unit()));
  Rng rng = make_rng(3);
  for (int k = 0; k < 50; ++k) {
    const Element a = random_element(4, rng);
    CHECK_FALSE(is_zerodivisor(h, a));
    const auto expected = oracle::to_vec(oracle::qinv(oracle::from_vec(a)));
    CHECK((inverse(h, a) - expected).norm() < 1e-12);
  }
  CHECK(is_zerodivisor(h, h.zero()));

  const Algebra c11 = clifford_algebra(1, 1);
  const Element zd = c11.unit() + c11.basis(1);
  CHECK(is_zerodivisor(c11, zd));
  CHECK(c11.multiply(zd, c11.unit() - c11.basis(1)).norm() == 0.0);
  try {
    inverse(c11, zd);
    FAIL("expected ZeroDivisor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDivisor);
  }
}

TEST_CASE("algebra JSON round trip is exact for builtins") {
  for (const Algebra& a : {quaternions(), clifford_algebra(2, 1), complex_numbers()}) {
    const auto j = algebra_to_json(a);
    const std::string text = j.dump();
    CHECK(text.find(".0") == std::string::npos);  // integral constants
    const Algebra b = algebra_from_json_text(text);
    CHECK(b.structure_constants() == a.structure_constants());
    CHECK(b.labels() == a.labels());
  }
}

TEST_CASE("malformed algebra JSON reports the line") {
  try {
    algebra_from_json_text("{\n  \"dimension\": 1,\n  \"unit_index\": 0,\n  oops\n}");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("resolve_algebra names") {
  CHECK(resolve_algebra("clifford 0 2").dimension() == 4);
  CHECK(resolve_algebra("quaternions").labels()[1] == "i");
  CHECK(resolve_algebra("complex").dimension() == 2);
  CHECK(resolve_algebra("reals").dimension() == 1);
  CHECK_THROWS_AS(resolve_algebra("/nonexistent/algebra.json"), Error);
}
