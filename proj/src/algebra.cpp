#include "slicealg/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace slicealg {

char to_char(OperatorKind kind) noexcept {
  switch (kind) {
    case OperatorKind::L: return 'L';
    case OperatorKind::R: return 'R';
    case OperatorKind::F: return 'F';
    case OperatorKind::T: return 'T';
  }
  return '?';
}

Algebra Algebra::make(std::vector<double> structure_constants, int unit_index,
                      std::vector<std::string> labels, std::string name, double tol) {
  const std::size_t total = structure_constants.size();
  int n = static_cast<int>(std::lround(std::cbrt(static_cast<double>(total))));
  if (n < 1 || static_cast<std::size_t>(n) * n * n != total)
    throw Error(ErrorCode::BadTensor, "structure constant count " + std::to_string(total) +
                                          " is not N^3 for N >= 1");
  if (n > kMaxDimension)
    throw Error(ErrorCode::TooLarge, "dimension " + std::to_string(n) + " exceeds " +
                                         std::to_string(kMaxDimension));
  if (unit_index < 0 || unit_index >= n)
    throw Error(ErrorCode::BadUnit, "unit index out of range");
  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = "b" + std::to_string(i);
  }
  if (static_cast<int>(labels.size()) != n)
    throw Error(ErrorCode::BadTensor, "label count does not match dimension");

  Algebra alg;
  alg.dim_ = n;
  alg.unit_ = unit_index;
  alg.constants_ = std::move(structure_constants);
  alg.labels_ = std::move(labels);
  alg.name_ = std::move(name);

  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double expect = (i == k) ? 1.0 : 0.0;
      if (alg.constant(unit_index, i, k) != expect || alg.constant(i, unit_index, k) != expect)
        throw Error(ErrorCode::BadUnit, "basis element " + std::to_string(unit_index) +
                                            " is not a two-sided unit (fails on " +
                                            alg.labels_[i] + ")");
    }

  alg.build_products();
  const double assoc = alg.associativity_residual();
  if (!(assoc <= tol))
    throw Error(ErrorCode::NonAssociative,
                "max associator residual " + std::to_string(assoc));
  return alg;
}

void Algebra::build_products() {
  products_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        const double c = constant(i, j, k);
        if (c != 0.0) products_[static_cast<std::size_t>(i) * dim_ + j].emplace_back(k, c);
      }
}

void Algebra::check_dims(const Element& a) const {
  if (a.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "element of length " + std::to_string(a.size()) +
                                                  " in algebra of dimension " +
                                                  std::to_string(dim_));
}

Element Algebra::basis(int i) const {
  Element e = Element::Zero(dim_);
  e(i) = 1.0;
  return e;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  check_dims(a);
  check_dims(b);
  Element out = Element::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    const double ai = a(i);
    if (ai == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      const double w = ai * b(j);
      if (w == 0.0) continue;
      for (const auto& [k, c] : products_[static_cast<std::size_t>(i) * dim_ + j]) out(k) += w * c;
    }
  }
  return out;
}

Matrix Algebra::left(const Element& a) const {
  check_dims(a);
  Matrix m = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (a(i) == 0.0) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, c] : products_[static_cast<std::size_t>(i) * dim_ + j])
        m(k, j) += a(i) * c;
  }
  return m;
}

Matrix Algebra::right(const Element& a) const {
  check_dims(a);
  Matrix m = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (a(i) == 0.0) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, c] : products_[static_cast<std::size_t>(j) * dim_ + i])
        m(k, j) += a(i) * c;
  }
  return m;
}

double Algebra::associativity_residual(Execution exec) const {
  const int n = dim_;
  std::vector<double> worst(n, 0.0);
  for_each_index(static_cast<std::size_t>(n), exec, [&](std::size_t ii) {
    const int i = static_cast<int>(ii);
    Element lhs(n), rhs(n);
    double w = 0.0;
    for (int j = 0; j < n; ++j) {
      const auto& ij = products_[static_cast<std::size_t>(i) * n + j];
      for (int k = 0; k < n; ++k) {
        lhs.setZero();
        for (const auto& [m, c] : ij)
          for (const auto& [r, d] : products_[static_cast<std::size_t>(m) * n + k]) lhs(r) += c * d;
        rhs.setZero();
        for (const auto& [m, c] : products_[static_cast<std::size_t>(j) * n + k])
          for (const auto& [r, d] : products_[static_cast<std::size_t>(i) * n + m]) rhs(r) += c * d;
        w = std::max(w, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
    worst[ii] = w;
  });
  return n == 0 ? 0.0 : *std::max_element(worst.begin(), worst.end());
}

Algebra Algebra::with_signature(CliffordSignature sig, std::string name) const {
  Algebra copy = *this;
  copy.clifford_ = sig;
  copy.name_ = std::move(name);
  return copy;
}

Algebra Algebra::with_labels(std::vector<std::string> labels, std::string name) const {
  if (static_cast<int>(labels.size()) != dim_)
    throw Error(ErrorCode::BadTensor, "label count does not match dimension");
  Algebra copy = *this;
  copy.labels_ = std::move(labels);
  copy.name_ = std::move(name);
  return copy;
}

Algebra make_algebra(std::vector<double> structure_constants, int unit_index,
                     std::vector<std::string> labels, double tol) {
  return Algebra::make(std::move(structure_constants), unit_index, std::move(labels), "custom",
                       tol);
}

namespace {

// Sign of e_A e_B from reordering generators into canonical order.
int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  return (swaps & 1) ? -1 : 1;
}

}  // namespace

Algebra clifford_algebra(int p, int q) {
  if (p < 0 || q < 0) throw Error(ErrorCode::BadTensor, "negative signature");
  const int n = p + q;
  if (n > 6) throw Error(ErrorCode::TooLarge, "Clifford algebras are limited to p + q <= 6");
  const int dim = 1 << n;

  std::vector<unsigned> masks(dim);
  std::iota(masks.begin(), masks.end(), 0u);
  auto indices_of = [n](unsigned m) {
    std::vector<int> idx;
    for (int g = 0; g < n; ++g)
      if (m & (1u << g)) idx.push_back(g);
    return idx;
  };
  std::sort(masks.begin(), masks.end(), [&](unsigned x, unsigned y) {
    const int cx = std::popcount(x), cy = std::popcount(y);
    if (cx != cy) return cx < cy;
    return indices_of(x) < indices_of(y);
  });
  std::vector<int> position(dim);
  for (int i = 0; i < dim; ++i) position[masks[i]] = i;

  std::vector<std::string> labels(dim);
  for (int i = 0; i < dim; ++i) {
    if (masks[i] == 0) {
      labels[i] = "1";
      continue;
    }
    std::string label = "e";
    for (int g : indices_of(masks[i])) label += std::to_string(g + 1);
    labels[i] = label;
  }

  std::vector<double> constants(static_cast<std::size_t>(dim) * dim * dim, 0.0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const unsigned a = masks[i], b = masks[j];
      int sign = reorder_sign(a, b);
      const unsigned common = a & b;
      for (int g = p; g < n; ++g)
        if (common & (1u << g)) sign = -sign;
      const int k = position[a ^ b];
      constants[(static_cast<std::size_t>(i) * dim + j) * dim + k] = sign;
    }

  Algebra alg = Algebra::make(std::move(constants), 0, std::move(labels),
                              "clifford " + std::to_string(p) + " " + std::to_string(q));
  return alg.with_signature({p, q}, alg.name());
}

Algebra quaternions() {
  return clifford_algebra(0, 2).with_labels({"1", "i", "j", "k"}, "quaternions");
}

Algebra complex_numbers() {
  return clifford_algebra(0, 1).with_labels({"1", "i"}, "complex");
}

Algebra real_numbers() {
  return clifford_algebra(0, 0).with_labels({"1"}, "reals");
}

int pseudoscalar_index(const Algebra& alg) { return alg.dimension() - 1; }

Element multiply(const Algebra& alg, const Element& a, const Element& b) {
  return alg.multiply(a, b);
}

OperatorMatrix operator_matrix(const Algebra& alg, const Element& a, OperatorKind kind) {
  switch (kind) {
    case OperatorKind::L: return {alg.left(a), kind};
    case OperatorKind::R: return {alg.right(a), kind};
    case OperatorKind::F: return {alg.left(a) + alg.right(a), kind};
    case OperatorKind::T: return {alg.left(a) * alg.right(a), kind};
  }
  return {};
}

bool is_zerodivisor(const Algebra& alg, const Element& a) {
  return linalg::inverse_condition(alg.left(a)) < kRankTolerance ||
         linalg::inverse_condition(alg.right(a)) < kRankTolerance;
}

Element inverse(const Algebra& alg, const Element& a) {
  const Matrix l = alg.left(a);
  if (linalg::inverse_condition(l) < kRankTolerance)
    throw Error(ErrorCode::ZeroDivisor, "left multiplication operator is singular");
  return l.fullPivLu().solve(alg.unit());
}

}  // namespace slicealg
