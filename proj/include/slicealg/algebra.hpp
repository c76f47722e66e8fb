#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slicealg/error.hpp"
#include "slicealg/linalg.hpp"
#include "slicealg/parallel.hpp"

namespace slicealg {

/// Default comparison tolerance for identities and membership tests.
inline constexpr double kDefaultTolerance = 1e-9;

/// Largest supported dimension; Clifford algebras stop at n = 6.
inline constexpr int kMaxDimension = 64;

enum class OperatorKind { L, R, F, T };

char to_char(OperatorKind kind) noexcept;

struct CliffordSignature {
  int p = 0;  // generators squaring to +1
  int q = 0;  // generators squaring to -1

  int generators() const noexcept { return p + q; }
};

/// Finite-dimensional real associative unital algebra, stored as
/// structure constants c[i][j][k]: e_i e_j = sum_k c[i][j][k] e_k.
/// Immutable after construction.
class Algebra {
 public:
  /// Validates the tensor (flattened as (i*N + j)*N + k), the unit law and
  /// associativity. Throws Error with BadTensor, BadUnit or NonAssociative.
  static Algebra make(std::vector<double> structure_constants, int unit_index,
                      std::vector<std::string> labels, std::string name = "custom",
                      double tol = kDefaultTolerance);

  int dimension() const noexcept { return dim_; }
  int unit_index() const noexcept { return unit_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<double>& structure_constants() const noexcept { return constants_; }
  double constant(int i, int j, int k) const {
    return constants_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  const std::optional<CliffordSignature>& clifford_signature() const noexcept {
    return clifford_;
  }

  Element zero() const { return Element::Zero(dim_); }
  Element unit() const { return basis(unit_); }
  Element basis(int i) const;
  Element scalar(double x) const { return x * unit(); }

  /// Coefficient of the unit (s_0 for Clifford algebras).
  double real_part(const Element& a) const { return a(unit_); }

  Element multiply(const Element& a, const Element& b) const;

  Matrix left(const Element& a) const;
  Matrix right(const Element& a) const;

  /// max_{i,j,k} |(e_i e_j) e_k - e_i (e_j e_k)|_inf.
  double associativity_residual(Execution exec = Execution::Parallel) const;

  /// Marks the algebra as a Clifford algebra of the given signature (used by
  /// signature-dependent trace checks). Builtin constructors set this.
  Algebra with_signature(CliffordSignature sig, std::string name) const;
  Algebra with_labels(std::vector<std::string> labels, std::string name) const;

 private:
  Algebra() = default;
  void build_products();
  void check_dims(const Element& a) const;

  int dim_ = 0;
  int unit_ = 0;
  std::vector<double> constants_;
  std::vector<std::string> labels_;
  std::string name_;
  std::optional<CliffordSignature> clifford_;
  // Sparse table: products_[i*N + j] lists (k, c) with c != 0.
  std::vector<std::vector<std::pair<int, double>>> products_;
};

struct OperatorMatrix {
  Matrix entries;
  OperatorKind kind = OperatorKind::L;
};

Algebra make_algebra(std::vector<double> structure_constants, int unit_index,
                     std::vector<std::string> labels, double tol = kDefaultTolerance);

/// Clifford algebra R_{p,q}; basis e_I ordered by |I| then lexicographically,
/// e_{} = 1 at index 0. Throws TooLarge when p + q > 6.
Algebra clifford_algebra(int p, int q);

Algebra quaternions();      // Clifford (0,2) relabelled 1, i, j, k
Algebra complex_numbers();  // Clifford (0,1) relabelled 1, i
Algebra real_numbers();     // N = 1

/// Index of e_1 e_2 ... e_n in a Clifford basis (the last basis element).
int pseudoscalar_index(const Algebra& alg);

Element multiply(const Algebra& alg, const Element& a, const Element& b);

OperatorMatrix operator_matrix(const Algebra& alg, const Element& a, OperatorKind kind);

/// Throws ZeroDivisor when L_a is numerically singular.
Element inverse(const Algebra& alg, const Element& a);

/// True iff L_a or R_a has sigma_min < 1e-8 sigma_max (zero included).
bool is_zerodivisor(const Algebra& alg, const Element& a);

}  // namespace slicealg
