#pragma once

#include <optional>

#include "slicealg/zero_variety.hpp"

namespace slicealg {

/// <a, b> = a^T G b with G symmetric positive definite.
class InnerProduct {
 public:
  static InnerProduct identity(int n);
  /// Throws NotPositiveDefinite (also for non-symmetric or non-square G).
  static InnerProduct from_gram(Matrix gram);

  int dimension() const noexcept { return static_cast<int>(gram_.rows()); }
  const Matrix& gram() const noexcept { return gram_; }
  double dot(const Element& a, const Element& b) const { return a.dot(gram_ * b); }
  double norm(const Element& a) const { return std::sqrt(dot(a, a)); }
  /// G^-1 L^T G.
  Matrix adjoint(const Matrix& l) const { return gram_inverse_ * l.transpose() * gram_; }

 private:
  InnerProduct(Matrix g, Matrix gi) : gram_(std::move(g)), gram_inverse_(std::move(gi)) {}
  Matrix gram_;
  Matrix gram_inverse_;
};

Matrix adjoint(const OperatorMatrix& l, const InnerProduct& g);

/// Residuals of s^2 = -1, L_s L_s^t = I and L_s + L_s^t = 0.
struct S0Conditions {
  double square = 0.0;
  double orthogonal = 0.0;
  double antisymmetric = 0.0;
  int satisfied = 0;
};

S0Conditions s0_conditions(const Algebra& alg, const Element& s, const InnerProduct& g,
                           double tol = kDefaultTolerance);

/// At least two of the three conditions hold.
bool is_in_S0(const Algebra& alg, const Element& s, const InnerProduct& g,
              double tol = kDefaultTolerance);

/// Orthonormal (Euclidean) basis of A_0 = {a : L_a + L_a^t = 0}; N x dim A_0.
Matrix antisymmetric_subspace(const Algebra& alg, const InnerProduct& g);

/// Newton on s^2 + 1 = 0 inside A_0. Throws NotFound.
RootOfMinusOne sample_S0(const Algebra& alg, const InnerProduct& g, Rng& rng);

/// <sa, sa> = <a, a> and <sa, a> = 0 on the basis and on 32 random a.
IdentityReport orthogonality_characterization(const Algebra& alg, const RootOfMinusOne& s,
                                              const InnerProduct& g, std::uint64_t seed = 0,
                                              double tol = kDefaultTolerance);

/// x = beta + gamma s with s in S_0, alpha^2 = beta^2 + gamma^2.
struct ConeDecomposition {
  double beta = 0.0;
  double alpha = 0.0;
  std::optional<RootOfMinusOne> root;  // none for real x
};

/// nullopt if x is not in the quadratic cone.
std::optional<ConeDecomposition> cone_decompose(const Algebra& alg, const Element& x,
                                                const InnerProduct& g, double tol = 1e-8);

/// |G^-1 L_w^T G L_w|_F with L_w = L_a + i L_b and a plain transpose.
double z0_residual(const Algebra& alg, const ComplexElement& w, const InnerProduct& g);

/// z0_residual of w / |w| at most tol; the zero element is a member.
bool z0_member(const Algebra& alg, const ComplexElement& w, const InnerProduct& g,
               double tol = 1e-8);

struct Z0Equivalence {
  bool equations = false;                // z0_member
  Verdict witness = Verdict::NonMember;  // witness search restricted to S_0
  bool agree = false;
  /// For invertible components, u = b a^-1 is checked against
  /// L_u^t L_u = I, L_u^t + L_u = 0 and L_b = L_u L_a.
  std::optional<IdentityReport> replay;
};

Z0Equivalence z0_equivalence_check(const Algebra& alg, const ComplexElement& w,
                                   const InnerProduct& g, std::uint64_t seed = 0,
                                   double tol = 1e-8);

}  // namespace slicealg
