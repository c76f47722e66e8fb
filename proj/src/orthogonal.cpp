#include "slicealg/orthogonal.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

#include "slicealg/linalg.hpp"

namespace slicealg {

namespace {

constexpr int kSampleAttempts = 64;

}  // namespace

InnerProduct InnerProduct::identity(int n) {
  return InnerProduct(Matrix::Identity(n, n), Matrix::Identity(n, n));
}

InnerProduct InnerProduct::from_gram(Matrix gram) {
  if (gram.rows() != gram.cols() || gram.rows() == 0)
    throw Error(ErrorCode::NotPositiveDefinite, "Gram matrix must be square and non-empty");
  const double scale = 1.0 + gram.cwiseAbs().maxCoeff();
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw Error(ErrorCode::NotPositiveDefinite, "Gram matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  if (eig.eigenvalues().minCoeff() <= 0.0)
    throw Error(ErrorCode::NotPositiveDefinite, "Gram matrix has a non-positive eigenvalue");
  Matrix inv = gram.inverse();
  return InnerProduct(std::move(gram), std::move(inv));
}

Matrix adjoint(const OperatorMatrix& l, const InnerProduct& g) { return g.adjoint(l.entries); }

S0Conditions s0_conditions(const Algebra& alg, const Element& s, const InnerProduct& g,
                           double tol) {
  const int n = alg.dimension();
  const Matrix l = alg.left(s);
  const Matrix lt = g.adjoint(l);
  const double scale = 1.0 + l.norm();
  S0Conditions c;
  c.square = root_residual(alg, s);
  c.orthogonal = (l * lt - Matrix::Identity(n, n)).norm();
  c.antisymmetric = (l + lt).norm();
  c.satisfied = (c.square <= tol * scale) + (c.orthogonal <= tol * scale * scale) +
                (c.antisymmetric <= tol * scale);
  return c;
}

bool is_in_S0(const Algebra& alg, const Element& s, const InnerProduct& g, double tol) {
  return s0_conditions(alg, s, g, tol).satisfied >= 2;
}

Matrix antisymmetric_subspace(const Algebra& alg, const InnerProduct& g) {
  const int n = alg.dimension();
  // Column j is vec(L_{e_j} + L_{e_j}^t); the map is linear in a.
  Matrix system(n * n, n);
  for (int j = 0; j < n; ++j) {
    const Matrix l = alg.left(alg.basis(j));
    const Matrix sym = l + g.adjoint(l);
    system.col(j) = Eigen::Map<const Eigen::VectorXd>(sym.data(), n * n);
  }
  return linalg::null_space(system);
}

RootOfMinusOne sample_S0(const Algebra& alg, const InnerProduct& g, Rng& rng) {
  const Matrix a0 = antisymmetric_subspace(alg, g);
  if (a0.cols() == 0) throw Error(ErrorCode::NotFound, "A_0 is trivial");
  const Element offset = alg.zero();
  for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
    Eigen::VectorXd t(a0.cols());
    for (Eigen::Index i = 0; i < t.size(); ++i) t(i) = standard_normal(rng);
    if (auto s = newton_root_in(alg, offset, a0, t)) {
      if (is_in_S0(alg, *s, g)) return RootOfMinusOne::from(alg, *s);
    }
  }
  throw Error(ErrorCode::NotFound, "no root of -1 found in A_0");
}

IdentityReport orthogonality_characterization(const Algebra& alg, const RootOfMinusOne& s,
                                              const InnerProduct& g, std::uint64_t seed,
                                              double tol) {
  const int n = alg.dimension();
  double basis_norm = 0.0, basis_orth = 0.0, random_norm = 0.0, random_orth = 0.0;
  auto probe = [&](const Element& a, double& norm_res, double& orth_res) {
    const Element sa = alg.multiply(s.element(), a);
    const double aa = g.dot(a, a);
    norm_res = std::max(norm_res, std::abs(g.dot(sa, sa) - aa) / (1.0 + aa));
    orth_res = std::max(orth_res, std::abs(g.dot(sa, a)) / (1.0 + aa));
  };
  for (int j = 0; j < n; ++j) probe(alg.basis(j), basis_norm, basis_orth);
  Rng rng = make_rng(seed, 0x0A7);
  for (int k = 0; k < 32; ++k) probe(random_element(n, rng), random_norm, random_orth);
  const double t = tol * (1.0 + s.element().squaredNorm());
  return {{"<sa,sa> = <a,a> on basis", basis_norm, basis_norm <= t},
          {"<sa,a> = 0 on basis", basis_orth, basis_orth <= t},
          {"<sa,sa> = <a,a> on random a", random_norm, random_norm <= t},
          {"<sa,a> = 0 on random a", random_orth, random_orth <= t}};
}

std::optional<ConeDecomposition> cone_decompose(const Algebra& alg, const Element& x,
                                                const InnerProduct& g, double tol) {
  const int n = alg.dimension();
  const Matrix l = alg.left(x);
  const Matrix lt = g.adjoint(l);
  const Matrix id = Matrix::Identity(n, n);
  const double scale = 1.0 + x.squaredNorm();
  const double beta = (l + lt).trace() / (2.0 * n);
  const double alpha2 = (lt * l).trace() / n;
  if ((l + lt - 2.0 * beta * id).norm() > tol * scale) return std::nullopt;
  if ((lt * l - alpha2 * id).norm() > tol * scale) return std::nullopt;
  if (alpha2 < beta * beta - tol * scale) return std::nullopt;

  ConeDecomposition out;
  out.beta = beta;
  out.alpha = std::sqrt(std::max(alpha2, 0.0));
  // gamma from |x - beta|_G = gamma |1|_G avoids the cancellation in alpha^2 - beta^2.
  const Element imaginary = x - beta * alg.unit();
  const double gamma = g.norm(imaginary) / g.norm(alg.unit());
  if (gamma <= tol * (1.0 + std::abs(beta))) return out;
  const Element s = imaginary / gamma;
  if (!is_root(alg, s, tol) || !is_in_S0(alg, s, g, tol)) return std::nullopt;
  out.root = RootOfMinusOne::from(alg, s, tol);
  return out;
}

double z0_residual(const Algebra& alg, const ComplexElement& w, const InnerProduct& g) {
  ComplexMatrix lw(alg.dimension(), alg.dimension());
  lw.real() = alg.left(w.re);
  lw.imag() = alg.left(w.im);
  const ComplexMatrix gram = g.gram().cast<Complex>();
  const ComplexMatrix gram_inv = g.gram().inverse().cast<Complex>();
  return (gram_inv * lw.transpose() * gram * lw).norm();
}

bool z0_member(const Algebra& alg, const ComplexElement& w, const InnerProduct& g, double tol) {
  const double norm = w.norm();
  if (norm == 0.0) return true;
  return z0_residual(alg, {w.re / norm, w.im / norm}, g) <= tol;
}

Z0Equivalence z0_equivalence_check(const Algebra& alg, const ComplexElement& w,
                                   const InnerProduct& g, std::uint64_t seed, double tol) {
  Z0Equivalence out;
  out.equations = z0_member(alg, w, g, tol);
  const Matrix a0 = antisymmetric_subspace(alg, g);
  if (a0.cols() > 0) {
    const double norm = w.norm();
    const ComplexElement unit = norm == 0.0 ? w : ComplexElement{w.re / norm, w.im / norm};
    out.witness = zero_variety_witness_within(alg, unit, a0, seed).verdict;
  }
  out.agree = out.equations == (out.witness == Verdict::Member);

  if (!is_zerodivisor(alg, w.re) && !is_zerodivisor(alg, w.im)) {
    const int n = alg.dimension();
    const Element u = alg.multiply(w.im, inverse(alg, w.re));
    const Matrix lu = alg.left(u);
    const Matrix lut = g.adjoint(lu);
    const double scale = 1.0 + lu.norm();
    const double orth = (lut * lu - Matrix::Identity(n, n)).norm();
    const double anti = (lut + lu).norm();
    const double fact = (alg.left(w.im) - lu * alg.left(w.re)).norm();
    out.replay = IdentityReport{
        {"L_u^t L_u = I", orth, orth <= tol * scale * scale},
        {"L_u^t + L_u = 0", anti, anti <= tol * scale},
        {"L_b = L_u L_a", fact, fact <= tol * scale * (1.0 + w.norm())}};
  }
  return out;
}

}  // namespace slicealg
