// Copyright 2026 The lebforms Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear-algebra primitives with an explicit tolerance policy:
// numerical kernels, PSD square roots, Moore-Penrose pseudo-inverses,
// orthogonal projectors and subspace arithmetic. Everything downstream makes
// its rank and residual decisions through a ToleranceContext; there are no
// hidden global thresholds.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "lebforms/errors.hpp"

namespace lebforms {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Thresholds for rank decisions and certificate residuals.
//
// A singular value s of a matrix A counts as zero iff
//   s <= rank_rel * max(1, s_max(A)),
// and a residual at problem scale `scale` is negligible iff it is at most
// cert_abs * max(1, scale).
struct ToleranceContext {
  double rank_rel = 1e-12;
  double cert_abs = 1e-9;

  double rank_cut(double s_max) const { return rank_rel * std::max(1.0, s_max); }
  double cert(double scale = 1.0) const { return cert_abs * std::max(1.0, scale); }
  bool valid() const {
    return std::isfinite(rank_rel) && std::isfinite(cert_abs) && rank_rel > 0.0 && cert_abs > 0.0;
  }
};

inline void require_valid(const ToleranceContext& tol) {
  if (!tol.valid()) {
    throw InvalidInputError("tolerance context requires rank_rel > 0 and cert_abs > 0");
  }
}

inline void require_finite(const ComplexMatrix& a, const char* what) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw InvalidInputError(std::string(what) + ": matrix must have at least one row and column");
  }
  if (!a.allFinite()) {
    throw InvalidInputError(std::string(what) + ": matrix has non-finite entries");
  }
}

inline void require_finite(const ComplexVector& v, const char* what) {
  if (v.size() < 1) {
    throw InvalidInputError(std::string(what) + ": vector must have at least one entry");
  }
  if (!v.allFinite()) {
    throw InvalidInputError(std::string(what) + ": vector has non-finite entries");
  }
}

inline double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline ComplexMatrix hermitize(const ComplexMatrix& a) {
  return 0.5 * (a + ComplexMatrix(a.adjoint()));
}

inline bool is_hermitian(const ComplexMatrix& a, double tol_abs) {
  if (a.rows() != a.cols()) return false;
  return (a - ComplexMatrix(a.adjoint())).cwiseAbs().maxCoeff() <= tol_abs;
}

// Largest singular value.
inline double operator_norm(const ComplexMatrix& a) {
  require_finite(a, "operator_norm");
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

inline Index numerical_rank(const ComplexMatrix& a, const ToleranceContext& tol = {}) {
  require_valid(tol);
  require_finite(a, "numerical_rank");
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cut = tol.rank_cut(sv.size() == 0 ? 0.0 : sv(0));
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  return rank;
}

// An orthonormal family spanning a subspace of C^n, held as the columns of
// an n x k matrix. A subspace may be zero-dimensional (k = 0).
class SubspaceBasis {
 public:
  SubspaceBasis(Index ambient_dim, ComplexMatrix vectors, const ToleranceContext& tol = {})
      : ambient_(ambient_dim), vectors_(std::move(vectors)) {
    require_valid(tol);
    if (ambient_ < 1) {
      throw InvalidInputError("subspace basis: ambient dimension must be positive");
    }
    if (vectors_.size() == 0) {
      vectors_.resize(ambient_, 0);
    }
    if (vectors_.rows() != ambient_) {
      throw InvalidInputError("subspace basis: vectors of mismatched dimension");
    }
    if (vectors_.cols() > ambient_) {
      throw InvalidInputError("subspace basis: more vectors than the ambient dimension");
    }
    if (!vectors_.allFinite()) {
      throw InvalidInputError("subspace basis: non-finite entries");
    }
    if (vectors_.cols() > 0) {
      ComplexMatrix gram = vectors_.adjoint() * vectors_;
      gram -= ComplexMatrix::Identity(vectors_.cols(), vectors_.cols());
      if (gram.cwiseAbs().maxCoeff() > tol.cert_abs) {
        throw InvalidInputError("subspace basis: vectors are not orthonormal");
      }
    }
  }

  static SubspaceBasis empty(Index ambient_dim) {
    return SubspaceBasis(ambient_dim, ComplexMatrix(ambient_dim, 0));
  }

  Index ambient_dim() const { return ambient_; }
  Index count() const { return vectors_.cols(); }
  const ComplexMatrix& matrix() const { return vectors_; }
  ComplexVector vector(Index i) const { return vectors_.col(i); }

 private:
  Index ambient_;
  ComplexMatrix vectors_;
};

// Orthonormal basis of the numerical right null space of A: the singular
// directions whose singular values fall at or below the rank cut.
inline SubspaceBasis kernel_basis(const ComplexMatrix& a, const ToleranceContext& tol = {}) {
  require_valid(tol);
  require_finite(a, "kernel_basis");
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cut = tol.rank_cut(sv.size() == 0 ? 0.0 : sv(0));
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  ComplexMatrix basis = svd.matrixV().rightCols(a.cols() - rank);
  return SubspaceBasis(a.cols(), std::move(basis), tol);
}

// Orthonormal basis of the column span of A (the non-null singular
// directions on the left).
inline SubspaceBasis column_span(const ComplexMatrix& a, const ToleranceContext& tol = {}) {
  require_valid(tol);
  if (a.cols() == 0) {
    return SubspaceBasis::empty(a.rows());
  }
  require_finite(a, "column_span");
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cut = tol.rank_cut(sv.size() == 0 ? 0.0 : sv(0));
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  return SubspaceBasis(a.rows(), svd.matrixU().leftCols(rank), tol);
}

// Hermitian PSD square root via eigendecomposition. Eigenvalues within the
// certificate tolerance below zero are clamped to zero; anything lower is
// rejected. The result R is Hermitian with R*R = S and ran(R) = ran(S).
inline ComplexMatrix psd_sqrt(const ComplexMatrix& s, const ToleranceContext& tol = {}) {
  require_valid(tol);
  require_finite(s, "psd_sqrt");
  if (s.rows() != s.cols()) {
    throw InvalidInputError("psd_sqrt: matrix must be square");
  }
  const double scale = std::max(1.0, max_abs(s));
  if (!is_hermitian(s, tol.cert_abs * scale)) {
    throw ValidationError("psd_sqrt: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitize(s));
  if (eig.info() != Eigen::Success) {
    throw NumericalError("psd_sqrt: eigendecomposition failed");
  }
  Eigen::VectorXd lam = eig.eigenvalues();
  for (Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < -tol.cert_abs * scale) {
      throw ValidationError("psd_sqrt: matrix is not positive semidefinite (eigenvalue " +
                            std::to_string(lam(i)) + ")");
    }
    if (lam(i) < 0.0) lam(i) = 0.0;
  }
  ComplexMatrix r = eig.eigenvectors() * lam.cwiseSqrt().asDiagonal() *
                    eig.eigenvectors().adjoint();
  return hermitize(r);
}

// Moore-Penrose pseudo-inverse. Singular values at or below the rank cut are
// treated as exact zeros, so A * pinv(A) is the orthogonal projector onto
// the numerical range of A.
inline ComplexMatrix pinv(const ComplexMatrix& a, const ToleranceContext& tol = {}) {
  require_valid(tol);
  require_finite(a, "pinv");
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd sv = svd.singularValues();
  const double cut = tol.rank_cut(sv.size() == 0 ? 0.0 : sv(0));
  for (Index i = 0; i < sv.size(); ++i) {
    sv(i) = sv(i) > cut ? 1.0 / sv(i) : 0.0;
  }
  return svd.matrixV() * sv.asDiagonal() * svd.matrixU().adjoint();
}

// Hermitian idempotent matrix projecting onto the span; an empty span gives
// the zero matrix.
inline ComplexMatrix projector_onto(const SubspaceBasis& span) {
  if (span.count() == 0) {
    return ComplexMatrix::Zero(span.ambient_dim(), span.ambient_dim());
  }
  const ComplexMatrix& b = span.matrix();
  return b * b.adjoint();
}

struct SubspaceRelation {
  bool contains = false;  // span(b1) is contained in span(b2)
  Index sum_dim = 0;      // dim(span(b1) + span(b2))
};

// Containment is decided by the residual of each b1 vector against the
// projector onto span(b2); the sum dimension is the numerical rank of the
// concatenated family.
inline SubspaceRelation subspace_relation(const SubspaceBasis& b1, const SubspaceBasis& b2,
                                          const ToleranceContext& tol = {}) {
  require_valid(tol);
  if (b1.ambient_dim() != b2.ambient_dim()) {
    throw InvalidInputError("subspace_relation: ambient dimension mismatch");
  }
  SubspaceRelation rel;
  rel.contains = true;
  if (b1.count() > 0) {
    ComplexMatrix p2 = projector_onto(b2);
    for (Index i = 0; i < b1.count(); ++i) {
      const ComplexVector v = b1.vector(i);
      if ((v - p2 * v).norm() > tol.cert_abs) {
        rel.contains = false;
        break;
      }
    }
  }
  const Index total = b1.count() + b2.count();
  if (total == 0) {
    rel.sum_dim = 0;
    return rel;
  }
  ComplexMatrix joint(b1.ambient_dim(), total);
  joint.leftCols(b1.count()) = b1.matrix();
  joint.rightCols(b2.count()) = b2.matrix();
  rel.sum_dim = numerical_rank(joint, tol);
  return rel;
}

}  // namespace lebforms
