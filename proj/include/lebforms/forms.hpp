// Copyright 2026 The lebforms Authors
// SPDX-License-Identifier: Apache-2.0
//
// Sesquilinear forms on C^n and their Lebesgue-type decompositions.
//
// A form t is stored by its display matrix M with M(i, j) = t(e_i, e_j).
// Algorithms work on the action matrix G = M^T, which satisfies
//
//   t(f, g) = g^* G f,      ker(t) = null(G).
//
// For Hermitian M the two matrices are simultaneously PSD, so both
// conventions agree on which forms are non-negative. All I/O (and every
// matrix quoted in the tests) uses the display convention.
//
// Provided here:
//   * absolute-continuity and singularity tests for non-negative forms,
//     realized on C^n through kernel inclusions and kernel-sum dimensions;
//   * the classical Lebesgue decomposition s = s_a + s_s of a non-negative
//     form with respect to another;
//   * parallel sums, the monotone-limit oracle for s_a;
//   * dominating pairs (s1, s2) certifying |t(f,g)| <= s1[f]^1/2 s2[g]^1/2;
//   * the one-sided (left) Lebesgue decomposition t = t_lr + t_ls of an
//     arbitrary form with respect to a non-negative w, its closed form for
//     the scaled-identity pair, classifiers, and singular witnesses.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "lebforms/errors.hpp"
#include "lebforms/linalg.hpp"

namespace lebforms {

class FormMatrix {
 public:
  // `display` uses the convention display(i, j) = t(e_i, e_j).
  explicit FormMatrix(ComplexMatrix display) : mat_(std::move(display)) {
    if (mat_.rows() < 1 || mat_.rows() != mat_.cols()) {
      throw InvalidInputError("form matrix must be square with n >= 1");
    }
    if (!mat_.allFinite()) {
      throw InvalidInputError("form matrix has non-finite entries");
    }
  }

  static FormMatrix zero(Index n) { return FormMatrix(ComplexMatrix::Zero(n, n)); }

  // Builds the form whose action matrix (t(f, g) = g^* G f) is `g`.
  static FormMatrix from_action(const ComplexMatrix& g) {
    return FormMatrix(g.transpose());
  }

  Index dim() const { return mat_.rows(); }

  // Display convention: matrix()(i, j) = t(e_i, e_j).
  const ComplexMatrix& matrix() const { return mat_; }

  // Action convention: t(f, g) = g^* action() f.
  ComplexMatrix action() const { return mat_.transpose(); }

  Complex operator()(const ComplexVector& f, const ComplexVector& g) const {
    if (f.size() != dim() || g.size() != dim()) {
      throw InvalidInputError("form evaluation: vector dimension mismatch");
    }
    return (g.adjoint() * ComplexMatrix(mat_.transpose()) * f).value();
  }

  FormMatrix operator+(const FormMatrix& other) const {
    require_same_dim(other);
    return FormMatrix(mat_ + other.mat_);
  }
  FormMatrix operator-(const FormMatrix& other) const {
    require_same_dim(other);
    return FormMatrix(mat_ - other.mat_);
  }
  friend FormMatrix operator*(Complex c, const FormMatrix& t) {
    return FormMatrix(c * t.mat_);
  }

 private:
  void require_same_dim(const FormMatrix& other) const {
    if (other.dim() != dim()) {
      throw InvalidInputError("form arithmetic: dimension mismatch");
    }
  }

  ComplexMatrix mat_;
};

// A form whose display matrix is Hermitian PSD (equivalently t[f] >= 0 for
// all f). Validated on construction; negative eigenvalues within the
// certificate tolerance are accepted but not altered.
class NonnegativeForm {
 public:
  explicit NonnegativeForm(FormMatrix form, const ToleranceContext& tol = {})
      : form_(std::move(form)) {
    require_valid(tol);
    const ComplexMatrix& m = form_.matrix();
    const double scale = std::max(1.0, max_abs(m));
    if (!is_hermitian(m, tol.cert_abs * scale)) {
      throw ValidationError("non-negative form: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitize(m), Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) {
      throw NumericalError("non-negative form: eigendecomposition failed");
    }
    const double lam_min = eig.eigenvalues().minCoeff();
    if (lam_min < -tol.cert_abs * scale) {
      throw ValidationError("non-negative form: negative eigenvalue " + std::to_string(lam_min));
    }
  }

  static NonnegativeForm zero(Index n) { return NonnegativeForm(FormMatrix::zero(n)); }

  static NonnegativeForm scaled_identity(Index n, double c) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw InvalidInputError("scaled identity form requires a finite c >= 0");
    }
    return NonnegativeForm(FormMatrix(c * ComplexMatrix::Identity(n, n)));
  }

  // Scales by a non-negative factor without revalidating; scaling preserves
  // positivity exactly.
  NonnegativeForm scaled(double c) const {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw InvalidInputError("non-negative form scaling requires a finite c >= 0");
    }
    return NonnegativeForm(FormMatrix(c * form_.matrix()), unchecked_tag{});
  }

  Index dim() const { return form_.dim(); }
  const FormMatrix& form() const { return form_; }
  const ComplexMatrix& matrix() const { return form_.matrix(); }
  ComplexMatrix action() const { return form_.action(); }

  // The quadratic value s[f] = s(f, f), clamped into the reals.
  double quad(const ComplexVector& f) const { return form_(f, f).real(); }

 private:
  struct unchecked_tag {};
  NonnegativeForm(FormMatrix form, unchecked_tag) : form_(std::move(form)) {}

  FormMatrix form_;
};

inline void require_same_dim(const FormMatrix& t, const NonnegativeForm& w, const char* what) {
  if (t.dim() != w.dim()) {
    throw InvalidInputError(std::string(what) + ": dimension mismatch");
  }
}

// ---------------------------------------------------------------------------
// Kernels, parts, absolute continuity, singularity
// ---------------------------------------------------------------------------

// ker(t) = {f : t(f, g) = 0 for all g}, the null space of the action matrix.
inline SubspaceBasis kernel_of_form(const FormMatrix& t, const ToleranceContext& tol = {}) {
  return kernel_basis(t.action(), tol);
}

struct FormParts {
  FormMatrix adjoint;    // t*(f, g) = conj(t(g, f))
  FormMatrix real_part;  // (t + t*) / 2
  FormMatrix imag_part;  // (t - t*) / 2i
};

inline FormParts decompose_parts(const FormMatrix& t) {
  const ComplexMatrix& m = t.matrix();
  ComplexMatrix adj = m.adjoint();
  ComplexMatrix re = 0.5 * (m + adj);
  ComplexMatrix im = (m - adj) / Complex(0.0, 2.0);
  return FormParts{FormMatrix(std::move(adj)), FormMatrix(std::move(re)),
                   FormMatrix(std::move(im))};
}

// s << w on C^n reduces to ker(w) being contained in ker(s).
inline bool is_abs_continuous(const NonnegativeForm& s, const NonnegativeForm& w,
                              const ToleranceContext& tol = {}) {
  if (s.dim() != w.dim()) {
    throw InvalidInputError("is_abs_continuous: dimension mismatch");
  }
  SubspaceBasis ker_w = kernel_of_form(w.form(), tol);
  SubspaceBasis ker_s = kernel_of_form(s.form(), tol);
  return subspace_relation(ker_w, ker_s, tol).contains;
}

// s and w are mutually singular on C^n iff ker(s) + ker(w) spans everything.
inline bool is_singular(const NonnegativeForm& s, const NonnegativeForm& w,
                        const ToleranceContext& tol = {}) {
  if (s.dim() != w.dim()) {
    throw InvalidInputError("is_singular: dimension mismatch");
  }
  SubspaceBasis ker_s = kernel_of_form(s.form(), tol);
  SubspaceBasis ker_w = kernel_of_form(w.form(), tol);
  return subspace_relation(ker_s, ker_w, tol).sum_dim == s.dim();
}

// ---------------------------------------------------------------------------
// Classical Lebesgue decomposition of non-negative forms
// ---------------------------------------------------------------------------

struct PsdDecomposition {
  NonnegativeForm s_a;  // w-absolutely continuous part
  NonnegativeForm s_s;  // w-singular part
};

// With R = sqrt(S) and Q the projector onto R * ker(W), the singular part is
// R Q R and the absolutely continuous part is the remainder. The two parts
// are mutually singular, and s_a is the largest w-absolutely continuous form
// below s.
inline PsdDecomposition lebesgue_decompose_psd(const NonnegativeForm& s, const NonnegativeForm& w,
                                               const ToleranceContext& tol = {}) {
  if (s.dim() != w.dim()) {
    throw InvalidInputError("lebesgue_decompose_psd: dimension mismatch");
  }
  const ComplexMatrix s_action = s.action();
  const ComplexMatrix r = psd_sqrt(s_action, tol);
  SubspaceBasis ker_w = kernel_of_form(w.form(), tol);
  SubspaceBasis sing_dirs = ker_w.count() == 0
                                ? SubspaceBasis::empty(s.dim())
                                : column_span(r * ker_w.matrix(), tol);
  const ComplexMatrix q = projector_onto(sing_dirs);
  ComplexMatrix ss = hermitize(r * q * r);
  ComplexMatrix sa = hermitize(s_action - ss);
  return PsdDecomposition{NonnegativeForm(FormMatrix(sa.transpose()), tol),
                          NonnegativeForm(FormMatrix(ss.transpose()), tol)};
}

// Raw kernel of the parallel sum on action matrices: A (A + B)^+ B,
// symmetrized. Exposed separately so the verifier can drive it at scales
// where re-validating intermediate forms would reject harmless roundoff.
inline ComplexMatrix parallel_sum_action(const ComplexMatrix& a, const ComplexMatrix& b,
                                         const ToleranceContext& tol = {}) {
  return hermitize(a * pinv(a + b, tol) * b);
}

// Parallel sum a : b = A (A + B)^+ B. Below both arguments in the PSD order
// and symmetric in them; k |-> s : (k w) increases monotonically to the
// w-absolutely continuous part of s.
inline NonnegativeForm parallel_sum(const NonnegativeForm& a, const NonnegativeForm& b,
                                    const ToleranceContext& tol = {}) {
  if (a.dim() != b.dim()) {
    throw InvalidInputError("parallel_sum: dimension mismatch");
  }
  ComplexMatrix p = parallel_sum_action(a.action(), b.action(), tol);
  return NonnegativeForm(FormMatrix(p.transpose()), tol);
}

// ---------------------------------------------------------------------------
// Dominating pairs
// ---------------------------------------------------------------------------

// A pair (s1, s2) of non-negative forms with |t(f,g)| <= s1[f]^1/2 s2[g]^1/2.
// The certificate is the norm of T = (S2^1/2)^+ G (S1^1/2)^+, which is a
// contraction exactly when the inequality holds (given the two kernel
// inclusions that make T reproduce G).
struct DominatingPair {
  NonnegativeForm s1;
  NonnegativeForm s2;
  double contraction_norm = 0.0;
};

struct PairCheck {
  bool ok = false;
  double contraction_norm = 0.0;
};

inline PairCheck pair_check(const NonnegativeForm& s1, const NonnegativeForm& s2,
                            const FormMatrix& t, const ToleranceContext& tol = {}) {
  if (s1.dim() != t.dim() || s2.dim() != t.dim()) {
    throw InvalidInputError("pair_check: dimension mismatch");
  }
  const ComplexMatrix g = t.action();
  const double g_scale = std::max(1.0, operator_norm(g));
  SubspaceBasis k1 = kernel_basis(s1.action(), tol);
  SubspaceBasis k2 = kernel_basis(s2.action(), tol);
  const bool ker1_ok =
      k1.count() == 0 || operator_norm(g * k1.matrix()) <= tol.cert_abs * g_scale;
  const bool ker2_ok =
      k2.count() == 0 ||
      operator_norm(ComplexMatrix(g.adjoint()) * k2.matrix()) <= tol.cert_abs * g_scale;
  PairCheck result;
  result.contraction_norm = operator_norm(pinv(psd_sqrt(s2.action(), tol), tol) * g *
                                          pinv(psd_sqrt(s1.action(), tol), tol));
  result.ok = ker1_ok && ker2_ok && result.contraction_norm <= 1.0 + tol.cert_abs;
  return result;
}

struct MlCheck {
  bool member = false;
  // Scale c such that (s1, c * identity) is a dominating pair; meaningful
  // only when member.
  double companion_scale = 0.0;
};

// s1 admits some companion s2 iff ker(s1) is contained in ker(t); the
// canonical companion is c * identity with c = |G (S1^1/2)^+|^2.
inline MlCheck ml_check(const NonnegativeForm& s1, const FormMatrix& t,
                        const ToleranceContext& tol = {}) {
  if (s1.dim() != t.dim()) {
    throw InvalidInputError("ml_check: dimension mismatch");
  }
  const ComplexMatrix g = t.action();
  const double g_scale = std::max(1.0, operator_norm(g));
  SubspaceBasis k1 = kernel_basis(s1.action(), tol);
  MlCheck result;
  result.member = k1.count() == 0 || operator_norm(g * k1.matrix()) <= tol.cert_abs * g_scale;
  if (result.member) {
    const double norm = operator_norm(g * pinv(psd_sqrt(s1.action(), tol), tol));
    result.companion_scale = norm * norm;
  }
  return result;
}

inline DominatingPair checked_pair(NonnegativeForm s1, NonnegativeForm s2, const FormMatrix& t,
                                   const ToleranceContext& tol = {}) {
  PairCheck check = pair_check(s1, s2, t, tol);
  if (!check.ok) {
    throw PreconditionError("checked_pair: (s1, s2) is not a dominating pair for t");
  }
  return DominatingPair{std::move(s1), std::move(s2), check.contraction_norm};
}

struct DefaultPairs {
  DominatingPair identity_pair;  // (|G| * id, |G| * id) at operator-norm scale
  DominatingPair polar_pair;     // (|G|, |G*|) from the polar decomposition
};

inline DominatingPair identity_pair(const FormMatrix& t, const ToleranceContext& tol = {}) {
  const double c = operator_norm(t.action());
  NonnegativeForm s = NonnegativeForm::scaled_identity(t.dim(), c);
  return checked_pair(s, s, t, tol);
}

inline DominatingPair polar_pair(const FormMatrix& t, const ToleranceContext& tol = {}) {
  const ComplexMatrix g = t.action();
  ComplexMatrix abs_g = psd_sqrt(hermitize(ComplexMatrix(g.adjoint()) * g), tol);
  ComplexMatrix abs_g_star = psd_sqrt(hermitize(g * ComplexMatrix(g.adjoint())), tol);
  return checked_pair(NonnegativeForm(FormMatrix(abs_g.transpose()), tol),
                      NonnegativeForm(FormMatrix(abs_g_star.transpose()), tol), t, tol);
}

inline DefaultPairs default_pairs(const FormMatrix& t, const ToleranceContext& tol = {}) {
  return DefaultPairs{identity_pair(t, tol), polar_pair(t, tol)};
}

// ---------------------------------------------------------------------------
// Left Lebesgue decomposition
// ---------------------------------------------------------------------------

// t = t_lr + t_ls with t_lr w-left regular and t_ls w-left strongly
// singular, together with the classical decomposition s1 = sigma_a + sigma_s
// that produced it and per-part certificates.
struct LeftDecomposition {
  FormMatrix t_lr;
  FormMatrix t_ls;
  NonnegativeForm sigma_a;
  NonnegativeForm sigma_s;
  DominatingPair pair;    // the dominating pair the construction used
  SubspaceBasis ker_w;
  SubspaceBasis ker_lr;
  SubspaceBasis ker_ls;
  double bound_norm_regular = 0.0;   // |(S2^1/2)^+ G_lr (sigma_a^1/2)^+|
  double bound_norm_singular = 0.0;  // |(S2^1/2)^+ G_ls (sigma_s^1/2)^+|
};

namespace detail {

inline LeftDecomposition assemble_left_decomposition(const FormMatrix& t,
                                                     const NonnegativeForm& w,
                                                     DominatingPair pair, ComplexMatrix g_ls,
                                                     ComplexMatrix sigma_s_action,
                                                     SubspaceBasis ker_w,
                                                     const ToleranceContext& tol) {
  const ComplexMatrix g = t.action();
  ComplexMatrix g_lr = g - g_ls;
  ComplexMatrix sa = hermitize(pair.s1.action() - sigma_s_action);
  NonnegativeForm sigma_a(FormMatrix(sa.transpose()), tol);
  NonnegativeForm sigma_s(FormMatrix(sigma_s_action.transpose()), tol);
  const ComplexMatrix r2_pinv = pinv(psd_sqrt(pair.s2.action(), tol), tol);
  const double bound_lr =
      operator_norm(r2_pinv * g_lr * pinv(psd_sqrt(sigma_a.action(), tol), tol));
  const double bound_ls =
      operator_norm(r2_pinv * g_ls * pinv(psd_sqrt(sigma_s.action(), tol), tol));
  SubspaceBasis ker_lr = kernel_basis(g_lr, tol);
  SubspaceBasis ker_ls = kernel_basis(g_ls, tol);
  return LeftDecomposition{FormMatrix::from_action(g_lr),
                           FormMatrix::from_action(g_ls),
                           std::move(sigma_a),
                           std::move(sigma_s),
                           std::move(pair),
                           std::move(ker_w),
                           std::move(ker_lr),
                           std::move(ker_ls),
                           bound_lr,
                           bound_ls};
}

}  // namespace detail

// The constructive decomposition: with R1 = sqrt(S1) and Q the projector
// onto R1 * ker(W), the singular part acts as G R1^+ Q R1 and the regular
// part is the remainder. sigma_a / sigma_s are the classical parts of s1
// with respect to w, and the bound norms certify
//   |t_lr(f,g)| <= sigma_a[f]^1/2 s2[g]^1/2,
//   |t_ls(f,g)| <= sigma_s[f]^1/2 s2[g]^1/2.
inline LeftDecomposition left_decompose(const FormMatrix& t, const NonnegativeForm& w,
                                        const DominatingPair& pair,
                                        const ToleranceContext& tol = {}) {
  require_same_dim(t, w, "left_decompose");
  if (pair.s1.dim() != t.dim() || pair.s2.dim() != t.dim()) {
    throw InvalidInputError("left_decompose: pair dimension mismatch");
  }
  PairCheck check = pair_check(pair.s1, pair.s2, t, tol);
  if (!check.ok) {
    throw PreconditionError(
        "left_decompose: (s1, s2) is not a dominating pair for t (contraction norm " +
        std::to_string(check.contraction_norm) + ")");
  }
  const ComplexMatrix g = t.action();
  const ComplexMatrix r1 = psd_sqrt(pair.s1.action(), tol);
  const ComplexMatrix r1_pinv = pinv(r1, tol);
  SubspaceBasis ker_w = kernel_of_form(w.form(), tol);
  SubspaceBasis sing_dirs = ker_w.count() == 0
                                ? SubspaceBasis::empty(t.dim())
                                : column_span(r1 * ker_w.matrix(), tol);
  const ComplexMatrix q = projector_onto(sing_dirs);
  ComplexMatrix g_ls = g * r1_pinv * q * r1;
  ComplexMatrix sigma_s_action = hermitize(r1 * q * r1);
  return detail::assemble_left_decomposition(t, w, pair, std::move(g_ls),
                                             std::move(sigma_s_action), std::move(ker_w), tol);
}

// Closed form for the scaled-identity pair: with P the projector onto
// ker(W)-perp, t_lr(f, g) = t(Pf, g) and t_ls(f, g) = t((I-P)f, g). Agrees
// with left_decompose(t, w, identity_pair(t)) and computes the projector
// products exactly when ker(W) is spanned by coordinate directions.
inline LeftDecomposition left_decompose_default(const FormMatrix& t, const NonnegativeForm& w,
                                                const ToleranceContext& tol = {}) {
  require_same_dim(t, w, "left_decompose_default");
  DominatingPair pair = identity_pair(t, tol);
  const ComplexMatrix g = t.action();
  SubspaceBasis ker_w = kernel_of_form(w.form(), tol);
  const ComplexMatrix p_ker = projector_onto(ker_w);
  ComplexMatrix g_ls = g * p_ker;
  const double c = operator_norm(g);
  ComplexMatrix sigma_s_action = hermitize(c * p_ker);
  return detail::assemble_left_decomposition(t, w, pair, std::move(g_ls),
                                             std::move(sigma_s_action), std::move(ker_w), tol);
}

// ---------------------------------------------------------------------------
// Classifiers and witnesses
// ---------------------------------------------------------------------------

struct LeftClassification {
  bool left_regular = false;
  bool left_strongly_singular = false;
  // On C^n left boundedness coincides with left regularity.
  bool left_bounded = false;
  // Smallest C with |t(f, g)| <= C w[f]^1/2 |g|; present iff left_bounded.
  std::optional<double> minimal_c;
};

inline LeftClassification classify_left(const FormMatrix& t, const NonnegativeForm& w,
                                        const ToleranceContext& tol = {}) {
  require_same_dim(t, w, "classify_left");
  const ComplexMatrix g = t.action();
  const double g_scale = std::max(1.0, operator_norm(g));
  SubspaceBasis ker_w = kernel_of_form(w.form(), tol);
  SubspaceBasis ker_t = kernel_basis(g, tol);
  LeftClassification result;
  result.left_regular =
      ker_w.count() == 0 || operator_norm(g * ker_w.matrix()) <= tol.cert_abs * g_scale;
  result.left_bounded = result.left_regular;
  result.left_strongly_singular =
      subspace_relation(ker_w, ker_t, tol).sum_dim == t.dim();
  if (result.left_bounded) {
    result.minimal_c = operator_norm(g * pinv(psd_sqrt(w.action(), tol), tol));
  }
  return result;
}

struct WitnessSplit {
  ComplexVector u;  // component in ker(w)
  ComplexVector v;  // component in ker(t)
};

// For a strongly singular pair every f splits as u + v with u in ker(w) and
// v in ker(t); the constant sequence f_n = u then witnesses w[u] = 0 and
// t(f - u, g) = 0 for all g. Solved by least squares in the concatenated
// kernel bases.
inline WitnessSplit singular_witness(const FormMatrix& t, const NonnegativeForm& w,
                                     const ComplexVector& f, const ToleranceContext& tol = {}) {
  require_same_dim(t, w, "singular_witness");
  require_finite(f, "singular_witness");
  if (f.size() != t.dim()) {
    throw InvalidInputError("singular_witness: vector dimension mismatch");
  }
  LeftClassification cls = classify_left(t, w, tol);
  if (!cls.left_strongly_singular) {
    throw PreconditionError("singular_witness: form is not w-left strongly singular");
  }
  SubspaceBasis ker_w = kernel_of_form(w.form(), tol);
  SubspaceBasis ker_t = kernel_of_form(t, tol);
  const Index m1 = ker_w.count();
  const Index m2 = ker_t.count();
  ComplexMatrix joint(t.dim(), m1 + m2);
  joint.leftCols(m1) = ker_w.matrix();
  joint.rightCols(m2) = ker_t.matrix();
  ComplexVector coeffs = pinv(joint, tol) * f;
  WitnessSplit split;
  split.u = ker_w.matrix() * coeffs.head(m1);
  split.v = ker_t.matrix() * coeffs.tail(m2);
  if ((split.u + split.v - f).norm() > tol.cert(f.norm())) {
    throw NumericalError("singular_witness: decomposition residual exceeds tolerance");
  }
  return split;
}

}  // namespace lebforms
