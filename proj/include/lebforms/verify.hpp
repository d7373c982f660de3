// Copyright 2026 The lebforms Authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent verification of decompositions: randomized domination
// sampling, the parallel-sum monotone-limit oracle, and the bundled report
// for a left decomposition. The checks here deliberately avoid the code
// paths that produce decompositions: the oracle never touches
// lebesgue_decompose_psd and the sampler never calls pair_check.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lebforms/errors.hpp"
#include "lebforms/forms.hpp"
#include "lebforms/linalg.hpp"

namespace lebforms {

struct CheckResult {
  std::string name;
  bool passed = false;
  // Set when conditioning makes the check unreliable; flagged, not failed.
  bool inconclusive = false;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  int samples = 0;

  bool all_passed() const {
    for (const CheckResult& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

namespace detail {

// Deterministic standard-normal sampler built on mt19937_64 with an
// explicit Box-Muller transform, so reports do not depend on the standard
// library's distribution implementations.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = two_pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  ComplexVector complex_vector(Index n) {
    ComplexVector v(n);
    for (Index i = 0; i < n; ++i) {
      v(i) = Complex(gauss(), gauss());
    }
    return v;
  }

 private:
  // Uniform in (0, 1]: 53 random mantissa bits, shifted away from zero.
  double uniform01() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h ^ seed;
}

inline double min_eigenvalue(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitize(hermitian),
                                                   Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("min_eigenvalue: eigendecomposition failed");
  }
  return eig.eigenvalues().minCoeff();
}

inline std::string format_double(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

}  // namespace detail

// Draws `samples` pseudo-random pairs (f, g) with unit-normal real and
// imaginary parts and checks the domination inequality
//   |t(f, g)| <= s1[f]^1/2 s2[g]^1/2
// up to a residual of cert_abs * (1 + |f| |g|) per draw. The reported
// residual is the worst scaled violation.
inline CheckResult sample_bound_check(const FormMatrix& t, const NonnegativeForm& s1,
                                      const NonnegativeForm& s2, int samples,
                                      std::uint64_t seed, const ToleranceContext& tol = {},
                                      std::string name = "sample-bound") {
  require_valid(tol);
  if (s1.dim() != t.dim() || s2.dim() != t.dim()) {
    throw InvalidInputError("sample_bound_check: dimension mismatch");
  }
  if (samples < 1) {
    throw InvalidInputError("sample_bound_check: samples must be >= 1");
  }
  detail::NormalSampler rng(detail::derive_seed(seed, name));
  double worst = -std::numeric_limits<double>::infinity();
  int worst_draw = -1;
  for (int i = 0; i < samples; ++i) {
    const ComplexVector f = rng.complex_vector(t.dim());
    const ComplexVector g = rng.complex_vector(t.dim());
    const double lhs = std::abs(t(f, g));
    const double rhs =
        std::sqrt(std::max(0.0, s1.quad(f))) * std::sqrt(std::max(0.0, s2.quad(g)));
    const double residual = (lhs - rhs) / (1.0 + f.norm() * g.norm());
    if (residual > worst) {
      worst = residual;
      worst_draw = i;
    }
  }
  CheckResult result;
  result.name = std::move(name);
  result.worst_residual = worst;
  result.tolerance = tol.cert_abs;
  result.passed = worst <= result.tolerance;
  result.detail = "samples=" + std::to_string(samples) +
                  " worst_draw=" + std::to_string(worst_draw);
  return result;
}

// Ando's monotone approximation: s : (k w) increases in the PSD order and
// converges to the w-absolutely continuous part of s. Checks monotonicity
// along k in {1, 10, ..., 1e8}, domination by the claimed s_a, and the final
// gap |s:(1e8 w) - s_a| <= 1e-4 max(1, |S|). The reported residual is the
// worst constraint violation scaled by its own tolerance, so the check
// passes iff worst_residual <= 1. Instances whose condition estimate at the
// top of the schedule exceeds 1e10 are reported inconclusive.
inline CheckResult parallel_sum_limit_check(const NonnegativeForm& s, const NonnegativeForm& w,
                                            const NonnegativeForm& s_a,
                                            const ToleranceContext& tol = {}) {
  require_valid(tol);
  if (s.dim() != w.dim() || s_a.dim() != s.dim()) {
    throw InvalidInputError("parallel_sum_limit_check: dimension mismatch");
  }
  constexpr double kMaxScale = 1e8;
  constexpr double kCondLimit = 1e10;
  constexpr double kGapRel = 1e-4;
  const ComplexMatrix s_action = s.action();
  const ComplexMatrix w_action = w.action();
  const ComplexMatrix sa_action = s_a.action();
  const double s_norm = operator_norm(s_action);
  const double w_norm = operator_norm(w_action);

  CheckResult result;
  result.name = "parallel-sum-limit";
  result.tolerance = 1.0;

  // Condition estimate: spread of the retained singular values of
  // S + 1e8 W, the worst matrix the oracle has to invert.
  double cond = 1.0;
  {
    Eigen::JacobiSVD<ComplexMatrix> svd(s_action + kMaxScale * w_action);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double cut = tol.rank_cut(sv.size() == 0 ? 0.0 : sv(0));
    double smin = 0.0;
    for (Index i = sv.size() - 1; i >= 0; --i) {
      if (sv(i) > cut) {
        smin = sv(i);
        break;
      }
    }
    if (smin > 0.0) cond = sv(0) / smin;
  }
  if (cond > kCondLimit) {
    result.inconclusive = true;
    result.passed = true;
    result.worst_residual = 0.0;
    result.detail = "inconclusive: condition estimate " + detail::format_double(cond) +
                    " exceeds 1e10";
    return result;
  }

  const double gap_tol = kGapRel * std::max(1.0, s_norm);
  double worst_ratio = 0.0;
  double worst_monotone = 0.0;
  double worst_domination = 0.0;
  ComplexMatrix previous;
  ComplexMatrix current;
  for (double k = 1.0; k <= kMaxScale; k *= 10.0) {
    current = parallel_sum_action(s_action, k * w_action, tol);
    // Roundoff floor for eigenvalue sign decisions at the schedule scale.
    const double psd_tol = std::max(
        tol.cert_abs,
        100.0 * std::numeric_limits<double>::epsilon() * (s_norm + k * w_norm));
    if (previous.size() > 0) {
      const double deficit = std::max(0.0, -detail::min_eigenvalue(current - previous));
      worst_monotone = std::max(worst_monotone, deficit);
      worst_ratio = std::max(worst_ratio, deficit / psd_tol);
    }
    const double dom_deficit = std::max(0.0, -detail::min_eigenvalue(sa_action - current));
    worst_domination = std::max(worst_domination, dom_deficit);
    worst_ratio = std::max(worst_ratio, dom_deficit / psd_tol);
    previous = current;
  }
  const double gap = operator_norm(current - sa_action);
  worst_ratio = std::max(worst_ratio, gap / gap_tol);

  result.worst_residual = worst_ratio;
  result.passed = worst_ratio <= result.tolerance;
  result.detail = "cond=" + detail::format_double(cond) + " gap=" + detail::format_double(gap) +
                  " gap_tol=" + detail::format_double(gap_tol) +
                  " worst_monotone_deficit=" + detail::format_double(worst_monotone) +
                  " worst_domination_deficit=" + detail::format_double(worst_domination);
  return result;
}

// Bundles the certificate checks for a claimed left decomposition of t with
// respect to w: additivity, kernel inclusion of the regular part, the
// kernel-sum dimension of the singular part, both contraction-norm bounds,
// and sampled domination of both parts. The decomposition is taken at face
// value; nothing is recomputed from the construction that produced it.
inline VerificationReport full_report(const FormMatrix& t, const NonnegativeForm& w,
                                      const LeftDecomposition& dec, std::uint64_t seed,
                                      const ToleranceContext& tol = {}, int samples = 500) {
  require_valid(tol);
  require_same_dim(t, w, "full_report");
  if (dec.t_lr.dim() != t.dim() || dec.t_ls.dim() != t.dim()) {
    throw InvalidInputError("full_report: decomposition dimension mismatch");
  }
  const Index n = t.dim();
  const ComplexMatrix g = t.action();
  const ComplexMatrix g_lr = dec.t_lr.action();
  const ComplexMatrix g_ls = dec.t_ls.action();
  const double g_norm = operator_norm(g);

  VerificationReport report;
  report.seed = seed;
  report.samples = samples;

  {
    CheckResult check;
    check.name = "additivity";
    check.worst_residual = max_abs(g_lr + g_ls - g);
    check.tolerance = tol.cert(g_norm);
    check.passed = check.worst_residual <= check.tolerance;
    report.checks.push_back(std::move(check));
  }
  SubspaceBasis ker_w = kernel_of_form(w.form(), tol);
  {
    CheckResult check;
    check.name = "kernel-inclusion-regular";
    check.worst_residual =
        ker_w.count() == 0 ? 0.0 : operator_norm(g_lr * ker_w.matrix());
    check.tolerance = tol.cert_abs;
    check.passed = check.worst_residual <= check.tolerance;
    check.detail = "|G_lr K_w| with dim ker(w) = " + std::to_string(ker_w.count());
    report.checks.push_back(std::move(check));
  }
  {
    CheckResult check;
    check.name = "kernel-sum-dimension";
    SubspaceBasis ker_ls = kernel_basis(g_ls, tol);
    const Index sum_dim = subspace_relation(ker_w, ker_ls, tol).sum_dim;
    check.worst_residual = static_cast<double>(n - sum_dim);
    check.tolerance = 0.0;
    check.passed = check.worst_residual <= check.tolerance;
    check.detail = "dim(ker w + ker t_ls) = " + std::to_string(sum_dim) + " of " +
                   std::to_string(n);
    report.checks.push_back(std::move(check));
  }
  const ComplexMatrix r2_pinv = pinv(psd_sqrt(dec.pair.s2.action(), tol), tol);
  {
    CheckResult check;
    check.name = "bound3-regular";
    const double norm =
        operator_norm(r2_pinv * g_lr * pinv(psd_sqrt(dec.sigma_a.action(), tol), tol));
    check.worst_residual = std::max(0.0, norm - 1.0);
    check.tolerance = tol.cert_abs;
    check.passed = check.worst_residual <= check.tolerance;
    check.detail = "contraction norm " + detail::format_double(norm);
    report.checks.push_back(std::move(check));
  }
  {
    CheckResult check;
    check.name = "bound3-singular";
    const double norm =
        operator_norm(r2_pinv * g_ls * pinv(psd_sqrt(dec.sigma_s.action(), tol), tol));
    check.worst_residual = std::max(0.0, norm - 1.0);
    check.tolerance = tol.cert_abs;
    check.passed = check.worst_residual <= check.tolerance;
    check.detail = "contraction norm " + detail::format_double(norm);
    report.checks.push_back(std::move(check));
  }
  report.checks.push_back(sample_bound_check(dec.t_lr, dec.sigma_a, dec.pair.s2, samples, seed,
                                             tol, "sample-bound-regular"));
  report.checks.push_back(sample_bound_check(dec.t_ls, dec.sigma_s, dec.pair.s2, samples, seed,
                                             tol, "sample-bound-singular"));

  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

}  // namespace lebforms
