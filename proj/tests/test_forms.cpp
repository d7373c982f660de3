// Copyright 2026 The lebforms Authors
// SPDX-License-Identifier: Apache-2.0

#include "lebforms/forms.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"

namespace lebforms {
namespace {

using testing::form2;
using testing::mat2;
using testing::max_entry_diff;
using testing::min_eigenvalue;
using testing::nn2;
using testing::random_complex_matrix;
using testing::random_psd_form;

TEST(FormMatrix, ActionIsTranspose) {
  // t(f, g) = g^* G f with G = M^T: probe with basis vectors.
  FormMatrix t = form2(Complex(0, 1), 2, 3, 0);
  ComplexVector e1 = ComplexVector::Zero(2), e2 = ComplexVector::Zero(2);
  e1(0) = 1;
  e2(1) = 1;
  EXPECT_EQ(t(e1, e1), Complex(0, 1));  // t(e1, e1) = M(0, 0)
  EXPECT_EQ(t(e1, e2), Complex(2, 0));  // t(e1, e2) = M(0, 1)
  EXPECT_EQ(t(e2, e1), Complex(3, 0));  // t(e2, e1) = M(1, 0)
}

TEST(FormMatrix, RejectsBadShapes) {
  EXPECT_THROW(FormMatrix(ComplexMatrix::Zero(2, 3)), InvalidInputError);
  ComplexMatrix nan = mat2(1, 0, 0, std::numeric_limits<double>::quiet_NaN());
  EXPECT_THROW(FormMatrix(nan), InvalidInputError);
}

TEST(NonnegativeForm, RejectsIndefiniteAndNonHermitian) {
  EXPECT_THROW(NonnegativeForm(form2(1, 0, 0, -1)), ValidationError);
  EXPECT_THROW(NonnegativeForm(form2(1, 1, 0, 1)), ValidationError);
}

TEST(KernelOfForm, InvertibleFormHasTrivialKernel) {
  EXPECT_EQ(kernel_of_form(form2(-1, 0, 0, 1)).count(), 0);
}

TEST(KernelOfForm, OffDiagonalEntry) {
  // t(e2, e1) = 1 and nothing else: G = M^T annihilates e1.
  FormMatrix t = form2(0, 0, 1, 0);
  SubspaceBasis kernel = kernel_of_form(t);
  ASSERT_EQ(kernel.count(), 1);
  EXPECT_NEAR(std::abs(kernel.vector(0)(0)), 1.0, 1e-14);
}

TEST(KernelOfForm, ZeroFormHasFullKernel) {
  EXPECT_EQ(kernel_of_form(FormMatrix::zero(3)).count(), 3);
}

TEST(DecomposeParts, NilpotentExample) {
  FormParts parts = decompose_parts(form2(0, 1, 0, 0));
  EXPECT_LT(max_entry_diff(parts.adjoint.matrix(), mat2(0, 0, 1, 0)), 1e-15);
  EXPECT_LT(max_entry_diff(parts.real_part.matrix(), mat2(0, 0.5, 0.5, 0)), 1e-15);
  EXPECT_LT(max_entry_diff(parts.imag_part.matrix(),
                           mat2(0, Complex(0, -0.5), Complex(0, 0.5), 0)),
            1e-15);
}

TEST(DecomposeParts, HermitianFormIsItsOwnAdjoint) {
  FormMatrix t = form2(2, Complex(1, 1), Complex(1, -1), 3);
  FormParts parts = decompose_parts(t);
  EXPECT_LT(max_entry_diff(parts.adjoint.matrix(), t.matrix()), 1e-15);
  EXPECT_LT(max_abs(parts.imag_part.matrix()), 1e-15);
}

TEST(DecomposeParts, RealPlusImagRecombines) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 10; ++trial) {
    FormMatrix t(random_complex_matrix(4, 4, gen));
    FormParts parts = decompose_parts(t);
    ComplexMatrix rebuilt =
        parts.real_part.matrix() + Complex(0, 1) * parts.imag_part.matrix();
    EXPECT_LT(max_entry_diff(rebuilt, t.matrix()), 1e-14);
    EXPECT_TRUE(is_hermitian(parts.real_part.matrix(), 1e-14));
    EXPECT_TRUE(is_hermitian(parts.imag_part.matrix(), 1e-14));
  }
}

TEST(AbsolutelyContinuous, Examples) {
  NonnegativeForm id2 = NonnegativeForm::scaled_identity(2, 1.0);
  EXPECT_TRUE(is_abs_continuous(nn2(1, 0, 0, 0), id2));
  EXPECT_FALSE(is_abs_continuous(id2, nn2(1, 0, 0, 0)));
  EXPECT_TRUE(is_abs_continuous(NonnegativeForm::zero(2), nn2(1, 0, 0, 0)));
}

TEST(Singular, Examples) {
  EXPECT_TRUE(is_singular(nn2(1, 0, 0, 0), nn2(0, 0, 0, 1)));
  EXPECT_FALSE(is_singular(nn2(1, 0, 0, 0), nn2(1, 0, 0, 0)));
  EXPECT_TRUE(is_singular(NonnegativeForm::zero(2), nn2(1, 0, 0, 0)));
}

TEST(LebesgueDecomposePsd, IdentityAgainstRankOne) {
  PsdDecomposition dec =
      lebesgue_decompose_psd(NonnegativeForm::scaled_identity(2, 1.0), nn2(1, 0, 0, 0));
  EXPECT_LT(max_entry_diff(dec.s_a.matrix(), mat2(1, 0, 0, 0)), 1e-13);
  EXPECT_LT(max_entry_diff(dec.s_s.matrix(), mat2(0, 0, 0, 1)), 1e-13);
}

TEST(LebesgueDecomposePsd, FrozenTwoByTwo) {
  // R ker(W) = span{R e2}; S e2 = (1, 2) gives s_s = (1,2)(1,2)^*/2.
  PsdDecomposition dec = lebesgue_decompose_psd(nn2(2, 1, 1, 2), nn2(1, 0, 0, 0));
  EXPECT_LT(max_entry_diff(dec.s_a.matrix(), mat2(1.5, 0, 0, 0)), 1e-12);
  EXPECT_LT(max_entry_diff(dec.s_s.matrix(), mat2(0.5, 1, 1, 2)), 1e-12);
}

TEST(LebesgueDecomposePsd, PositiveDefiniteWeightKeepsEverything) {
  NonnegativeForm s = nn2(2, 1, 1, 2);
  PsdDecomposition dec = lebesgue_decompose_psd(s, nn2(3, 1, 1, 2));
  EXPECT_LT(max_entry_diff(dec.s_a.matrix(), s.matrix()), 1e-13);
  EXPECT_LT(max_abs(dec.s_s.matrix()), 1e-13);
}

TEST(LebesgueDecomposePsd, RandomInstanceInvariants) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 1 + static_cast<Index>(gen() % 6);
    NonnegativeForm s = random_psd_form(n, gen() % (n + 1), gen);
    NonnegativeForm w = random_psd_form(n, gen() % (n + 1), gen);
    PsdDecomposition dec = lebesgue_decompose_psd(s, w);
    const double scale = std::max(1.0, max_abs(s.matrix()));
    EXPECT_LT(max_entry_diff(dec.s_a.matrix() + dec.s_s.matrix(), s.matrix()), 1e-9 * scale);
    EXPECT_TRUE(is_abs_continuous(dec.s_a, w));
    EXPECT_TRUE(is_singular(dec.s_s, w));
    EXPECT_TRUE(is_singular(dec.s_a, dec.s_s));
    // Idempotence: decomposing a part returns it unchanged.
    PsdDecomposition again_a = lebesgue_decompose_psd(dec.s_a, w);
    EXPECT_LT(max_entry_diff(again_a.s_a.matrix(), dec.s_a.matrix()), 1e-9 * scale);
    EXPECT_LT(max_abs(again_a.s_s.matrix()), 1e-9 * scale);
    PsdDecomposition again_s = lebesgue_decompose_psd(dec.s_s, w);
    EXPECT_LT(max_abs(again_s.s_a.matrix()), 1e-9 * scale);
    EXPECT_LT(max_entry_diff(again_s.s_s.matrix(), dec.s_s.matrix()), 1e-9 * scale);
  }
}

TEST(ParallelSum, ClosedForms) {
  NonnegativeForm id2 = NonnegativeForm::scaled_identity(2, 1.0);
  EXPECT_LT(max_entry_diff(parallel_sum(id2, id2).matrix(), 0.5 * mat2(1, 0, 0, 1)), 1e-13);
  EXPECT_LT(max_abs(parallel_sum(nn2(1, 0, 0, 0), nn2(0, 0, 0, 1)).matrix()), 1e-13);
  NonnegativeForm s = nn2(2, 1, 1, 2);
  EXPECT_LT(max_entry_diff(parallel_sum(s, s).matrix(), 0.5 * s.matrix()), 1e-12);
}

TEST(ParallelSum, SymmetryAndDomination) {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 1 + static_cast<Index>(gen() % 5);
    NonnegativeForm a = random_psd_form(n, gen() % (n + 1), gen);
    NonnegativeForm b = random_psd_form(n, gen() % (n + 1), gen);
    NonnegativeForm p = parallel_sum(a, b);
    NonnegativeForm q = parallel_sum(b, a);
    const double scale = std::max(1.0, std::max(max_abs(a.matrix()), max_abs(b.matrix())));
    EXPECT_LT(max_entry_diff(p.matrix(), q.matrix()), 1e-9 * scale);
    EXPECT_GT(min_eigenvalue(a.action() - p.action()), -1e-9 * scale);
    EXPECT_GT(min_eigenvalue(b.action() - p.action()), -1e-9 * scale);
  }
}

TEST(ParallelSum, MonotoneSequenceBelowAbsContinuousPart) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = 2 + static_cast<Index>(gen() % 4);
    NonnegativeForm s = random_psd_form(n, n, gen);
    NonnegativeForm w = random_psd_form(n, gen() % (n + 1), gen);
    NonnegativeForm s_a = lebesgue_decompose_psd(s, w).s_a;
    ComplexMatrix prev = ComplexMatrix::Zero(n, n);
    for (int k = 1; k <= 10; ++k) {
      ComplexMatrix cur = parallel_sum(s, w.scaled(k)).action();
      EXPECT_GT(min_eigenvalue(cur - prev), -1e-9);
      EXPECT_GT(min_eigenvalue(s_a.action() - cur), -1e-9);
      prev = cur;
    }
  }
}

TEST(DefaultPairs, IdentityPreset) {
  DefaultPairs pairs = default_pairs(form2(-1, 0, 0, 1));
  EXPECT_LT(max_entry_diff(pairs.identity_pair.s1.matrix(), mat2(1, 0, 0, 1)), 1e-13);
  EXPECT_NEAR(pairs.identity_pair.contraction_norm, 1.0, 1e-12);
}

TEST(DefaultPairs, ZeroForm) {
  DefaultPairs pairs = default_pairs(FormMatrix::zero(2));
  EXPECT_LT(max_abs(pairs.identity_pair.s1.matrix()), 1e-15);
  EXPECT_NEAR(pairs.identity_pair.contraction_norm, 0.0, 1e-15);
  EXPECT_LT(max_abs(pairs.polar_pair.s1.matrix()), 1e-15);
}

TEST(DefaultPairs, PolarOfRankOne) {
  // t(e1, e2) = 1 only: G = [[0,0],[1,0]], |G| = diag(1,0), |G*| = diag(0,1).
  DefaultPairs pairs = default_pairs(form2(0, 1, 0, 0));
  EXPECT_LT(max_entry_diff(pairs.polar_pair.s1.matrix(), mat2(1, 0, 0, 0)), 1e-13);
  EXPECT_LT(max_entry_diff(pairs.polar_pair.s2.matrix(), mat2(0, 0, 0, 1)), 1e-13);
}

TEST(PairCheck, IdentityPairOnDiagonalForm) {
  NonnegativeForm id2 = NonnegativeForm::scaled_identity(2, 1.0);
  PairCheck check = pair_check(id2, id2, form2(-1, 0, 0, 1));
  EXPECT_TRUE(check.ok);
  EXPECT_NEAR(check.contraction_norm, 1.0, 1e-12);
}

TEST(PairCheck, SymmetricMemberFromExample) {
  NonnegativeForm s = nn2(2, 1, 1, 2);
  EXPECT_TRUE(pair_check(s, s, form2(-1, 0, 0, 1)).ok);
}

TEST(PairCheck, KernelObstruction) {
  NonnegativeForm id2 = NonnegativeForm::scaled_identity(2, 1.0);
  EXPECT_FALSE(pair_check(nn2(1, 0, 0, 0), id2, form2(-1, 0, 0, 1)).ok);
}

TEST(MlCheck, Examples) {
  FormMatrix t = form2(-1, 0, 0, 1);
  MlCheck id_check = ml_check(NonnegativeForm::scaled_identity(2, 1.0), t);
  EXPECT_TRUE(id_check.member);
  EXPECT_NEAR(id_check.companion_scale, 1.0, 1e-12);
  EXPECT_FALSE(ml_check(nn2(1, 0, 0, 0), t).member);
  // |G| from the polar pair is always a member.
  std::mt19937_64 gen(19);
  for (int trial = 0; trial < 10; ++trial) {
    FormMatrix random_t(random_complex_matrix(3, 3, gen));
    EXPECT_TRUE(ml_check(polar_pair(random_t).s1, random_t).member);
  }
}

TEST(MlCheck, MembershipIsMonotone) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 15; ++trial) {
    const Index n = 2 + static_cast<Index>(gen() % 4);
    FormMatrix t(random_complex_matrix(n, n, gen));
    NonnegativeForm s1 = polar_pair(t).s1;
    ASSERT_TRUE(ml_check(s1, t).member);
    NonnegativeForm bump = random_psd_form(n, gen() % (n + 1), gen);
    NonnegativeForm larger(FormMatrix(s1.matrix() + bump.matrix()));
    EXPECT_TRUE(ml_check(larger, t).member);
  }
}

// The 2x2 instance whose two decompositions are printed in full: t has
// display matrix diag(-1, 1) and w = diag(1, 0).
class GoldenDecomposition : public ::testing::Test {
 protected:
  FormMatrix t_ = form2(-1, 0, 0, 1);
  NonnegativeForm w_ = nn2(1, 0, 0, 0);
};

TEST_F(GoldenDecomposition, IdentityPairSplitsDiagonally) {
  LeftDecomposition dec = left_decompose(t_, w_, identity_pair(t_));
  EXPECT_LT(max_entry_diff(dec.t_lr.matrix(), mat2(-1, 0, 0, 0)), 1e-12);
  EXPECT_LT(max_entry_diff(dec.t_ls.matrix(), mat2(0, 0, 0, 1)), 1e-12);
}

TEST_F(GoldenDecomposition, ExplicitPairGivesSecondSplit) {
  NonnegativeForm s = nn2(2, 1, 1, 2);
  LeftDecomposition dec = left_decompose(t_, w_, checked_pair(s, s, t_));
  EXPECT_LT(max_entry_diff(dec.t_lr.matrix(), mat2(-1, -0.5, 0, 0)), 1e-10);
  EXPECT_LT(max_entry_diff(dec.t_ls.matrix(), mat2(0, 0.5, 0, 1)), 1e-10);
  EXPECT_LE(dec.bound_norm_regular, 1.0 + 1e-9);
  EXPECT_LE(dec.bound_norm_singular, 1.0 + 1e-9);
}

TEST_F(GoldenDecomposition, DefaultMatchesIdentityPreset) {
  LeftDecomposition dec = left_decompose_default(t_, w_);
  EXPECT_LT(max_entry_diff(dec.t_lr.matrix(), mat2(-1, 0, 0, 0)), 1e-12);
  EXPECT_LT(max_entry_diff(dec.t_ls.matrix(), mat2(0, 0, 0, 1)), 1e-12);
}

TEST(LeftDecompose, ZeroFormSplitsTrivially) {
  FormMatrix t = FormMatrix::zero(2);
  LeftDecomposition dec = left_decompose(t, nn2(1, 0, 0, 0), identity_pair(t));
  EXPECT_LT(max_abs(dec.t_lr.matrix()), 1e-15);
  EXPECT_LT(max_abs(dec.t_ls.matrix()), 1e-15);
}

TEST(LeftDecompose, RejectsInvalidPair) {
  FormMatrix t = form2(-1, 0, 0, 1);
  DominatingPair bad{nn2(1, 0, 0, 0), NonnegativeForm::scaled_identity(2, 1.0), 1.0};
  EXPECT_THROW(left_decompose(t, nn2(1, 0, 0, 0), bad), PreconditionError);
}

TEST(LeftDecompose, RejectsDimensionMismatch) {
  FormMatrix t = form2(-1, 0, 0, 1);
  EXPECT_THROW(left_decompose(t, NonnegativeForm::zero(3), identity_pair(t)),
               InvalidInputError);
}

TEST(LeftDecomposeDefault, PositiveDefiniteWeightKeepsEverything) {
  FormMatrix t = form2(Complex(1, 2), 3, 0, Complex(-1, 0));
  LeftDecomposition dec = left_decompose_default(t, nn2(2, 1, 1, 2));
  EXPECT_EQ(dec.t_lr.matrix(), t.matrix());
  EXPECT_EQ(max_abs(dec.t_ls.matrix()), 0.0);
}

TEST(LeftDecomposeDefault, ZeroWeightMakesEverythingSingular) {
  FormMatrix t = form2(Complex(1, 2), 3, 0, Complex(-1, 0));
  LeftDecomposition dec = left_decompose_default(t, NonnegativeForm::zero(2));
  EXPECT_EQ(max_abs(dec.t_lr.matrix()), 0.0);
  EXPECT_EQ(dec.t_ls.matrix(), t.matrix());
}

TEST(LeftDecomposeDefault, AgreesWithIdentityPair) {
  std::mt19937_64 gen(29);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = 1 + static_cast<Index>(gen() % 6);
    FormMatrix t(random_complex_matrix(n, n, gen));
    NonnegativeForm w = random_psd_form(n, gen() % (n + 1), gen);
    LeftDecomposition by_default = left_decompose_default(t, w);
    LeftDecomposition by_theorem = left_decompose(t, w, identity_pair(t));
    const double scale = std::max(1.0, max_abs(t.matrix()));
    EXPECT_LT(max_entry_diff(by_default.t_lr.matrix(), by_theorem.t_lr.matrix()),
              1e-9 * scale);
    EXPECT_LT(max_entry_diff(by_default.t_ls.matrix(), by_theorem.t_ls.matrix()),
              1e-9 * scale);
  }
}

TEST(ClassifyLeft, NeitherRegularNorSingular) {
  LeftClassification cls = classify_left(form2(-1, 0, 0, 1), nn2(1, 0, 0, 0));
  EXPECT_FALSE(cls.left_regular);
  EXPECT_FALSE(cls.left_strongly_singular);
  EXPECT_FALSE(cls.minimal_c.has_value());
}

TEST(ClassifyLeft, FormAgainstItself) {
  LeftClassification cls =
      classify_left(form2(1, 0, 0, 0), nn2(1, 0, 0, 0));
  EXPECT_TRUE(cls.left_regular);
  EXPECT_TRUE(cls.left_bounded);
  ASSERT_TRUE(cls.minimal_c.has_value());
  EXPECT_NEAR(*cls.minimal_c, 1.0, 1e-12);
}

TEST(ClassifyLeft, StronglySingularOffDiagonal) {
  // ker t = span{e1}, ker w = span{e2}: the kernels sum to C^2.
  LeftClassification cls = classify_left(form2(0, 0, 1, 0), nn2(1, 0, 0, 0));
  EXPECT_TRUE(cls.left_strongly_singular);
  EXPECT_FALSE(cls.left_regular);
}

TEST(SingularWitness, SplitsAcrossKernels) {
  FormMatrix t = form2(0, 0, 1, 0);
  NonnegativeForm w = nn2(1, 0, 0, 0);
  ComplexVector f(2);
  f << Complex(1), Complex(1);
  WitnessSplit split = singular_witness(t, w, f);
  ComplexVector u_expected(2), v_expected(2);
  u_expected << Complex(0), Complex(1);
  v_expected << Complex(1), Complex(0);
  EXPECT_LT((split.u - u_expected).norm(), 1e-12);
  EXPECT_LT((split.v - v_expected).norm(), 1e-12);
  EXPECT_NEAR(w.quad(split.u), 0.0, 1e-15);
}

TEST(SingularWitness, VectorAlreadyInOneKernel) {
  FormMatrix t = form2(0, 0, 1, 0);
  NonnegativeForm w = nn2(1, 0, 0, 0);
  ComplexVector in_ker_t(2), in_ker_w(2);
  in_ker_t << Complex(2), Complex(0);
  in_ker_w << Complex(0), Complex(3);
  WitnessSplit split_t = singular_witness(t, w, in_ker_t);
  EXPECT_LT(split_t.u.norm(), 1e-12);
  EXPECT_LT((split_t.v - in_ker_t).norm(), 1e-12);
  WitnessSplit split_w = singular_witness(t, w, in_ker_w);
  EXPECT_LT((split_w.u - in_ker_w).norm(), 1e-12);
  EXPECT_LT(split_w.v.norm(), 1e-12);
}

TEST(SingularWitness, RequiresStrongSingularity) {
  ComplexVector f(2);
  f << Complex(1), Complex(1);
  EXPECT_THROW(singular_witness(form2(-1, 0, 0, 1), nn2(1, 0, 0, 0), f), PreconditionError);
}

TEST(SingularWitness, RandomReconstruction) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 15; ++trial) {
    const Index n = 2 + static_cast<Index>(gen() % 5);
    // Build a strongly singular instance: t kills a random direction set,
    // w kills a complementary one.
    ComplexMatrix basis = column_span(random_complex_matrix(n, n, gen)).matrix();
    const Index k = 1 + static_cast<Index>(gen() % (n - 1));
    ComplexMatrix p_t = basis.leftCols(k) * basis.leftCols(k).adjoint();
    ComplexMatrix p_w = basis.rightCols(n - k) * basis.rightCols(n - k).adjoint();
    FormMatrix t = FormMatrix::from_action(
        ComplexMatrix(random_complex_matrix(n, n, gen) * (ComplexMatrix::Identity(n, n) - p_t)));
    NonnegativeForm w(FormMatrix(
        ComplexMatrix(ComplexMatrix::Identity(n, n) - p_w).transpose()));
    ASSERT_TRUE(classify_left(t, w).left_strongly_singular);
    ComplexVector f = random_complex_matrix(n, 1, gen);
    WitnessSplit split = singular_witness(t, w, f);
    EXPECT_LT((split.u + split.v - f).norm(), 1e-9 * std::max(1.0, f.norm()));
    EXPECT_LT(w.quad(split.u), 1e-15);
    EXPECT_LT((t.action() * split.v).norm(), 1e-9);
  }
}

// Properties of the left decomposition over random instances, both presets.
TEST(LeftDecompositionProperties, RandomSuite) {
  std::mt19937_64 gen(37);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 1 + static_cast<Index>(gen() % 6);
    FormMatrix t(random_complex_matrix(n, n, gen));
    NonnegativeForm w = random_psd_form(n, gen() % (n + 1), gen);
    for (bool use_polar : {false, true}) {
      DominatingPair pair = use_polar ? polar_pair(t) : identity_pair(t);
      LeftDecomposition dec = left_decompose(t, w, pair);
      const ComplexMatrix g = t.action();
      const double g_norm = operator_norm(g);
      // Additivity.
      EXPECT_LT(max_entry_diff(dec.t_lr.matrix() + dec.t_ls.matrix(), t.matrix()),
                1e-10 * std::max(1.0, g_norm));
      // Left regularity of the regular part: ker(w) inside ker(t_lr).
      if (dec.ker_w.count() > 0) {
        EXPECT_LT(operator_norm(dec.t_lr.action() * dec.ker_w.matrix()), 1e-9);
      }
      // Strong singularity of the singular part: kernels sum to C^n.
      SubspaceBasis ker_ls = kernel_of_form(dec.t_ls);
      EXPECT_EQ(subspace_relation(dec.ker_w, ker_ls).sum_dim, n);
      // Bounds (3).
      EXPECT_LE(dec.bound_norm_regular, 1.0 + 1e-8);
      EXPECT_LE(dec.bound_norm_singular, 1.0 + 1e-8);
      // sigma_a + sigma_s = s1.
      EXPECT_LT(max_entry_diff(dec.sigma_a.matrix() + dec.sigma_s.matrix(), pair.s1.matrix()),
                1e-9 * std::max(1.0, max_abs(pair.s1.matrix())));
    }
  }
}

TEST(LeftDecompositionProperties, DefaultSingularPartVanishesIffRegular) {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 1 + static_cast<Index>(gen() % 6);
    NonnegativeForm w = random_psd_form(n, gen() % (n + 1), gen);
    ComplexMatrix g = random_complex_matrix(n, n, gen);
    if (trial % 2 == 0) {
      // Force left regularity: make the action annihilate ker(w).
      ComplexMatrix p = projector_onto(kernel_of_form(w.form()));
      g = g * (ComplexMatrix::Identity(n, n) - p);
    }
    FormMatrix t = FormMatrix::from_action(g);
    LeftDecomposition dec = left_decompose_default(t, w);
    const bool regular = classify_left(t, w).left_regular;
    const bool ls_zero = operator_norm(dec.t_ls.matrix()) <= 1e-10;
    EXPECT_EQ(regular, ls_zero);
  }
}

TEST(RealImaginaryParts, RegularPartsImplyRegularForm) {
  std::mt19937_64 gen(43);
  int nontrivial = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 2 + static_cast<Index>(gen() % 5);
    NonnegativeForm w = random_psd_form(n, 1 + gen() % n, gen);
    ComplexMatrix g = random_complex_matrix(n, n, gen);
    // Two-sided compression makes G, G*, and hence Re/Im actions kill ker(w).
    ComplexMatrix p = projector_onto(kernel_of_form(w.form()));
    ComplexMatrix free = ComplexMatrix::Identity(n, n) - p;
    g = free * g * free;
    FormMatrix t = FormMatrix::from_action(g);
    FormParts parts = decompose_parts(t);
    if (classify_left(parts.real_part, w).left_regular &&
        classify_left(parts.imag_part, w).left_regular) {
      ++nontrivial;
      EXPECT_TRUE(classify_left(t, w).left_regular);
    }
  }
  EXPECT_GT(nontrivial, 0);
}

TEST(RealImaginaryParts, ConverseFailsOnFixedInstance) {
  // t(e1, e2) = 1 and nothing else: t is w-left regular but Re(t) is not.
  FormMatrix t = form2(0, 1, 0, 0);
  NonnegativeForm w = nn2(1, 0, 0, 0);
  EXPECT_TRUE(classify_left(t, w).left_regular);
  FormParts parts = decompose_parts(t);
  EXPECT_FALSE(classify_left(parts.real_part, w).left_regular);
  EXPECT_FALSE(classify_left(parts.imag_part, w).left_regular);
}

}  // namespace
}  // namespace lebforms
