#include "mcdm/ahp.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "mcdm/errors.h"
#include "oracles.h"

namespace mcdm {
namespace {

using testing::Names;
using testing::OracleDominantEigen;
using testing::RandomPositive;

ScoreVector Scores(std::vector<double> s) { return {Names(s.size()), std::move(s)}; }

TEST(BuildPairwise, RatioPatternFromScores) {
  const PairwiseMatrix p = BuildPairwise(Scores({4, 3, 2, 1}));
  EXPECT_DOUBLE_EQ(p(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(p(0, 1), 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(p(0, 2), 2.0);
  EXPECT_DOUBLE_EQ(p(0, 3), 4.0);
  EXPECT_DOUBLE_EQ(p(1, 0), 0.75);
  EXPECT_DOUBLE_EQ(p(3, 0), 0.25);
}

TEST(BuildPairwise, EqualScoresGiveAllOnes) {
  const PairwiseMatrix p = BuildPairwise(Scores({2.7, 2.7, 2.7}));
  EXPECT_EQ(p.values(), Matrix(3, 3, 1.0));
}

TEST(BuildPairwise, ClampsToSaatyRangeSymmetrically) {
  Diagnostics diag;
  const PairwiseMatrix p = BuildPairwise(Scores({2.0, 0.1}), &diag);
  EXPECT_EQ(p(0, 1), 9.0);
  EXPECT_EQ(p(1, 0), 1.0 / 9.0);
  EXPECT_EQ(diag.warnings.size(), 1u);
  const PairwiseMatrix q = BuildPairwise(Scores({0.1, 2.0}));
  EXPECT_EQ(q(0, 1), 1.0 / 9.0);
  EXPECT_EQ(q(1, 0), 9.0);
}

TEST(BuildPairwise, FloorsZeroScores) {
  Diagnostics diag;
  const PairwiseMatrix p = BuildPairwise(Scores({0.0, 0.0}), &diag);
  EXPECT_EQ(p(0, 1), 1.0);
  EXPECT_EQ(diag.warnings.size(), 2u);
}

TEST(BuildPairwise, RejectsNonFinite) {
  EXPECT_THROW(BuildPairwise(Scores({1.0, std::nan("")})), InputError);
  EXPECT_THROW(BuildPairwise(Scores({1.0, INFINITY})), InputError);
  EXPECT_THROW(BuildPairwise(Scores({1.0})), InputError);
}

TEST(BuildPairwise, ReciprocalAndInSaatyRange) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 9;
    const PairwiseMatrix p = BuildPairwise(Scores(RandomPositive(rng, n, 0.0, 4.0)));
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(p(i, i), 1.0);
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_NEAR(p(i, j) * p(j, i), 1.0, 1e-9);
        EXPECT_GE(p(i, j), kSaatyMin);
        EXPECT_LE(p(i, j), kSaatyMax);
      }
    }
  }
}

TEST(BuildPairwise, ScaleInvariant) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = RandomPositive(rng, 6, 0.05, 4.0);
    auto scaled = s;
    const double c = std::uniform_real_distribution<double>(0.01, 100.0)(rng);
    for (double& x : scaled) x *= c;
    const PairwiseMatrix a = BuildPairwise(Scores(s));
    const PairwiseMatrix b = BuildPairwise(Scores(scaled));
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) EXPECT_NEAR(a(i, j), b(i, j), 1e-12 * a(i, j));
    const auto wa = PrincipalEigenvector(a).weights.weights;
    const auto wb = PrincipalEigenvector(b).weights.weights;
    for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(wa[i], wb[i], 1e-9);
  }
}

TEST(PairwiseMatrix, RejectsNonReciprocal) {
  EXPECT_THROW(PairwiseMatrix(Names(2), Matrix{{1, 2}, {0.4, 1}}), InputError);
  EXPECT_THROW(PairwiseMatrix(Names(2), Matrix{{2, 2}, {0.5, 1}}), InputError);
  EXPECT_THROW(PairwiseMatrix(Names(2), Matrix{{1, -2}, {-0.5, 1}}), InputError);
  EXPECT_THROW(PairwiseMatrix(Names(3), Matrix{{1, 2}, {0.5, 1}}), InputError);
}

TEST(PrincipalEigenvector, ConsistentMatrixRecoversWeights) {
  const std::vector<double> w = {0.5, 0.3, 0.2};
  const EigenResult r = PrincipalEigenvector(RatioMatrix(Names(3), w));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(r.weights.weights[i], w[i], 1e-9);
  EXPECT_NEAR(r.lambda_max, 3.0, 1e-9);
}

TEST(PrincipalEigenvector, AllOnesIsUniform) {
  const EigenResult r = PrincipalEigenvector(PairwiseMatrix(Names(3), Matrix(3, 3, 1.0)));
  for (double x : r.weights.weights) EXPECT_NEAR(x, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.lambda_max, 3.0, 1e-12);
}

TEST(PrincipalEigenvector, MatchesDenseEigensolver) {
  const Matrix a{{1, 2, 6}, {1.0 / 2, 1, 4}, {1.0 / 6, 1.0 / 4, 1}};
  // Frozen from an independent eigendecomposition.
  constexpr double kLambda = 3.0092027127142793;
  const auto oracle = OracleDominantEigen(a);
  ASSERT_NEAR(oracle.lambda_max, kLambda, 1e-12);

  const EigenResult r = PrincipalEigenvector(PairwiseMatrix(Names(3), a));
  EXPECT_NEAR(r.lambda_max, kLambda, 1e-9);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(r.weights.weights[i], oracle.weights[i], 1e-9);
  EXPECT_NEAR(ConsistencyIndex(r.lambda_max, 3), 0.0046, 1e-4);
}

TEST(PrincipalEigenvector, AgreesWithOracleOnRandomReciprocalMatrices) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> entry(1.0 / 9.0, 9.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    Matrix a(n, n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        a(i, j) = entry(rng);
        a(j, i) = 1.0 / a(i, j);
      }
    }
    const auto oracle = OracleDominantEigen(a);
    const EigenResult r = PrincipalEigenvector(PairwiseMatrix(Names(n), a));
    EXPECT_NEAR(r.lambda_max, oracle.lambda_max, 1e-7);
    EXPECT_GE(r.lambda_max, static_cast<double>(n) - 1e-6);
    EXPECT_NEAR(std::accumulate(r.weights.weights.begin(), r.weights.weights.end(), 0.0), 1.0,
                1e-9);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(r.weights.weights[i], oracle.weights[i], 1e-8);
  }
}

TEST(PrincipalEigenvector, PermutationEquivariant) {
  std::mt19937_64 rng(23);
  const auto s = RandomPositive(rng, 5, 0.3, 4.0);
  std::vector<std::size_t> perm = {3, 0, 4, 1, 2};
  std::vector<double> permuted(5);
  for (std::size_t i = 0; i < 5; ++i) permuted[i] = s[perm[i]];
  const auto w = PrincipalEigenvector(BuildPairwise(Scores(s))).weights.weights;
  const auto wp = PrincipalEigenvector(BuildPairwise(Scores(permuted))).weights.weights;
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(wp[i], w[perm[i]], 1e-10);
}

TEST(PrincipalEigenvector, ConvergenceErrorCarriesIterate) {
  const Matrix a{{1, 2, 6}, {1.0 / 2, 1, 4}, {1.0 / 6, 1.0 / 4, 1}};
  try {
    PrincipalEigenvector(PairwiseMatrix(Names(3), a), {1e-300, 2});
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    ASSERT_EQ(e.last_iterate().size(), 3u);
    EXPECT_NEAR(std::accumulate(e.last_iterate().begin(), e.last_iterate().end(), 0.0), 1.0,
                1e-12);
  }
  EXPECT_THROW(PrincipalEigenvector(PairwiseMatrix(Names(3), a), {0.0, 10}), InputError);
  EXPECT_THROW(PrincipalEigenvector(PairwiseMatrix(Names(3), a), {1e-10, 0}), InputError);
}

TEST(ConsistencyIndex, Examples) {
  EXPECT_EQ(ConsistencyIndex(4.0, 4), 0.0);
  EXPECT_EQ(ConsistencyIndex(7.0, 7), 0.0);
  EXPECT_NEAR(ConsistencyIndex(4.37, 4), 0.37 / 3.0, 1e-12);
  EXPECT_NEAR(ConsistencyIndex(4.37, 4), 0.12333, 1e-5);
  EXPECT_NEAR(ConsistencyIndex(3.009, 3), 0.0045, 1e-12);
  EXPECT_EQ(ConsistencyIndex(1.0, 1), 0.0);
}

TEST(RandomIndex, SaatyTable) {
  EXPECT_EQ(RandomIndex(1), 0.0);
  EXPECT_EQ(RandomIndex(2), 0.0);
  EXPECT_EQ(RandomIndex(3), 0.58);
  EXPECT_EQ(RandomIndex(4), 0.90);
  EXPECT_EQ(RandomIndex(10), 1.49);
  EXPECT_EQ(RandomIndex(15), 1.59);
  EXPECT_THROW(RandomIndex(0), RangeError);
  EXPECT_THROW(RandomIndex(16), RangeError);
}

TEST(ConsistencyRatio, Examples) {
  const auto zero = ComputeConsistencyRatio(0.0, 7);
  EXPECT_EQ(zero.cr, 0.0);
  EXPECT_TRUE(zero.consistent);

  const auto bad = ComputeConsistencyRatio(0.12333, 4);
  EXPECT_NEAR(bad.cr, 0.137, 1e-3);
  EXPECT_FALSE(bad.consistent);

  const auto good = ComputeConsistencyRatio(0.0045, 3);
  EXPECT_NEAR(good.cr, 0.0078, 1e-4);
  EXPECT_TRUE(good.consistent);

  EXPECT_EQ(ComputeConsistencyRatio(0.5, 2).cr, 0.0);
  EXPECT_TRUE(ComputeConsistencyRatio(0.12333, 4, 0.5).consistent);
}

TEST(CheckConsistency, ReportFields) {
  const ConsistencyReport r = CheckConsistency(4.37, 4);
  EXPECT_EQ(r.n, 4u);
  EXPECT_EQ(r.ri, 0.90);
  EXPECT_NEAR(r.ci, 0.37 / 3.0, 1e-12);
  EXPECT_NEAR(r.cr, 0.37 / 3.0 / 0.90, 1e-12);
  EXPECT_FALSE(r.consistent);
}

TEST(Consistency, RatioMatricesRoundTrip) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    auto w = RandomPositive(rng, n, 0.01, 1.0);
    const double sum = std::accumulate(w.begin(), w.end(), 0.0);
    const EigenResult r = PrincipalEigenvector(RatioMatrix(Names(n), w));
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(r.weights.weights[i], w[i] / sum, 1e-8);
    const ConsistencyReport c = CheckConsistency(r.lambda_max, n);
    EXPECT_NEAR(c.ci, 0.0, 1e-8);
    EXPECT_LE(c.cr, 1e-8);
  }
}

TEST(Consistency, UnclampedBuildIsConsistent) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + trial % 8;
    // Ratios stay inside [1/9, 9] so no clamping happens.
    const auto s = RandomPositive(rng, n, 0.45, 4.0);
    Diagnostics diag;
    const PairwiseMatrix p = BuildPairwise(Scores(s), &diag);
    ASSERT_TRUE(diag.warnings.empty());
    const EigenResult r = PrincipalEigenvector(p);
    EXPECT_LE(CheckConsistency(r.lambda_max, n).cr, 1e-8);
  }
}

TEST(Consistency, ClampedFixtureFailsGate) {
  // Scores (4, 2, 0.4, 0.04) clamp three ratios to 9.
  const PairwiseMatrix p = BuildPairwise(Scores({4, 2, 0.4, 0.04}));
  const auto oracle = OracleDominantEigen(p.values());
  const double oracle_cr = (oracle.lambda_max - 4.0) / 3.0 / 0.90;
  ASSERT_GT(oracle_cr, 0.1);
  const EigenResult r = PrincipalEigenvector(p);
  const ConsistencyReport c = CheckConsistency(r.lambda_max, 4);
  EXPECT_NEAR(c.cr, oracle_cr, 1e-8);
  EXPECT_FALSE(c.consistent);
  EXPECT_TRUE(CheckConsistency(r.lambda_max, 4, 0.5).consistent);
}

}  // namespace
}  // namespace mcdm
