#include "mcdm/ahp.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "mcdm/errors.h"

namespace mcdm {
namespace {

constexpr double kReciprocityTolerance = 1e-9;

// Saaty's random consistency index, n = 1..15.
constexpr std::array<double, 15> kRandomIndex = {
    0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41,
    1.45, 1.49, 1.51, 1.48, 1.56, 1.57, 1.59};

}  // namespace

PairwiseMatrix::PairwiseMatrix(std::vector<std::string> names, Matrix a)
    : names_(std::move(names)), a_(std::move(a)) {
  const std::size_t n = a_.rows();
  if (a_.cols() != n) throw InputError("pairwise matrix must be square");
  if (names_.size() != n) throw InputError("pairwise matrix name count mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (a_(i, i) != 1.0) {
      throw InputError("pairwise matrix diagonal must be 1 (row " + std::to_string(i + 1) + ")");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double v = a_(i, j);
      if (!std::isfinite(v) || v <= 0.0) {
        throw InputError("pairwise matrix entries must be positive and finite");
      }
      if (j > i && std::abs(v * a_(j, i) - 1.0) > kReciprocityTolerance) {
        throw InputError("pairwise matrix is not reciprocal at (" + std::to_string(i + 1) +
                         ", " + std::to_string(j + 1) + ")");
      }
    }
  }
}

PairwiseMatrix BuildPairwise(const ScoreVector& s, Diagnostics* diag) {
  const std::size_t n = s.scores.size();
  if (n < 2) throw InputError("pairwise construction needs at least 2 scores");
  if (s.alternatives.size() != n) throw InputError("score/name length mismatch");

  std::vector<double> scores(s.scores);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(scores[i])) {
      throw InputError("score for '" + s.alternatives[i] + "' is not finite");
    }
    if (scores[i] < 0.0) {
      throw InputError("score for '" + s.alternatives[i] + "' is negative");
    }
    if (scores[i] < kScoreFloor) {
      Warn(diag, "score for '" + s.alternatives[i] + "' floored to 1e-6");
      scores[i] = kScoreFloor;
    }
  }

  Matrix a(n, n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double ratio = scores[i] / scores[j];
      if (ratio > kSaatyMax) {
        a(i, j) = kSaatyMax;
        a(j, i) = 1.0 / kSaatyMax;
      } else if (ratio < kSaatyMin) {
        a(i, j) = 1.0 / kSaatyMax;
        a(j, i) = kSaatyMax;
      } else {
        a(i, j) = ratio;
        a(j, i) = scores[j] / scores[i];
        continue;
      }
      Warn(diag, "ratio '" + s.alternatives[i] + "' / '" + s.alternatives[j] + "' = " +
                     std::to_string(ratio) + " clamped to the 1/9..9 scale");
    }
  }
  return PairwiseMatrix(s.alternatives, std::move(a));
}

PairwiseMatrix RatioMatrix(std::span<const std::string> names,
                           std::span<const double> weights) {
  const std::size_t n = weights.size();
  Matrix a(n, n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) a(i, j) = weights[i] / weights[j];
  return PairwiseMatrix(std::vector<std::string>(names.begin(), names.end()), std::move(a));
}

EigenResult PrincipalEigenvector(const PairwiseMatrix& p,
                                 const PowerIterationOptions& options) {
  if (!(options.tolerance > 0.0)) throw InputError("tolerance must be positive");
  if (options.max_iterations < 1) throw InputError("max_iterations must be >= 1");

  const Matrix& a = p.values();
  const std::size_t n = p.size();
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * w[j];
      next[i] = acc;
      sum += acc;
    }
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= sum;
      delta = std::max(delta, std::abs(next[i] - w[i]));
    }
    w.swap(next);
    if (delta < options.tolerance) {
      double num = 0.0;
      double den = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double aw = 0.0;
        for (std::size_t j = 0; j < n; ++j) aw += a(i, j) * w[j];
        num += w[i] * aw;
        den += w[i] * w[i];
      }
      return EigenResult{WeightVector{p.names(), w}, num / den, iter};
    }
  }
  throw ConvergenceError("power iteration did not converge in " +
                             std::to_string(options.max_iterations) + " iterations",
                         w);
}

double ConsistencyIndex(double lambda_max, std::size_t n) {
  if (n < 2) return 0.0;
  return (lambda_max - static_cast<double>(n)) / static_cast<double>(n - 1);
}

double RandomIndex(std::size_t n) {
  if (n < 1 || n > kRandomIndex.size()) {
    throw RangeError("random index is tabulated for 1 <= n <= 15, got n = " +
                     std::to_string(n));
  }
  return kRandomIndex[n - 1];
}

ConsistencyRatio ComputeConsistencyRatio(double ci, std::size_t n, double threshold) {
  if (!std::isfinite(ci)) throw InputError("consistency index is not finite");
  const double ri = RandomIndex(n);
  const double cr = ri > 0.0 ? ci / ri : 0.0;
  return ConsistencyRatio{cr, cr <= threshold};
}

ConsistencyReport CheckConsistency(double lambda_max, std::size_t n, double threshold) {
  ConsistencyReport report;
  report.lambda_max = lambda_max;
  report.n = n;
  report.ci = ConsistencyIndex(lambda_max, n);
  report.ri = RandomIndex(n);
  const auto ratio = ComputeConsistencyRatio(report.ci, n, threshold);
  report.cr = ratio.cr;
  report.threshold = threshold;
  report.consistent = ratio.consistent;
  return report;
}

}  // namespace mcdm
