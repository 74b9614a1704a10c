#include "mcdm/ranking.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mcdm/errors.h"
#include "mcdm/fuzzy_ahp.h"

namespace mcdm {
namespace {

std::vector<double> ApplyScoreMode(std::span<const double> weights,
                                   std::span<const double> basis, ScoreMode mode) {
  std::vector<double> out(weights.begin(), weights.end());
  if (mode == ScoreMode::kWeight) return out;
  double total = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= basis[i];
    total += out[i];
  }
  if (total <= 0.0) return std::vector<double>(weights.begin(), weights.end());
  for (double& x : out) x /= total;
  return out;
}

}  // namespace

std::string_view ToString(Method method) {
  switch (method) {
    case Method::kManual: return "manual";
    case Method::kAhp: return "ahp";
    case Method::kFuzzyAhp: return "fuzzy_ahp";
  }
  return "?";
}

WeightVector ManualBaseline(const ScoreVector& s) {
  double total = 0.0;
  for (double x : s.scores) {
    if (!std::isfinite(x) || x < 0.0) {
      throw InputError("manual baseline needs finite non-negative scores");
    }
    total += x;
  }
  if (total <= 0.0) throw InputError("manual baseline is undefined for all-zero scores");
  WeightVector w{s.alternatives, s.scores};
  for (double& x : w.weights) x /= total;
  return w;
}

std::vector<RankingEntry> Rank(const WeightVector& w, std::span<const double> raw_scores) {
  const std::size_t n = w.weights.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return w.weights[a] > w.weights[b];
  });
  std::vector<RankingEntry> entries;
  entries.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t i = order[r];
    entries.push_back(RankingEntry{r + 1, i, w.names.at(i), w.weights[i],
                                   raw_scores.empty() ? 0.0 : raw_scores[i]});
  }
  return entries;
}

double Mse(std::span<const double> f, std::span<const double> y) {
  if (f.size() != y.size()) throw InputError("mse: length mismatch");
  if (f.empty()) throw InputError("mse: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = f[i] - y[i];
    sum += d * d;
  }
  return sum / static_cast<double>(f.size());
}

std::vector<RankingReport> CompareMethods(const ReviewMatrix& data,
                                          const CompareOptions& options,
                                          Diagnostics* diag) {
  return CompareMethods(CategoryMeans(data), options, diag);
}

std::vector<RankingReport> CompareMethods(const ScoreVector& means,
                                          const CompareOptions& options,
                                          Diagnostics* diag) {
  const ScoreVector basis = options.normalize ? Normalize(means, diag) : means;
  const WeightVector manual = ManualBaseline(basis);

  const bool needs_matrix = std::any_of(options.methods.begin(), options.methods.end(),
                                        [](Method m) { return m != Method::kManual; });
  std::optional<PairwiseMatrix> pairwise;
  std::optional<ConsistencyReport> consistency;
  std::optional<EigenResult> eigen;
  if (needs_matrix) {
    pairwise = BuildPairwise(basis, diag);
    eigen = PrincipalEigenvector(*pairwise, options.power_iteration);
    consistency = CheckConsistency(eigen->lambda_max, pairwise->size(), options.cr_threshold);
  }

  std::vector<RankingReport> reports;
  for (Method method : options.methods) {
    RankingReport report;
    report.method = method;
    WeightVector final_weights{means.alternatives, {}};
    switch (method) {
      case Method::kManual:
        final_weights.weights = manual.weights;
        break;
      case Method::kAhp:
        final_weights.weights =
            ApplyScoreMode(eigen->weights.weights, basis.scores, options.score_mode);
        report.consistency = consistency;
        break;
      case Method::kFuzzyAhp: {
        const WeightVector fuzzy = FuzzyWeights(BuildFuzzyPairwise(*pairwise), diag);
        final_weights.weights = ApplyScoreMode(fuzzy.weights, basis.scores, options.score_mode);
        report.consistency = consistency;
        break;
      }
    }
    if (method != Method::kManual) {
      report.mse_vs_manual = Mse(final_weights.weights, manual.weights);
    }
    report.entries = Rank(final_weights, means.scores);
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace mcdm
