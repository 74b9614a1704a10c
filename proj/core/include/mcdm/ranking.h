#ifndef MCDM_RANKING_H_
#define MCDM_RANKING_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcdm/ahp.h"
#include "mcdm/dataset.h"
#include "mcdm/diagnostics.h"

namespace mcdm {

enum class Method { kManual, kAhp, kFuzzyAhp };

// "manual", "ahp", "fuzzy_ahp".
std::string_view ToString(Method method);

enum class ScoreMode {
  kWeight,           // rank by method weights
  kWeightTimesMean,  // rank by weight * normalized mean, renormalized
};

struct RankingEntry {
  std::size_t rank = 0;
  std::size_t index = 0;  // position in the input alternative list
  std::string name;
  double weight = 0.0;
  double raw_score = 0.0;

  friend bool operator==(const RankingEntry&, const RankingEntry&) = default;
};

struct RankingReport {
  Method method = Method::kManual;
  std::vector<RankingEntry> entries;  // rank order
  std::optional<ConsistencyReport> consistency;
  std::optional<double> mse_vs_manual;

  bool flagged() const { return consistency && !consistency->consistent; }
};

// w_i = s_i / sum(s). Throws InputError for negative or all-zero scores.
WeightVector ManualBaseline(const ScoreVector& s);

// Stable descending sort by weight; equal weights keep input order. The
// raw scores, when given, are carried into the entries.
std::vector<RankingEntry> Rank(const WeightVector& w,
                               std::span<const double> raw_scores = {});

// (1/n) * sum (f_i - y_i)^2. Throws InputError on length mismatch or n = 0.
double Mse(std::span<const double> f, std::span<const double> y);

struct CompareOptions {
  std::vector<Method> methods = {Method::kManual, Method::kAhp, Method::kFuzzyAhp};
  ScoreMode score_mode = ScoreMode::kWeight;
  // Use max-normalized means for pairwise construction and scoring.
  bool normalize = true;
  double cr_threshold = kDefaultCrThreshold;
  PowerIterationOptions power_iteration;
};

// Manual baseline, AHP and fuzzy AHP on the same per-alternative means.
// Reports come back in the order of options.methods. Inconsistent AHP
// matrices are reported with a failing ConsistencyReport, never dropped.
std::vector<RankingReport> CompareMethods(const ReviewMatrix& data,
                                          const CompareOptions& options = {},
                                          Diagnostics* diag = nullptr);

// Same pipeline starting from precomputed means.
std::vector<RankingReport> CompareMethods(const ScoreVector& means,
                                          const CompareOptions& options = {},
                                          Diagnostics* diag = nullptr);

}  // namespace mcdm

#endif  // MCDM_RANKING_H_
