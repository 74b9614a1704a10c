#ifndef MCDM_AHP_H_
#define MCDM_AHP_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mcdm/dataset.h"
#include "mcdm/diagnostics.h"
#include "mcdm/matrix.h"

namespace mcdm {

inline constexpr double kSaatyMax = 9.0;
inline constexpr double kSaatyMin = 1.0 / 9.0;
inline constexpr double kScoreFloor = 1e-6;
inline constexpr double kDefaultCrThreshold = 0.1;

// Positive reciprocal comparison matrix: a(i,i) = 1 and
// a(j,i) * a(i,j) = 1 within 1e-9. Entry (i,j) says how strongly
// alternative i dominates alternative j.
class PairwiseMatrix {
 public:
  // Throws InputError if the matrix is not square, not positive, or not
  // reciprocal, or if the name count does not match.
  PairwiseMatrix(std::vector<std::string> names, Matrix a);

  const std::vector<std::string>& names() const { return names_; }
  const Matrix& values() const { return a_; }
  std::size_t size() const { return a_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return a_(i, j); }

 private:
  std::vector<std::string> names_;
  Matrix a_;
};

struct WeightVector {
  std::vector<std::string> names;
  std::vector<double> weights;
};

struct ConsistencyReport {
  double lambda_max = 0.0;
  std::size_t n = 0;
  double ci = 0.0;
  double ri = 0.0;
  double cr = 0.0;
  double threshold = kDefaultCrThreshold;
  bool consistent = true;
};

// a(i,j) = clamp(s_i / s_j, 1/9, 9). Scores below kScoreFloor are raised
// to it first. When a ratio leaves the Saaty range the pair is set to
// (9, 1/9) so reciprocity survives the clamp. Both events are reported
// through `diag`.
PairwiseMatrix BuildPairwise(const ScoreVector& s, Diagnostics* diag = nullptr);

// a(i,j) = w_i / w_j with no clamping. Always perfectly consistent.
PairwiseMatrix RatioMatrix(std::span<const std::string> names,
                           std::span<const double> weights);

struct PowerIterationOptions {
  double tolerance = 1e-10;
  int max_iterations = 1000;
};

struct EigenResult {
  WeightVector weights;
  double lambda_max = 0.0;
  int iterations = 0;
};

// Power iteration from the uniform vector, renormalized to sum 1 after each
// step. Stops when successive iterates differ by less than the tolerance in
// max-norm; lambda_max is the Rayleigh quotient of the final iterate.
// Throws ConvergenceError (carrying the last iterate) otherwise.
EigenResult PrincipalEigenvector(const PairwiseMatrix& p,
                                 const PowerIterationOptions& options = {});

// (lambda_max - n) / (n - 1); zero for n < 2.
double ConsistencyIndex(double lambda_max, std::size_t n);

// Saaty random index for 1 <= n <= 15. Throws RangeError otherwise.
double RandomIndex(std::size_t n);

struct ConsistencyRatio {
  double cr = 0.0;
  bool consistent = true;
};

// cr = ci / RandomIndex(n), or 0 when the random index is 0 (n <= 2).
ConsistencyRatio ComputeConsistencyRatio(double ci, std::size_t n,
                                         double threshold = kDefaultCrThreshold);

ConsistencyReport CheckConsistency(double lambda_max, std::size_t n,
                                   double threshold = kDefaultCrThreshold);

}  // namespace mcdm

#endif  // MCDM_AHP_H_
