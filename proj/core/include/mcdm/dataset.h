#ifndef MCDM_DATASET_H_
#define MCDM_DATASET_H_

#include <array>
#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mcdm/diagnostics.h"
#include "mcdm/matrix.h"

namespace mcdm {

inline constexpr double kMinRating = 0.0;
inline constexpr double kMaxRating = 4.0;

// Display names of the ten categories in the public travel-review dataset,
// in file column order ("Category 1" .. "Category 10").
inline constexpr std::array<std::string_view, 10> kTravelCategoryNames = {
    "Art Galleries", "Dance Clubs",        "Juice Bars", "Restaurants",
    "Museums",       "Resorts",            "Parks/Picnic Spots",
    "Beaches",       "Theaters",           "Religious Institutions"};

// Alternatives x reviewers. Row i holds every reviewer's rating of
// alternative i.
class ReviewMatrix {
 public:
  // Throws StructureError or RangeError when the invariants do not hold:
  // n >= 2, R >= 1, unique non-empty names, every rating in [0, 4].
  ReviewMatrix(std::vector<std::string> alternatives, Matrix values);

  const std::vector<std::string>& alternatives() const { return alternatives_; }
  const Matrix& values() const { return values_; }
  std::size_t alternative_count() const { return values_.rows(); }
  std::size_t reviewer_count() const { return values_.cols(); }

 private:
  std::vector<std::string> alternatives_;
  Matrix values_;
};

// One non-negative score per alternative, in alternative order.
struct ScoreVector {
  std::vector<std::string> alternatives;
  std::vector<double> scores;
};

enum class RatingCategory { kTerrible, kPoor, kAverage, kVeryGood, kExcellent };

std::string_view ToString(RatingCategory category);

struct LoadOptions {
  char delimiter = ',';
  // 1-based rating-column index -> display name. Overrides header names.
  std::map<std::size_t, std::string> names;
};

// Reads a header line followed by one row per reviewer. The first field of
// every row is the reviewer id and is ignored; the remaining fields are
// ratings, one column per alternative. Header cells of the form
// "Category <k>" (1 <= k <= 10) map to kTravelCategoryNames.
ReviewMatrix LoadReviews(std::istream& source, const LoadOptions& options = {});

// Parses "index=name" lines. Blank lines and lines starting with '#' are
// skipped.
std::map<std::size_t, std::string> ParseNamesConfig(std::istream& source);

ScoreVector CategoryMeans(const ReviewMatrix& reviews);

// Divides every column by its maximum, r_ij = x_ij / max_i x_ij. A column
// whose maximum is zero stays zero and produces one warning.
Matrix Normalize(const Matrix& m, Diagnostics* diag = nullptr);

// Normalize applied to the scores viewed as a single column.
ScoreVector Normalize(const ScoreVector& s, Diagnostics* diag = nullptr);

// Terrible = {0}; Poor (0,1]; Average (1,2]; VeryGood (2,3]; Excellent (3,4].
RatingCategory ClassifyRating(double rating);

}  // namespace mcdm

#endif  // MCDM_DATASET_H_
