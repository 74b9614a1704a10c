#include "mcdm/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <string>

#include "mcdm/errors.h"

namespace mcdm {
namespace {

std::string_view Trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Split(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      fields.push_back(Trim(line.substr(start)));
      return fields;
    }
    fields.push_back(Trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
}

std::string Unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(Trim(s));
}

// "Category 7" -> 7, anything else -> 0.
std::size_t CategoryNumber(std::string_view header) {
  constexpr std::string_view kPrefix = "Category";
  if (header.substr(0, kPrefix.size()) != kPrefix) return 0;
  const auto digits = Trim(header.substr(kPrefix.size()));
  std::size_t k = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return 0;
  return k;
}

}  // namespace

std::string_view ToString(RatingCategory category) {
  switch (category) {
    case RatingCategory::kTerrible: return "Terrible";
    case RatingCategory::kPoor: return "Poor";
    case RatingCategory::kAverage: return "Average";
    case RatingCategory::kVeryGood: return "Very Good";
    case RatingCategory::kExcellent: return "Excellent";
  }
  return "?";
}

ReviewMatrix::ReviewMatrix(std::vector<std::string> alternatives, Matrix values)
    : alternatives_(std::move(alternatives)), values_(std::move(values)) {
  if (alternatives_.size() != values_.rows()) {
    throw StructureError("alternative count does not match matrix rows");
  }
  if (values_.rows() < 2) {
    throw StructureError("at least 2 alternatives are required, got " +
                         std::to_string(values_.rows()));
  }
  if (values_.cols() < 1) throw StructureError("at least 1 reviewer is required");
  std::set<std::string> seen;
  for (const auto& name : alternatives_) {
    if (name.empty()) throw StructureError("alternative names must be non-empty");
    if (!seen.insert(name).second) {
      throw StructureError("duplicate alternative name '" + name + "'");
    }
  }
  for (std::size_t i = 0; i < values_.rows(); ++i) {
    for (std::size_t j = 0; j < values_.cols(); ++j) {
      const double v = values_(i, j);
      if (!(v >= kMinRating && v <= kMaxRating)) {
        throw RangeError("rating " + std::to_string(v) + " for '" + alternatives_[i] +
                         "' (reviewer " + std::to_string(j + 1) + ") is outside [0, 4]");
      }
    }
  }
}

ReviewMatrix LoadReviews(std::istream& source, const LoadOptions& options) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string_view> header;
  std::string header_line;
  while (std::getline(source, line)) {
    ++line_no;
    if (!Trim(line).empty()) {
      header_line = line;
      break;
    }
  }
  if (header_line.empty()) throw StructureError("input is empty (no header row)");
  if (header_line.starts_with("\xEF\xBB\xBF")) header_line.erase(0, 3);
  header = Split(header_line, options.delimiter);
  const std::size_t width = header.size();
  if (width < 3) {
    throw StructureError("need a reviewer-id column and at least 2 rating columns, got " +
                         std::to_string(width) + " column(s)");
  }
  const std::size_t n = width - 1;

  std::vector<std::string> names(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::string h = Unquote(header[k + 1]);
    const std::size_t category = CategoryNumber(h);
    if (category >= 1 && category <= kTravelCategoryNames.size()) {
      h = std::string(kTravelCategoryNames[category - 1]);
    }
    names[k] = std::move(h);
  }
  for (const auto& [index, name] : options.names) {
    if (index < 1 || index > n) {
      throw RangeError("names config index " + std::to_string(index) +
                       " is outside 1.." + std::to_string(n));
    }
    names[index - 1] = name;
  }

  std::vector<double> flat;  // reviewer-major
  std::size_t reviewers = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto fields = Split(line, options.delimiter);
    if (fields.size() != width) {
      throw StructureError("row " + std::to_string(line_no) + " has " +
                           std::to_string(fields.size()) + " fields, expected " +
                           std::to_string(width));
    }
    for (std::size_t k = 1; k < width; ++k) {
      const auto cell = fields[k];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() ||
          !std::isfinite(v)) {
        throw ParseError(line_no, k + 1, "'" + std::string(cell) + "' is not a number");
      }
      if (v < kMinRating || v > kMaxRating) {
        throw RangeError("row " + std::to_string(line_no) + ", column " +
                         std::to_string(k + 1) + ": rating " + std::string(cell) +
                         " is outside [0, 4]");
      }
      flat.push_back(v);
    }
    ++reviewers;
  }
  if (reviewers == 0) throw StructureError("no data rows after the header");

  Matrix values(n, reviewers);
  for (std::size_t r = 0; r < reviewers; ++r)
    for (std::size_t k = 0; k < n; ++k) values(k, r) = flat[r * n + k];
  return ReviewMatrix(std::move(names), std::move(values));
}

std::map<std::size_t, std::string> ParseNamesConfig(std::istream& source) {
  std::map<std::size_t, std::string> names;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    const auto text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, 1, "expected index=name");
    }
    const auto key = Trim(text.substr(0, eq));
    const auto value = Trim(text.substr(eq + 1));
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
    if (key.empty() || ec != std::errc() || ptr != key.data() + key.size()) {
      throw ParseError(line_no, 1, "'" + std::string(key) + "' is not a column index");
    }
    if (value.empty()) throw ParseError(line_no, eq + 2, "empty name");
    names[index] = std::string(value);
  }
  return names;
}

ScoreVector CategoryMeans(const ReviewMatrix& reviews) {
  const Matrix& m = reviews.values();
  ScoreVector out{reviews.alternatives(), std::vector<double>(m.rows(), 0.0)};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double sum = 0.0;
    for (double v : m.row(i)) sum += v;
    out.scores[i] = sum / static_cast<double>(m.cols());
  }
  return out;
}

Matrix Normalize(const Matrix& m, Diagnostics* diag) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (double v : m.row(i)) {
      if (!std::isfinite(v) || v < 0.0) {
        throw InputError("normalize: entries must be finite and non-negative");
      }
    }
  }
  Matrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double max = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) max = std::max(max, m(i, j));
    if (max == 0.0) {
      Warn(diag, "normalize: column " + std::to_string(j + 1) +
                     " is all zero; left as zeros");
      continue;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, j) / max;
  }
  return out;
}

ScoreVector Normalize(const ScoreVector& s, Diagnostics* diag) {
  Matrix column(s.scores.size(), 1);
  for (std::size_t i = 0; i < s.scores.size(); ++i) column(i, 0) = s.scores[i];
  return ScoreVector{s.alternatives, Normalize(column, diag).column(0)};
}

RatingCategory ClassifyRating(double rating) {
  if (!(rating >= kMinRating && rating <= kMaxRating)) {
    throw RangeError("rating " + std::to_string(rating) + " is outside [0, 4]");
  }
  if (rating == 0.0) return RatingCategory::kTerrible;
  if (rating <= 1.0) return RatingCategory::kPoor;
  if (rating <= 2.0) return RatingCategory::kAverage;
  if (rating <= 3.0) return RatingCategory::kVeryGood;
  return RatingCategory::kExcellent;
}

}  // namespace mcdm
