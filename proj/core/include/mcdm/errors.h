#ifndef MCDM_ERRORS_H_
#define MCDM_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcdm {

// Base class for every error raised by the library. The CLI maps all of
// these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cell could not be read as a number. Row and column are 1-based and
// count the header line and the reviewer-id column.
class ParseError : public Error {
 public:
  ParseError(std::size_t row, std::size_t column, const std::string& what);
  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

// Ragged rows, too few columns, no data rows, duplicate names.
class StructureError : public Error {
 public:
  using Error::Error;
};

// A value lies outside its admissible interval (ratings, table indices).
class RangeError : public Error {
 public:
  using Error::Error;
};

// Arguments that are finite but mathematically unusable (non-positive TFN
// lower bound, mismatched lengths, all-zero scores).
class InputError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> last_iterate)
      : Error(what), last_iterate_(std::move(last_iterate)) {}
  const std::vector<double>& last_iterate() const { return last_iterate_; }

 private:
  std::vector<double> last_iterate_;
};

}  // namespace mcdm

#endif  // MCDM_ERRORS_H_
