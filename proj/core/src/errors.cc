#include "mcdm/errors.h"

namespace mcdm {

ParseError::ParseError(std::size_t row, std::size_t column, const std::string& what)
    : Error("row " + std::to_string(row) + ", column " + std::to_string(column) +
            ": " + what),
      row_(row),
      column_(column) {}

}  // namespace mcdm
