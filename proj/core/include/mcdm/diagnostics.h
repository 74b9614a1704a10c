#ifndef MCDM_DIAGNOSTICS_H_
#define MCDM_DIAGNOSTICS_H_

#include <string>
#include <vector>

namespace mcdm {

// Collects non-fatal warnings (clamped ratios, floored scores, degenerate
// columns, uniform fallbacks). Library calls accept an optional pointer;
// passing nullptr discards the warnings.
struct Diagnostics {
  std::vector<std::string> warnings;

  void Warn(std::string message) { warnings.push_back(std::move(message)); }
  void Append(const Diagnostics& other) {
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
  }
};

inline void Warn(Diagnostics* diag, std::string message) {
  if (diag != nullptr) diag->Warn(std::move(message));
}

}  // namespace mcdm

#endif  // MCDM_DIAGNOSTICS_H_
