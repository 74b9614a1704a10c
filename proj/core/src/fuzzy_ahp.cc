#include "mcdm/fuzzy_ahp.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "mcdm/errors.h"

namespace mcdm {
namespace {

constexpr std::array<Tfn, 9> kScale = {{
    {1.0, 1.0, 1.0},
    {1.0 / 2.0, 3.0 / 4.0, 1.0},
    {2.0 / 3.0, 1.0, 3.0 / 2.0},
    {1.0, 3.0 / 2.0, 2.0},
    {3.0 / 2.0, 2.0, 5.0 / 2.0},
    {2.0, 5.0 / 2.0, 3.0},
    {5.0 / 2.0, 3.0, 7.0 / 2.0},
    {3.0, 7.0 / 2.0, 4.0},
    {7.0 / 2.0, 4.0, 9.0 / 2.0},
}};

constexpr double kInverseTolerance = 1e-12;

bool Near(const Tfn& a, const Tfn& b, double tol) {
  return std::abs(a.l - b.l) <= tol && std::abs(a.m - b.m) <= tol &&
         std::abs(a.u - b.u) <= tol;
}

}  // namespace

void Validate(const Tfn& t) {
  if (!std::isfinite(t.l) || !std::isfinite(t.m) || !std::isfinite(t.u)) {
    throw InputError("TFN components must be finite");
  }
  if (!(t.l <= t.m && t.m <= t.u)) throw InputError("TFN requires l <= m <= u");
}

Tfn operator+(const Tfn& a, const Tfn& b) { return {a.l + b.l, a.m + b.m, a.u + b.u}; }

Tfn Inverse(const Tfn& t) {
  if (!(t.l > 0.0)) throw InputError("TFN inverse requires l > 0");
  return {1.0 / t.u, 1.0 / t.m, 1.0 / t.l};
}

Tfn SaatyToTfn(int intensity) {
  if (intensity < 1 || intensity > 9) {
    throw RangeError("Saaty intensity must be in 1..9, got " + std::to_string(intensity));
  }
  return kScale[static_cast<std::size_t>(intensity - 1)];
}

int CrispIntensity(double ratio) {
  if (!std::isfinite(ratio)) throw InputError("intensity ratio is not finite");
  const double rounded = std::floor(ratio + 0.5);
  return static_cast<int>(std::clamp(rounded, 1.0, 9.0));
}

FuzzyPairwiseMatrix::FuzzyPairwiseMatrix(std::vector<std::string> names,
                                         std::vector<Tfn> entries)
    : names_(std::move(names)), entries_(std::move(entries)) {
  const std::size_t n = names_.size();
  if (entries_.size() != n * n) throw InputError("fuzzy matrix must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (!((*this)(i, i) == Tfn{1.0, 1.0, 1.0})) {
      throw InputError("fuzzy matrix diagonal must be (1, 1, 1)");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      Validate((*this)(i, j));
      Validate((*this)(j, i));
      if (!Near((*this)(j, i), Inverse((*this)(i, j)), kInverseTolerance)) {
        throw InputError("fuzzy matrix is not reciprocal at (" + std::to_string(i + 1) +
                         ", " + std::to_string(j + 1) + ")");
      }
    }
  }
}

FuzzyPairwiseMatrix BuildFuzzyPairwise(const PairwiseMatrix& p) {
  const std::size_t n = p.size();
  std::vector<Tfn> f(n * n, Tfn{1.0, 1.0, 1.0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = p(i, j);
      const Tfn upper = a >= 1.0 ? SaatyToTfn(CrispIntensity(a))
                                 : Inverse(SaatyToTfn(CrispIntensity(1.0 / a)));
      f[i * n + j] = upper;
      f[j * n + i] = Inverse(upper);
    }
  }
  return FuzzyPairwiseMatrix(p.names(), std::move(f));
}

std::vector<Tfn> SyntheticExtents(const FuzzyPairwiseMatrix& f) {
  const std::size_t n = f.size();
  std::vector<Tfn> row_sums(n);
  Tfn total;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row_sums[i] = row_sums[i] + f(i, j);
    total = total + row_sums[i];
  }
  if (!(total.l > 0.0)) throw InputError("fuzzy matrix grand total must be positive");
  const Tfn inv_total = Inverse(total);
  std::vector<Tfn> extents(n);
  for (std::size_t i = 0; i < n; ++i) {
    extents[i] = {row_sums[i].l * inv_total.l, row_sums[i].m * inv_total.m,
                  row_sums[i].u * inv_total.u};
  }
  return extents;
}

double DegreeOfPossibility(const Tfn& m2, const Tfn& m1) {
  if (m2.m >= m1.m) return 1.0;
  if (m1.l >= m2.u) return 0.0;
  const double denominator = (m2.m - m2.u) - (m1.m - m1.l);
  if (denominator == 0.0) return 0.0;
  return std::clamp((m1.l - m2.u) / denominator, 0.0, 1.0);
}

std::vector<double> FuzzyWeights(const std::vector<Tfn>& extents, Diagnostics* diag) {
  const std::size_t n = extents.size();
  if (n < 2) throw InputError("fuzzy weights need at least 2 extents");
  std::vector<double> d(n, std::numeric_limits<double>::infinity());
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) d[i] = std::min(d[i], DegreeOfPossibility(extents[i], extents[j]));
    }
    total += d[i];
  }
  if (total == 0.0) {
    Warn(diag, "fuzzy AHP: every possibility degree is zero; using uniform weights");
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
  }
  for (double& x : d) x /= total;
  return d;
}

WeightVector FuzzyWeights(const FuzzyPairwiseMatrix& f, Diagnostics* diag) {
  return WeightVector{f.names(), FuzzyWeights(SyntheticExtents(f), diag)};
}

}  // namespace mcdm
