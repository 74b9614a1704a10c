#ifndef MCDM_FUZZY_AHP_H_
#define MCDM_FUZZY_AHP_H_

#include <cstddef>
#include <string>
#include <vector>

#include "mcdm/ahp.h"
#include "mcdm/diagnostics.h"

namespace mcdm {

// Triangular fuzzy number (l, m, u) with l <= m <= u.
struct Tfn {
  double l = 0.0;
  double m = 0.0;
  double u = 0.0;

  friend bool operator==(const Tfn&, const Tfn&) = default;
};

// Throws InputError unless l <= m <= u and all three are finite.
void Validate(const Tfn& t);

Tfn operator+(const Tfn& a, const Tfn& b);

// (1/u, 1/m, 1/l). Throws InputError when l <= 0.
Tfn Inverse(const Tfn& t);

// Fuzzy comparison scale for crisp intensities 1..9:
//   1 (1,1,1)       2 (1/2,3/4,1)   3 (2/3,1,3/2)
//   4 (1,3/2,2)     5 (3/2,2,5/2)   6 (2,5/2,3)
//   7 (5/2,3,7/2)   8 (3,7/2,4)     9 (7/2,4,9/2)
// Throws RangeError outside 1..9.
Tfn SaatyToTfn(int intensity);

// Nearest integer in 1..9, halves rounded up.
int CrispIntensity(double ratio);

class FuzzyPairwiseMatrix {
 public:
  // Requires a unit diagonal and f(j,i) == Inverse(f(i,j)) (within 1e-12).
  FuzzyPairwiseMatrix(std::vector<std::string> names, std::vector<Tfn> entries);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  const Tfn& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * names_.size() + j];
  }

 private:
  std::vector<std::string> names_;
  std::vector<Tfn> entries_;
};

// Upper triangle: a(i,j) >= 1 maps to SaatyToTfn(CrispIntensity(a)),
// a(i,j) < 1 maps to Inverse(SaatyToTfn(CrispIntensity(1/a))). The lower
// triangle holds the exact inverses.
FuzzyPairwiseMatrix BuildFuzzyPairwise(const PairwiseMatrix& p);

// Fuzzy synthetic extents S_i = (row sum of f) * (grand total)^-1.
std::vector<Tfn> SyntheticExtents(const FuzzyPairwiseMatrix& f);

// V(m2 >= m1):
//   1                                      if m2.m >= m1.m
//   0                                      if m1.l >= m2.u
//   (m1.l - m2.u) / ((m2.m - m2.u) - (m1.m - m1.l))   otherwise
double DegreeOfPossibility(const Tfn& m2, const Tfn& m1);

// d_i = min_{j != i} V(S_i >= S_j), normalized to sum 1. Falls back to
// uniform weights (with a warning) if every d_i is zero.
std::vector<double> FuzzyWeights(const std::vector<Tfn>& extents,
                                 Diagnostics* diag = nullptr);

// Full chain: fuzzy matrix -> extents -> weights.
WeightVector FuzzyWeights(const FuzzyPairwiseMatrix& f, Diagnostics* diag = nullptr);

}  // namespace mcdm

#endif  // MCDM_FUZZY_AHP_H_
