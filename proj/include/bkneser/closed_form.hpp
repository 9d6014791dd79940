#pragma once

#include <string>
#include <vector>

#include "bkneser/combinatorics.hpp"

namespace bkneser {

/// One (r, s, t) summand of the linear strand formula: r left vertices and s
/// right vertices whose common intersection has size t.
struct StrandTerm {
  int r = 0;
  int s = 0;
  int t = 0;
  BigNat value;
};

/// Summands of beta_{i,i+1}(H(m,k)) with r, s >= 1, r + s = i + 1 and
/// k <= t <= m - k. Zero summands are included.
std::vector<StrandTerm> betti_linear_terms(int m, int k, int i);

/// beta_{i,i+1}(R/I(H(m,k))) from the closed formula.
BigNat betti_linear(int m, int k, int i);

struct LinearStrand {
  int m = 0;
  int k = 0;
  std::vector<BigNat> values;  // values[i - 1] = beta_{i,i+1}
  int support_end = 0;         // largest i with a nonzero value, 0 if none

  std::string to_json() const;
  /// Header "i,beta" followed by one row per index.
  std::string to_csv() const;
};

/// Batch evaluation for i = 1 .. i_max sharing inclusion-exclusion counts.
LinearStrand linear_strand(int m, int k, int i_max);

}  // namespace bkneser
