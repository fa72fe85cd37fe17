#pragma once

#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace vpf {

// Reference counter for t(alpha|M) = #{beta >= 0 integer : M beta = alpha},
// by depth-first search over beta.  Deliberately simple; the formula side of
// the library is tested against this.
//
// The functional must pair strictly positively with every column; it bounds
// each coordinate and prunes unreachable residuals.
inline Integer brute_count(int s, const std::vector<IntVec>& cols,
                           const IntVec& alpha, const IntVec& functional) {
  int n = static_cast<int>(cols.size());
  IntVec weight(n);
  for (int j = 0; j < n; ++j) weight[j] = detail::dot(functional, cols[j]);
  Integer count = 0;
  IntVec residual = alpha;
  auto rec = [&](auto&& self, int j, const Integer& budget) -> void {
    if (j == n - 1) {
      // Last column: beta_j is forced if it exists.
      const IntVec& c = cols[j];
      Integer q = -1;
      for (int i = 0; i < s; ++i) {
        if (c[i] == 0) {
          if (residual[i] != 0) return;
          continue;
        }
        if (residual[i] % c[i] != 0) return;
        Integer qi = residual[i] / c[i];
        if (qi < 0) return;
        if (q >= 0 && qi != q) return;
        q = qi;
      }
      // q = -1 would need an all-zero column, which the matrix invariants
      // exclude.
      if (q >= 0) ++count;
      return;
    }
    Integer top = budget / weight[j];
    for (Integer b = 0; b <= top; ++b) {
      if (b > 0)
        for (int i = 0; i < s; ++i) residual[i] -= cols[j][i];
      self(self, j + 1, budget - b * weight[j]);
    }
    for (int i = 0; i < s; ++i) residual[i] += top * cols[j][i];
  };
  Integer budget = detail::dot(functional, alpha);
  if (budget < 0) return 0;
  rec(rec, 0, budget);
  return count;
}

inline Integer brute_count(const IntMatrix& m, const IntVec& alpha) {
  return brute_count(m.s(), m.columns(), alpha, m.positive_functional());
}

// Count for the dilated target g*b; the Ehrhart counting function of
// {beta >= 0 : M beta = b} evaluated by force.
inline Integer brute_dilate_count(const IntMatrix& m, const IntVec& b, const Integer& g) {
  IntVec gb(b.size());
  for (size_t i = 0; i < b.size(); ++i) gb[i] = g * b[i];
  return brute_count(m, gb);
}

}  // namespace vpf
