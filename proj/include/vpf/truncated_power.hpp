#pragma once

#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace vpf {

// Value of the truncated power T(x|M): the (n-s)-volume of
// {beta >= 0 : M beta = x}, normalized so that for square M it is
// 1/|det M| on the open cone.  Computed by the downward recurrence
//   (n - s) T(x|M) = sum_j lambda_j T(x|M minus column j)
// valid for any representation x = sum_j lambda_j m_j.
//
// x must avoid every arrangement hyperplane of M.  That is stricter than
// the recursion strictly needs, but it guarantees every node below is
// clean: representations never put weight on a degenerate subset, and
// columns dropped from a spanning set either still span or their cone
// misses x entirely.
//
// column_order, when given, permutes the greedy choice of representation
// basis; the result does not depend on it.
inline Rational truncated_power(const IntMatrix& m, const RatVec& x,
                                std::vector<int> column_order = {}) {
  int n = m.n(), s = m.s();
  if (n > 63) throw error("truncated power supports up to 63 columns");
  Arrangement arr = arrangement(m);
  if (sign_vector(arr, x).find('0') != std::string::npos)
    throw non_generic_error("point lies on an arrangement hyperplane");
  if (column_order.empty()) {
    column_order.resize(n);
    std::iota(column_order.begin(), column_order.end(), 0);
  }
  std::unordered_map<uint64_t, Rational> memo;
  auto rec = [&](auto&& self, uint64_t mask, int count) -> Rational {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    // Greedy basis among active columns, in the requested order.
    std::vector<int> basis;
    std::vector<IntVec> bcols;
    for (int j : column_order) {
      if (!((mask >> j) & 1)) continue;
      bcols.push_back(m.column(j));
      if (detail::rank_cols(bcols, s) == static_cast<int>(bcols.size()))
        basis.push_back(j);
      else
        bcols.pop_back();
      if (static_cast<int>(basis.size()) == s) break;
    }
    Rational result(0);
    if (static_cast<int>(basis.size()) < s) {
      // Active columns span a proper subspace; x is off it by genericity.
      memo.emplace(mask, result);
      return result;
    }
    RatVec lambda = detail::solve_square(bcols, x);
    if (count == s) {
      bool inside = true;
      for (const auto& l : lambda)
        if (l.sign() <= 0) inside = false;
      if (inside) result = Rational(1) / Rational(abs(detail::det_cols(bcols)));
    } else {
      for (int i = 0; i < s; ++i) {
        if (lambda[i].is_zero()) continue;
        result += lambda[i] * self(self, mask & ~(uint64_t(1) << basis[i]), count - 1);
      }
      result /= Rational(count - s);
    }
    memo.emplace(mask, result);
    return result;
  };
  return rec(rec, (uint64_t(1) << n) - 1, n);
}

// The homogeneous polynomial of degree n-s that T(.|M) restricts to on the
// chamber of the witness, recovered by sampling near the witness and
// interpolating.  The witness must be generic for the arrangement of M; all
// samples provably stay in its chamber.
inline RPoly truncated_power_polynomial(const IntMatrix& m, const RatVec& witness) {
  int s = m.s(), d = m.n() - m.s();
  Arrangement arr = arrangement(m);
  Rational least(0);
  Integer widest = 1;
  for (const auto& nu : arr.normals) {
    Rational v = abs(dot(nu, witness));
    if (v.is_zero())
      throw non_generic_error("witness lies on an arrangement hyperplane");
    if (least.is_zero() || v < least) least = v;
    widest = std::max(widest, detail::one_norm(nu));
  }
  Rational delta = least / Rational(2 * widest);
  size_t dim = monomials_of_degree(s, d).size();
  std::vector<std::pair<RatVec, Rational>> samples;
  samples.emplace_back(witness, truncated_power(m, witness));
  std::vector<std::vector<int>> offsets;
  {
    std::vector<int> step(s, -1);
    while (true) {
      bool all_zero = true;
      for (int v : step)
        if (v) all_zero = false;
      if (!all_zero) offsets.push_back(step);
      int pos = 0;
      while (pos < s && step[pos] == 1) step[pos++] = -1;
      if (pos == s) break;
      ++step[pos];
    }
  }
  size_t want = dim + 2;
  size_t oi = 0;
  int k = 1;
  for (int round = 0; round < 8; ++round) {
    while (samples.size() < want) {
      if (oi == offsets.size()) {
        oi = 0;
        ++k;
      }
      RatVec p = witness;
      for (int i = 0; i < s; ++i)
        p[i] += delta * Rational(offsets[oi][i]) / Rational(k);
      samples.emplace_back(p, truncated_power(m, p));
      ++oi;
    }
    try {
      return interpolate_homogeneous(s, d, samples);
    } catch (const singular_system_error&) {
      want += dim;  // degenerate sample configuration; widen the net
    }
  }
  throw singular_system_error("could not assemble a full-rank interpolation system");
}

}  // namespace vpf
