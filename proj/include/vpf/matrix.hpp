#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace vpf {

namespace detail {

// Visit all k-subsets of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& visit) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(const_cast<const std::vector<int>&>(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

// Determinant of a square integer matrix given by columns; Bareiss
// fraction-free elimination, all divisions exact.
inline Integer det_cols(const std::vector<IntVec>& cols) {
  int s = static_cast<int>(cols.size());
  std::vector<IntVec> a(s, IntVec(s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) a[i][j] = cols[j][i];
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < s; ++k) {
    int piv = k;
    while (piv < s && a[piv][k] == 0) ++piv;
    if (piv == s) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < s; ++i)
      for (int j = k + 1; j < s; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[s - 1][s - 1] : -a[s - 1][s - 1];
}

inline int rank_cols(const std::vector<IntVec>& cols, int s) {
  int n = static_cast<int>(cols.size());
  std::vector<IntVec> a(s, IntVec(n));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = cols[j][i];
  int rank = 0;
  for (int col = 0; col < n && rank < s; ++col) {
    int piv = rank;
    while (piv < s && a[piv][col] == 0) ++piv;
    if (piv == s) continue;
    std::swap(a[piv], a[rank]);
    for (int i = rank + 1; i < s; ++i) {
      if (a[i][col] == 0) continue;
      Integer g = gcd(a[i][col], a[rank][col]);
      Integer fi = a[rank][col] / g, fr = a[i][col] / g;
      for (int j = col; j < n; ++j) a[i][j] = a[i][j] * fi - a[rank][j] * fr;
    }
    ++rank;
  }
  return rank;
}

// Solve A x = rhs for square A given by columns, over the rationals.
inline RatVec solve_square(const std::vector<IntVec>& cols, const RatVec& rhs) {
  int s = static_cast<int>(cols.size());
  std::vector<RatVec> a(s, RatVec(s + 1, Rational(0)));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) a[i][j] = Rational(cols[j][i]);
    a[i][s] = rhs[i];
  }
  for (int k = 0; k < s; ++k) {
    int piv = k;
    while (piv < s && a[piv][k].is_zero()) ++piv;
    if (piv == s) throw singular_system_error("linear system is singular");
    std::swap(a[piv], a[k]);
    Rational inv = Rational(1) / a[k][k];
    for (int j = k; j <= s; ++j) a[k][j] *= inv;
    for (int i = 0; i < s; ++i) {
      if (i == k || a[i][k].is_zero()) continue;
      Rational f = a[i][k];
      for (int j = k; j <= s; ++j) a[i][j] -= f * a[k][j];
    }
  }
  RatVec x(s);
  for (int i = 0; i < s; ++i) x[i] = a[i][s];
  return x;
}

inline void make_primitive(IntVec& v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  if (g == 0) return;
  for (auto& c : v) c /= g;
  for (const auto& c : v) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& d : v) d = -d;
    break;
  }
}

// Primitive normals, canonical sign, of all hyperplanes spanned by s-1 of
// the given columns.  For s = 1 the single hyperplane is the origin.
inline std::vector<IntVec> hyperplane_normals(int s, const std::vector<IntVec>& cols) {
  std::set<IntVec> seen;
  int n = static_cast<int>(cols.size());
  for_each_subset(n, s - 1, [&](const std::vector<int>& idx) {
    // Generalized cross product: entry i is +/- the minor that drops row i.
    IntVec normal(s);
    for (int i = 0; i < s; ++i) {
      std::vector<IntVec> minor;
      minor.reserve(idx.size());
      for (int j : idx) {
        IntVec trimmed;
        trimmed.reserve(s - 1);
        for (int r = 0; r < s; ++r)
          if (r != i) trimmed.push_back(cols[j][r]);
        minor.push_back(std::move(trimmed));
      }
      Integer d = minor.empty() ? Integer(1) : det_cols(minor);
      normal[i] = (i % 2) ? -d : d;
    }
    bool zero = true;
    for (const auto& c : normal)
      if (c != 0) zero = false;
    if (zero) return;
    make_primitive(normal);
    seen.insert(std::move(normal));
  });
  return {seen.begin(), seen.end()};
}

inline Integer dot(const IntVec& a, const IntVec& b) {
  Integer r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

}  // namespace detail

// Which columns a character fixes (theta^m = 1) and which it does not.
struct CharacterData {
  Character theta;
  std::vector<int> fixed;
  std::vector<int> complement;
};

// Integer matrix with the column conventions used throughout: s rows,
// n >= s columns, no zero column, full row rank, and all columns strictly
// on one side of some hyperplane (the cone they span is pointed).
class IntMatrix {
 public:
  IntMatrix(int s, std::vector<IntVec> cols) : s_(s), cols_(std::move(cols)) {
    n_ = static_cast<int>(cols_.size());
    if (s_ < 1) throw error("matrix needs at least one row");
    if (n_ < s_) throw error("matrix needs at least as many columns as rows");
    for (const auto& c : cols_) {
      if (static_cast<int>(c.size()) != s_)
        throw error("matrix column has wrong length");
      bool zero = true;
      for (const auto& v : c)
        if (v != 0) zero = false;
      if (zero) throw error("matrix columns must be nonzero");
    }
    if (detail::rank_cols(cols_, s_) != s_)
      throw error("matrix columns must span the full space");
    functional_ = find_positive_functional();
  }

  static IntMatrix from_columns(int s, std::vector<IntVec> cols) {
    return IntMatrix(s, std::move(cols));
  }

  static IntMatrix from_rows(const std::vector<IntVec>& rows) {
    if (rows.empty()) throw error("matrix needs at least one row");
    int s = static_cast<int>(rows.size());
    int n = static_cast<int>(rows[0].size());
    for (const auto& r : rows)
      if (static_cast<int>(r.size()) != n)
        throw error("matrix rows must have equal length");
    std::vector<IntVec> cols(n, IntVec(s));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < n; ++j) cols[j][i] = rows[i][j];
    return IntMatrix(s, std::move(cols));
  }

  int s() const { return s_; }
  int n() const { return n_; }
  const std::vector<IntVec>& columns() const { return cols_; }
  const IntVec& column(int j) const { return cols_[j]; }

  std::vector<IntVec> rows_data() const {
    std::vector<IntVec> rows(s_, IntVec(n_));
    for (int i = 0; i < s_; ++i)
      for (int j = 0; j < n_; ++j) rows[i][j] = cols_[j][i];
    return rows;
  }

  std::vector<IntVec> columns_subset(const std::vector<int>& idx) const {
    std::vector<IntVec> out;
    out.reserve(idx.size());
    for (int j : idx) out.push_back(cols_[j]);
    return out;
  }

  Integer subset_det(const std::vector<int>& idx) const {
    return detail::det_cols(columns_subset(idx));
  }

  // Index sets of all column bases (s-subsets with nonzero determinant).
  std::vector<std::vector<int>> bases() const {
    std::vector<std::vector<int>> out;
    detail::for_each_subset(n_, s_, [&](const std::vector<int>& idx) {
      if (subset_det(idx) != 0) out.push_back(idx);
    });
    return out;
  }

  // gcd of |det| over all bases; scales truncated-power values to volumes.
  Integer gcd_dets() const {
    Integer g = 0;
    for (const auto& b : bases()) g = gcd(g, abs(subset_det(b)));
    return g;
  }

  // lcm of |det| over all bases; the common order of all characters.
  Integer lcm_dets() const {
    Integer l = 1;
    for (const auto& b : bases()) l = lcm(l, abs(subset_det(b)));
    return l;
  }

  // A matrix is k-prime when every spanning (s+k)-subset of its columns has
  // coprime maximal minors.
  bool is_k_prime(int k) const {
    if (k < 0) throw error("k-prime check needs k >= 0");
    bool ok = true;
    detail::for_each_subset(n_, s_ + k, [&](const std::vector<int>& idx) {
      if (!ok) return;
      auto sub = columns_subset(idx);
      if (detail::rank_cols(sub, s_) != s_) return;
      Integer g = 0;
      detail::for_each_subset(static_cast<int>(idx.size()), s_,
                              [&](const std::vector<int>& inner) {
                                std::vector<IntVec> sq;
                                sq.reserve(inner.size());
                                for (int t : inner) sq.push_back(sub[t]);
                                g = gcd(g, detail::det_cols(sq));
                              });
      if (g != 1) ok = false;
    });
    return ok;
  }

  // A vector with strictly positive pairing against every column.
  const IntVec& positive_functional() const { return functional_; }

  // Integer points of the half-open parallelepiped spanned by the given
  // vectors: all L with L = sum t_i v_i, t in [0,1)^s.
  static std::vector<IntVec> parallelepiped_points(const std::vector<IntVec>& vs) {
    int s = static_cast<int>(vs.size());
    IntVec lo(s, 0), hi(s, 0);
    for (const auto& v : vs)
      for (int i = 0; i < s; ++i) {
        if (v[i] < 0) lo[i] += v[i];
        if (v[i] > 0) hi[i] += v[i];
      }
    std::vector<IntVec> out;
    IntVec cur(s);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == s) {
        RatVec t = detail::solve_square(vs, to_rat_vec(cur));
        for (const auto& ti : t)
          if (ti.sign() < 0 || ti >= Rational(1)) return;
        out.push_back(cur);
        return;
      }
      for (Integer v = lo[pos]; v <= hi[pos]; ++v) {
        cur[pos] = v;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
    return out;
  }

  // All characters theta of finite order with theta^m = 1 on a full-rank
  // subset of columns, together with their fixed column sets.  Every basis Y
  // contributes the solutions of theta^y = 1 for its columns y; these are
  // indexed by the integer points of the half-open parallelepiped of Y^T.
  std::vector<CharacterData> characters() const {
    int64_t bigN = lcm_dets().convert_to<int64_t>();
    std::set<std::vector<int64_t>> seen;
    for (const auto& bidx : bases()) {
      auto y = columns_subset(bidx);
      // Rows of Y are the columns of Y^T.
      std::vector<IntVec> yt(s_, IntVec(s_));
      for (int i = 0; i < s_; ++i)
        for (int j = 0; j < s_; ++j) yt[i][j] = y[j][i];
      for (const auto& pt : parallelepiped_points(yt)) {
        RatVec t = detail::solve_square(yt, to_rat_vec(pt));
        std::vector<int64_t> a(s_);
        for (int i = 0; i < s_; ++i) {
          Rational scaled = t[i] * Rational(bigN);
          Integer ai = scaled.to_integer() % bigN;
          if (ai < 0) ai += bigN;
          a[i] = ai.convert_to<int64_t>();
        }
        seen.insert(std::move(a));
      }
    }
    std::vector<CharacterData> out;
    out.reserve(seen.size());
    for (const auto& a : seen) {
      Character theta(bigN, a);
      CharacterData cd{theta, {}, {}};
      for (int j = 0; j < n_; ++j) {
        if (theta.pairing(cols_[j]) == 0)
          cd.fixed.push_back(j);
        else
          cd.complement.push_back(j);
      }
      out.push_back(std::move(cd));
    }
    return out;
  }

 private:
  IntVec find_positive_functional() const {
    auto positive_on_all = [&](const IntVec& f) {
      for (const auto& c : cols_)
        if (detail::dot(f, c) <= 0) return false;
      return true;
    };
    // One-sided arrangement normals lie in the dual cone; their sum is
    // interior whenever the column cone is pointed.
    IntVec sum(s_, 0);
    for (auto nu : detail::hyperplane_normals(s_, cols_)) {
      int pos = 0, neg = 0;
      for (const auto& c : cols_) {
        int sg = detail::dot(nu, c).sign();
        if (sg > 0) ++pos;
        if (sg < 0) ++neg;
      }
      if (pos && neg) continue;
      if (neg)
        for (auto& v : nu) v = -v;
      for (int i = 0; i < s_; ++i) sum[i] += nu[i];
    }
    if (positive_on_all(sum)) return sum;
    IntVec colsum(s_, 0);
    for (const auto& c : cols_)
      for (int i = 0; i < s_; ++i) colsum[i] += c[i];
    if (positive_on_all(colsum)) return colsum;
    for (int t = 1; t <= 2 * s_ + 2; ++t) {
      IntVec cand = sum;
      for (int i = 0; i < s_; ++i) cand[i] += Integer(t) * colsum[i];
      if (positive_on_all(cand)) return cand;
    }
    throw error("matrix columns must span a pointed cone (no positive functional)");
  }

  int s_;
  int n_;
  std::vector<IntVec> cols_;
  IntVec functional_;
};

}  // namespace vpf
