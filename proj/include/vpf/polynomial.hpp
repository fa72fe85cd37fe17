#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace vpf {

// Exponent vector of a monomial; entry i is the power of variable i.
using MultiIndex = std::vector<int>;

inline int mi_degree(const MultiIndex& u) {
  int d = 0;
  for (int e : u) d += e;
  return d;
}

// All exponent vectors in s variables of total degree d, lexicographic.
inline std::vector<MultiIndex> monomials_of_degree(int s, int d) {
  std::vector<MultiIndex> out;
  MultiIndex cur(s);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == s - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  if (s == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

// Sparse multivariate polynomial with exact coefficients.  The coefficient
// ring C needs ring ops, is_zero(), and construction from Rational via the
// coeff_cast specialization below.
template <class C>
class MPoly {
 public:
  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<MultiIndex, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int total_degree() const {
    int d = 0;
    for (const auto& [u, c] : terms_) d = std::max(d, mi_degree(u));
    return d;
  }

  void add_term(const MultiIndex& u, const C& c) {
    if (static_cast<int>(u.size()) != nvars_)
      throw error("polynomial term has wrong variable count");
    auto it = terms_.find(u);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(u, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  C coefficient(const MultiIndex& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? C() : it->second;
  }

  C evaluate(const RatVec& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw error("polynomial evaluation dimension mismatch");
    C acc{};
    for (const auto& [u, c] : terms_) {
      Rational mono(1);
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < u[i]; ++k) mono *= point[i];
      acc += c * mono;
    }
    return acc;
  }
  C evaluate(const IntVec& point) const { return evaluate(to_rat_vec(point)); }

  MPoly scaled(const Rational& s) const {
    MPoly out(nvars_);
    if (s.is_zero()) return out;
    for (const auto& [u, c] : terms_) out.add_term(u, c * s);
    return out;
  }

  MPoly partial(int i) const {
    MPoly out(nvars_);
    for (const auto& [u, c] : terms_) {
      if (u[i] == 0) continue;
      MultiIndex v = u;
      v[i] -= 1;
      out.add_term(v, c * Rational(u[i]));
    }
    return out;
  }

  // Directional derivative sum_i v_i d/dx_i.
  MPoly dir_derivative(const RatVec& v) const {
    MPoly out(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      if (v[i].is_zero()) continue;
      for (const auto& [u, c] : terms_) {
        if (u[i] == 0) continue;
        MultiIndex w = u;
        w[i] -= 1;
        out.add_term(w, c * (v[i] * Rational(u[i])));
      }
    }
    return out;
  }
  MPoly dir_derivative(const IntVec& v) const { return dir_derivative(to_rat_vec(v)); }

  // D^u, iterated partials.
  MPoly d_pow(const MultiIndex& u) const {
    MPoly out = *this;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < u[i]; ++k) out = out.partial(i);
    return out;
  }

  MPoly homogeneous_component(int d) const {
    MPoly out(nvars_);
    for (const auto& [u, c] : terms_)
      if (mi_degree(u) == d) out.add_term(u, c);
    return out;
  }

  MPoly truncate_above(int d) const {
    MPoly out(nvars_);
    for (const auto& [u, c] : terms_)
      if (mi_degree(u) <= d) out.add_term(u, c);
    return out;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly out = a;
    for (const auto& [u, c] : b.terms_) out.add_term(u, c);
    return out;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly out = a;
    for (const auto& [u, c] : b.terms_) out.add_term(u, -c);
    return out;
  }
  friend MPoly operator-(const MPoly& a) {
    MPoly out(a.nvars_);
    for (const auto& [u, c] : a.terms_) out.add_term(u, -c);
    return out;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out(a.nvars_);
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) {
        MultiIndex w = u;
        for (int i = 0; i < a.nvars_; ++i) w[i] += v[i];
        out.add_term(w, cu * cv);
      }
    return out;
  }
  friend MPoly operator*(const MPoly& a, const C& s) {
    MPoly out(a.nvars_);
    if (s.is_zero()) return out;
    for (const auto& [u, c] : a.terms_) out.add_term(u, c * s);
    return out;
  }
  friend MPoly operator*(const C& s, const MPoly& a) { return a * s; }

  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }

  // Product with every term above total degree maxdeg discarded.
  MPoly mul_truncated(const MPoly& b, int maxdeg) const {
    MPoly out(nvars_);
    for (const auto& [u, cu] : terms_) {
      int du = mi_degree(u);
      if (du > maxdeg) continue;
      for (const auto& [v, cv] : b.terms_) {
        if (du + mi_degree(v) > maxdeg) continue;
        MultiIndex w = u;
        for (int i = 0; i < nvars_; ++i) w[i] += v[i];
        out.add_term(w, cu * cv);
      }
    }
    return out;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return (a - b).is_zero();
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  std::string str(const std::string& var = "x") const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [u, c] : terms_) {
      if (!first) out += " + ";
      out += "(" + coeff_str(c) + ")";
      for (int i = 0; i < nvars_; ++i) {
        if (u[i] == 0) continue;
        out += "*" + var + std::to_string(i + 1);
        if (u[i] > 1) out += "^" + std::to_string(u[i]);
      }
      first = false;
    }
    return out;
  }

 private:
  static std::string coeff_str(const Rational& c) { return c.str(); }
  static std::string coeff_str(const Cyclo& c) { return c.str(); }

  int nvars_;
  std::map<MultiIndex, C> terms_;
};

using RPoly = MPoly<Rational>;
using CPoly = MPoly<Cyclo>;

inline CPoly promote(const RPoly& p, int64_t modulus = 1) {
  CPoly out(p.nvars());
  for (const auto& [u, c] : p.terms())
    out.add_term(u, Cyclo::from_rational(c, modulus));
  return out;
}

// Fit a homogeneous polynomial of the given degree to point/value samples.
// Any number of samples >= the monomial count is accepted; surplus rows must
// be consistent with the fitted solution.
inline RPoly interpolate_homogeneous(
    int s, int degree, const std::vector<std::pair<RatVec, Rational>>& samples) {
  auto monos = monomials_of_degree(s, degree);
  size_t dim = monos.size();
  if (samples.size() < dim)
    throw error("interpolation needs at least as many samples as monomials");
  size_t rows = samples.size();
  std::vector<RatVec> m(rows, RatVec(dim + 1, Rational(0)));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t j = 0; j < dim; ++j) {
      Rational v(1);
      for (int i = 0; i < s; ++i)
        for (int k = 0; k < monos[j][i]; ++k) v *= samples[r].first[i];
      m[r][j] = v;
    }
    m[r][dim] = samples[r].second;
  }
  // Gaussian elimination; solve the square part, check leftover rows.
  size_t row = 0;
  std::vector<size_t> pivot_of_col(dim, SIZE_MAX);
  for (size_t col = 0; col < dim && row < rows; ++col) {
    size_t p = row;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[row], m[p]);
    Rational inv = Rational(1) / m[row][col];
    for (size_t j = col; j <= dim; ++j) m[row][j] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (size_t j = col; j <= dim; ++j) m[r][j] -= f * m[row][j];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  if (row < dim) throw singular_system_error("interpolation system is rank deficient");
  for (size_t r = row; r < rows; ++r)
    if (!m[r][dim].is_zero())
      throw inconsistent_samples_error("interpolation samples are inconsistent");
  RPoly out(s);
  for (size_t j = 0; j < dim; ++j) out.add_term(monos[j], m[pivot_of_col[j]][dim]);
  return out;
}

// Taylor data of the product over columns m of the series
//   sum_k (z . m)^k / (k+1)!
// truncated at the requested total degree.  entry(u) carries the alternating
// sign that the correction recurrences consume.
class TaylorTable {
 public:
  TaylorTable(int s, const std::vector<IntVec>& cols, int maxdeg) : series_(s) {
    series_.add_term(MultiIndex(s, 0), Rational(1));
    for (const auto& col : cols) {
      RPoly lin(s);
      for (int i = 0; i < s; ++i) {
        MultiIndex u(s, 0);
        u[i] = 1;
        lin.add_term(u, Rational(col[i]));
      }
      RPoly factor(s);
      RPoly power(s);
      power.add_term(MultiIndex(s, 0), Rational(1));
      for (int k = 0; k <= maxdeg; ++k) {
        factor += power * (Rational(1) / Rational(factorial(k + 1)));
        power = power.mul_truncated(lin, maxdeg);
      }
      series_ = series_.mul_truncated(factor, maxdeg);
    }
  }

  Rational entry(const MultiIndex& u) const {
    Rational c = series_.coefficient(u);
    return mi_degree(u) % 2 ? -c : c;
  }

  const RPoly& series() const { return series_; }

 private:
  RPoly series_;
};

inline TaylorTable box_taylor(int s, const std::vector<IntVec>& cols, int maxdeg) {
  return TaylorTable(s, cols, maxdeg);
}

}  // namespace vpf
