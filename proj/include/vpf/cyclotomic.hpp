#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace vpf {

inline int64_t euler_phi(int64_t n) {
  int64_t phi = 1;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    phi *= p - 1;
    while (n % p == 0) {
      n /= p;
      phi *= p;
    }
  }
  if (n > 1) phi *= n - 1;
  return phi;
}

namespace detail {

inline std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> lo, hi;
  for (int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
  return lo;
}

// Exact division of integer polynomials, divisor monic.  Ascending coeffs.
inline std::vector<Integer> int_poly_div_exact(std::vector<Integer> num,
                                               const std::vector<Integer>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<Integer> q(dn - dd + 1);
  for (int i = dn; i >= dd; --i) {
    Integer c = num[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw error("inexact polynomial division");
  return q;
}

}  // namespace detail

// Coefficients of the N-th cyclotomic polynomial, ascending, cached.
inline const std::vector<Integer>& cyclotomic_polynomial(int64_t n) {
  if (n < 1) throw error("cyclotomic polynomial needs modulus >= 1");
  static std::map<int64_t, std::shared_ptr<const std::vector<Integer>>> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return *it->second;
  // x^n - 1 divided by the product of all lower cyclotomic factors.
  std::vector<Integer> poly(n + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (int64_t d : detail::divisors(n))
    if (d != n) poly = detail::int_poly_div_exact(poly, cyclotomic_polynomial(d));
  auto entry = std::make_shared<const std::vector<Integer>>(std::move(poly));
  cache.emplace(n, entry);
  return *entry;
}

// Element of the cyclotomic field Q(zeta_N) in the power basis
// 1, z, ..., z^{phi(N)-1} of Q[z]/Phi_N(z).  Coefficients are exact
// rationals; the stored vector always has length phi(N).
class Cyclo {
 public:
  Cyclo() : n_(1), c_(1) {}

  static Cyclo from_rational(const Rational& q, int64_t n = 1) {
    Cyclo x;
    x.n_ = n;
    x.c_.assign(euler_phi(n), Rational(0));
    x.c_[0] = q;
    return x;
  }

  static Cyclo one(int64_t n = 1) { return from_rational(Rational(1), n); }

  // zeta_N^k for any integer k (reduced mod N).
  static Cyclo root_of_unity(int64_t n, const Integer& k) {
    if (n < 1) throw error("root of unity needs modulus >= 1");
    Integer e = k % n;
    if (e < 0) e += n;
    std::vector<Rational> raw(static_cast<size_t>(e.convert_to<int64_t>()) + 1);
    raw.back() = Rational(1);
    return Cyclo(n, std::move(raw));
  }
  static Cyclo root_of_unity(int64_t n, int64_t k) {
    return root_of_unity(n, Integer(k));
  }

  // Raw coefficients of any degree are accepted; exponents fold mod N first
  // (valid since Phi_N divides z^N - 1) and the rest reduces mod Phi_N.
  Cyclo(int64_t n, std::vector<Rational> raw) : n_(n) {
    std::vector<Rational> folded(n_, Rational(0));
    for (size_t i = 0; i < raw.size(); ++i) {
      if (!raw[i].is_zero()) folded[i % n_] += raw[i];
    }
    const auto& phi = cyclotomic_polynomial(n_);
    int dp = static_cast<int>(phi.size()) - 1;
    for (int i = static_cast<int>(folded.size()) - 1; i >= dp; --i) {
      if (folded[i].is_zero()) continue;
      Rational c = folded[i];
      folded[i] = Rational(0);
      for (int j = 0; j < dp; ++j) folded[i - dp + j] -= c * Rational(phi[j]);
    }
    folded.resize(dp);
    c_ = std::move(folded);
  }

  int64_t modulus() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }

  // The power basis represents rationals uniquely as (c, 0, ..., 0).
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }

  Rational to_rational() const {
    if (!is_rational())
      throw not_rational_error("cyclotomic value is not rational: " + str());
    return c_[0];
  }

  Cyclo lifted(int64_t m) const {
    if (m == n_) return *this;
    if (m % n_) throw error("cyclotomic lift target must be a multiple of the modulus");
    int64_t step = m / n_;
    std::vector<Rational> raw(static_cast<size_t>((n_ - 1) * step) + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
    return Cyclo(m, std::move(raw));
  }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = Cyclo::common(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = Cyclo::common(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }
  friend Cyclo operator-(const Cyclo& a) {
    Cyclo r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = Cyclo::common(a, b);
    std::vector<Rational> conv(2 * x.c_.size(), Rational(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i].is_zero()) continue;
      for (size_t j = 0; j < y.c_.size(); ++j) {
        if (y.c_[j].is_zero()) continue;
        conv[i + j] += x.c_[i] * y.c_[j];
      }
    }
    return Cyclo(x.n_, std::move(conv));
  }
  friend Cyclo operator*(const Cyclo& a, const Rational& s) {
    Cyclo r = a;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  friend Cyclo operator*(const Rational& s, const Cyclo& a) { return a * s; }
  friend Cyclo operator/(const Cyclo& a, const Rational& s) {
    if (s.is_zero()) throw error("cyclotomic division by zero scalar");
    Cyclo r = a;
    for (auto& c : r.c_) c /= s;
    return r;
  }

  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo& operator*=(const Rational& s) { return *this = *this * s; }

  // Multiplicative inverse via the extended Euclidean algorithm against
  // Phi_N, which is irreducible over Q, so any nonzero residue is a unit.
  Cyclo inverse() const {
    if (is_zero()) throw error("cyclotomic division by zero");
    const auto& phi_int = cyclotomic_polynomial(n_);
    std::vector<Rational> r0(phi_int.begin(), phi_int.end());
    std::vector<Rational> r1 = c_;
    trim(r1);
    // Invariant: u_i * (*this) == r_i (mod Phi_N).  No need to track the
    // Phi_N cofactor.  Remainders are rescaled monic to tame growth.
    std::vector<Rational> u0{Rational(0)}, u1{Rational(1)};
    while (!r1.empty()) {
      Rational lead = r1.back();
      if (lead != Rational(1)) {
        for (auto& c : r1) c /= lead;
        for (auto& c : u1) c /= lead;
      }
      auto [q, r2] = divmod(r0, r1);
      std::vector<Rational> u2 = u0;
      // u2 -= q * u1
      u2.resize(std::max(u2.size(), q.size() + u1.size() - 1), Rational(0));
      for (size_t i = 0; i < q.size(); ++i) {
        if (q[i].is_zero()) continue;
        for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
      }
      trim(u2);
      r0 = std::move(r1);
      u0 = std::move(u1);
      r1 = std::move(r2);
      u1 = std::move(u2);
    }
    if (r0.size() != 1)
      throw error("cyclotomic inverse: residue shares a factor with the modulus");
    std::vector<Rational> res = u0;
    for (auto& c : res) c /= r0[0];
    return Cyclo(n_, std::move(res));
  }

  Cyclo pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo r = Cyclo::one(n_), b = *this;
    for (; e; e >>= 1, b *= b)
      if (e & 1) r *= b;
    return r;
  }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = Cyclo::common(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  std::string str() const {
    std::string out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!first) out += " + ";
      out += c_[i].str();
      if (i > 0) out += "*z" + std::to_string(n_) + "^" + std::to_string(i);
      first = false;
    }
    return first ? "0" : out;
  }

 private:
  static std::pair<Cyclo, Cyclo> common(const Cyclo& a, const Cyclo& b) {
    if (a.n_ == b.n_) return {a, b};
    int64_t m = std::lcm(a.n_, b.n_);
    return {a.lifted(m), b.lifted(m)};
  }

  static void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  }

  // Polynomial division over Q, ascending coefficients, divisor monic.
  static std::pair<std::vector<Rational>, std::vector<Rational>> divmod(
      std::vector<Rational> num, const std::vector<Rational>& den) {
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<Rational> q;
    if (static_cast<int>(num.size()) - 1 >= dd)
      q.assign(num.size() - dd, Rational(0));
    for (int i = static_cast<int>(num.size()) - 1; i >= dd; --i) {
      if (num[i].is_zero()) continue;
      Rational c = num[i];
      q[i - dd] = c;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    trim(num);
    return {std::move(q), std::move(num)};
  }

  int64_t n_;
  std::vector<Rational> c_;
};

// Character of Z^s given by exponents a mod N: alpha -> zeta_N^{<a, alpha>}.
class Character {
 public:
  Character(int64_t n, std::vector<int64_t> a) : n_(n) {
    if (n < 1) throw error("character modulus must be >= 1");
    a_.reserve(a.size());
    for (int64_t v : a) a_.push_back(((v % n) + n) % n);
  }

  int64_t modulus() const { return n_; }
  const std::vector<int64_t>& exponents() const { return a_; }
  size_t dim() const { return a_.size(); }

  bool is_identity() const {
    for (int64_t v : a_)
      if (v) return false;
    return true;
  }

  Character lifted(int64_t m) const {
    if (m == n_) return *this;
    if (m % n_) throw error("character lift target must be a multiple of the modulus");
    int64_t step = m / n_;
    std::vector<int64_t> a = a_;
    for (auto& v : a) v *= step;
    return Character(m, std::move(a));
  }

  // Exponent of zeta_N produced by pairing with an integer vector.
  int64_t pairing(const IntVec& w) const {
    if (w.size() != a_.size()) throw error("character pairing dimension mismatch");
    Integer k = 0;
    for (size_t i = 0; i < w.size(); ++i) k += Integer(a_[i]) * w[i];
    k %= n_;
    if (k < 0) k += n_;
    return k.convert_to<int64_t>();
  }

  Cyclo pow(const IntVec& w) const { return Cyclo::root_of_unity(n_, pairing(w)); }

  // Order as a group element: the least g >= 1 with all a_i * g = 0 mod N.
  int64_t order() const {
    int64_t o = 1;
    for (int64_t v : a_)
      if (v) o = std::lcm(o, n_ / std::gcd(n_, v));
    return o;
  }

  friend bool operator==(const Character& x, const Character& y) {
    int64_t m = std::lcm(x.n_, y.n_);
    return x.lifted(m).a_ == y.lifted(m).a_;
  }
  friend bool operator!=(const Character& x, const Character& y) { return !(x == y); }

 private:
  int64_t n_;
  std::vector<int64_t> a_;
};

}  // namespace vpf
