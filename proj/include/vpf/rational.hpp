#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace vpf {

using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  return boost::multiprecision::lcm(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

// Arbitrary-precision rational, always in lowest terms with positive
// denominator.  Thin wrapper over boost::multiprecision::cpp_rational: the
// backend keeps the canonical form, the wrapper owns construction from
// non-canonical numerator/denominator pairs (the backend's two-argument
// constructor aborts on those), parsing, and printing.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(n) {}              // NOLINT: implicit by design
  Rational(const Integer& n) : v_(n) {}         // NOLINT
  Rational(const Integer& num, const Integer& den) : v_(num) {
    if (den == 0) throw error("rational with zero denominator");
    v_ /= boost::multiprecision::cpp_rational(den);
  }

  // Accepts "p" or "p/q" with optional leading '-' on either part.
  static Rational parse(std::string_view s) {
    auto bad = [&] { return error("malformed rational '" + std::string(s) + "'"); };
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s, bad));
    return Rational(parse_int(s.substr(0, slash), bad),
                    parse_int(s.substr(slash + 1), bad));
  }

  Integer num() const { return boost::multiprecision::numerator(v_); }
  Integer den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return den() == 1; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  Integer to_integer() const {
    if (!is_integer()) throw error("rational " + str() + " is not an integer");
    return num();
  }

  // Largest integer <= value.  cpp_int division truncates toward zero.
  Integer floor() const {
    Integer q = num() / den();
    if (v_ < 0 && q * den() != num()) --q;
    return q;
  }

  std::string str() const { return v_.str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  template <class Bad>
  static Integer parse_int(std::string_view t, Bad&& bad) {
    if (t.empty()) throw bad();
    size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw bad();
    for (size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9') throw bad();
    return Integer(std::string(t));
  }

  boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& a) { return a < 0 ? -a : a; }

inline Rational pow(const Rational& base, int e) {
  if (e < 0) return Rational(1) / pow(base, -e);
  Rational r(1), b = base;
  for (; e; e >>= 1, b *= b)
    if (e & 1) r *= b;
  return r;
}

inline Integer pow(const Integer& base, int e) {
  Integer r(1), b = base;
  for (; e; e >>= 1, b *= b)
    if (e & 1) r *= b;
  return r;
}

inline Integer factorial(int n) {
  Integer r(1);
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

inline RatVec to_rat_vec(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

}  // namespace vpf
