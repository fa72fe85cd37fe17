#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "quasi.hpp"
#include "rational.hpp"
#include "truncated_power.hpp"

namespace vpf {

// T(.|M) extended continuously from generic points to the whole cone:
// points on walls are evaluated through the polynomial of a chamber whose
// closure contains them.
inline Rational truncated_power_at(const IntMatrix& m, const RatVec& x) {
  try {
    return truncated_power(m, x);
  } catch (const non_generic_error&) {
  }
  auto chs = chambers_containing(m, x);
  if (chs.empty()) throw error("no chamber closure contains the point (internal error)");
  return truncated_power_polynomial(m, chs.front().witness).evaluate(x);
}

// t(alpha|M) through the quasi-polynomial formula.  On walls every
// containing chamber is evaluated and the values are required to agree.
inline Integer count_by_formula(const IntMatrix& m, const IntVec& alpha) {
  RatVec x = to_rat_vec(alpha);
  std::vector<Chamber> chs;
  try {
    chs = chambers_containing(m, x);
  } catch (const outside_cone_error&) {
    return 0;
  }
  if (chs.empty()) throw error("no chamber closure contains the point (internal error)");
  bool first = true;
  Integer value = 0;
  for (const auto& ch : chs) {
    Integer v = quasi_polynomial(m, ch).evaluate(alpha);
    if (first) {
      value = v;
      first = false;
    } else if (v != value) {
      throw error("chamber closures disagree at a wall point (internal error)");
    }
  }
  return value;
}

// Relative volume of the polytope {beta >= 0 : M beta = b}: the gcd of the
// basis determinants times the truncated power at b.
inline Rational relative_volume(const IntMatrix& m, const RatVec& b) {
  if (!cone_interior_contains(m, b))
    throw error("degenerate polytope: the target is not interior to the column cone");
  return Rational(m.gcd_dets()) * truncated_power_at(m, b);
}

// Full-dimensional volume of {x >= 0 : Ax <= b}, computed as the truncated
// power of A with slack columns appended.
inline Rational polytope_volume(const IntMatrix& a, const RatVec& b) {
  std::vector<IntVec> cols = a.columns();
  for (int i = 0; i < a.s(); ++i) {
    IntVec e(a.s(), 0);
    e[i] = 1;
    cols.push_back(std::move(e));
  }
  std::optional<IntMatrix> m;
  try {
    m.emplace(a.s(), std::move(cols));
  } catch (const error&) {
    // The slack-extended cone is pointed exactly when the polytope is
    // bounded for every b.
    throw error("polytope {x >= 0 : Ax <= b} is unbounded");
  }
  if (!cone_interior_contains(*m, b))
    throw error("degenerate polytope: the target is not interior to the column cone");
  return truncated_power_at(*m, b);
}

// Counting function of dilations g -> #{beta >= 0 : M beta = g b} as a
// quasi-polynomial in g with purely rational per-residue coefficients.
struct EhrhartQP {
  int degree = 0;
  int64_t period = 1;
  // coeffs[i][rho] multiplies g^i when g = rho (mod period).
  std::vector<std::vector<Rational>> coeffs;

  Rational value_at(const Integer& g) const {
    Integer rho = g % period;
    if (rho < 0) rho += period;
    size_t idx = rho.convert_to<size_t>();
    Rational acc(0);
    Rational gp(1);
    for (int i = 0; i <= degree; ++i) {
      acc += coeffs[i][idx] * gp;
      gp *= Rational(g);
    }
    return acc;
  }
};

inline EhrhartQP ehrhart(const IntMatrix& m, const IntVec& b,
                         const std::optional<Chamber>& chamber = std::nullopt) {
  RatVec x = to_rat_vec(b);
  if (!cone_interior_contains(m, x))
    throw error("dilation target must be interior to the column cone");
  Chamber ch = chamber ? *chamber : chambers_containing(m, x).front();
  if (chamber && !in_closure(m, ch, x))
    throw error("supplied chamber closure does not contain the target");
  QuasiPolynomial qp = quasi_polynomial(m, ch);
  int d = m.n() - m.s();
  int64_t bigN = qp.modulus;
  // Each part contributes zeta^{g <a,b>} sum_i gamma_i g^i with
  // gamma_i = sum_{|u|=i} c_u b^u.
  struct Term {
    int64_t e;
    std::vector<Cyclo> gamma;
  };
  std::vector<Term> terms;
  int64_t p0 = 1;
  for (const auto& [theta, poly] : qp.parts) {
    if (poly.is_zero()) continue;
    Term t{theta.pairing(b),
           std::vector<Cyclo>(d + 1, Cyclo::from_rational(Rational(0), bigN))};
    for (const auto& [u, c] : poly.terms()) {
      Rational mono(1);
      for (int i = 0; i < m.s(); ++i)
        for (int k = 0; k < u[i]; ++k) mono *= Rational(b[i]);
      t.gamma[mi_degree(u)] += c * mono;
    }
    p0 = std::lcm(p0, bigN / std::gcd(bigN, t.e));
    terms.push_back(std::move(t));
  }
  std::vector<std::vector<Rational>> table(d + 1, std::vector<Rational>(p0, Rational(0)));
  for (int64_t rho = 0; rho < p0; ++rho) {
    for (int i = 0; i <= d; ++i) {
      std::vector<Rational> acc(bigN, Rational(0));
      for (const auto& t : terms) {
        if (t.gamma[i].is_zero()) continue;
        int64_t shift = (t.e % bigN) * (rho % bigN) % bigN;
        const auto& cs = t.gamma[i].coeffs();
        for (size_t idx = 0; idx < cs.size(); ++idx)
          if (!cs[idx].is_zero())
            acc[(static_cast<int64_t>(idx) + shift) % bigN] += cs[idx];
      }
      table[i][rho] = Cyclo(bigN, std::move(acc)).to_rational();
    }
  }
  // The raw period divides p0; report the least divisor that already works.
  int64_t period = p0;
  for (int64_t p : detail::divisors(p0)) {
    bool ok = true;
    for (int i = 0; i <= d && ok; ++i)
      for (int64_t rho = 0; rho < p0 && ok; ++rho)
        if (table[i][rho] != table[i][rho % p]) ok = false;
    if (ok) {
      period = p;
      break;
    }
  }
  EhrhartQP out;
  out.degree = d;
  out.period = period;
  out.coeffs.assign(d + 1, {});
  for (int i = 0; i <= d; ++i)
    out.coeffs[i].assign(table[i].begin(), table[i].begin() + period);
  return out;
}

// K_n: compositions of n whose prefix sums dominate 1,2,...,n-1.
inline std::vector<std::vector<int>> dominant_compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> k(n);
  auto rec = [&](auto&& self, int pos, int sum) -> void {
    if (pos == n - 1) {
      k[pos] = n - sum;
      out.push_back(k);
      return;
    }
    // Prefix dominance now, and enough mass left to reach n.
    for (int v = std::max(0, pos + 1 - sum); sum + v <= n; ++v) {
      k[pos] = v;
      self(self, pos + 1, sum + v);
    }
  };
  if (n >= 1) rec(rec, 0, 0);
  return out;
}

// Volume of the n-th parking-function polytope in two ways: as a truncated
// power over the staircase matrix with slack columns, and by the closed-form
// sum over dominant compositions.  The two must agree.
inline std::pair<Rational, Rational> pitman_stanley(const RatVec& x) {
  int n = static_cast<int>(x.size());
  if (n < 1) throw error("need at least one coordinate");
  for (const auto& xi : x)
    if (xi.sign() <= 0) throw error("coordinates must be positive");
  Rational closed(0);
  for (const auto& k : dominant_compositions(n)) {
    Rational term(1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < k[i]; ++j) term *= x[i];
      term /= Rational(factorial(k[i]));
    }
    closed += term;
  }
  // Staircase columns: column i has ones in rows i..n-1.
  std::vector<IntVec> cols;
  for (int i = 0; i < n; ++i) {
    IntVec c(n, 0);
    for (int h = i; h < n; ++h) c[h] = 1;
    cols.push_back(std::move(c));
  }
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    cols.push_back(std::move(e));
  }
  IntMatrix m(n, std::move(cols));
  RatVec b(n);
  Rational run(0);
  for (int i = 0; i < n; ++i) {
    run += x[i];
    b[i] = run;
  }
  Rational via_power = truncated_power_at(m, b);
  if (via_power != closed)
    throw error("volume computations disagree (internal error)");
  return {via_power, closed};
}

namespace detail {

inline Integer mod_inverse(Integer a, const Integer& m) {
  // Extended Euclid; m >= 1, gcd(a, m) = 1.
  if (m == 1) return 0;
  a %= m;
  if (a < 0) a += m;
  Integer r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw error("modular inverse of a non-unit");
  if (t0 < 0) t0 += m;
  return t0;
}

// {x/m}: fractional part of x/m with x integer, m positive.
inline Rational fractional(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return Rational(r, m);
}

}  // namespace detail

// #{(u, v) >= 0 : au + bv = n} for coprime a, b, by the closed two-term
// fractional-part formula.
inline Integer popoviciu(const Integer& a, const Integer& b, const Integer& n) {
  if (a < 1 || b < 1) throw error("moduli must be positive");
  if (gcd(a, b) != 1) throw error("moduli must be coprime");
  if (n < 0) throw error("target must be nonnegative");
  Integer binv = detail::mod_inverse(b, a);
  Integer ainv = detail::mod_inverse(a, b);
  Rational v = Rational(n, a * b) - detail::fractional(binv * n, a) -
               detail::fractional(ainv * n, b) + Rational(1);
  Integer out = v.to_integer();
  if (out < 0) throw error("negative count (internal error)");
  return out;
}

// Both sides of the root-of-unity expansion of the fractional part:
//   -{t/a} = (1-a)/(2a) + (1/a) sum_{k=1}^{a-1} zeta_a^{tk} / (1 - zeta_a^{-k}).
inline std::pair<Rational, Rational> fractional_part_identity(const Integer& t, int64_t a) {
  if (a < 1) throw error("modulus must be positive");
  Rational lhs = -detail::fractional(t, a);
  Cyclo acc = Cyclo::from_rational(Rational(0), a);
  for (int64_t k = 1; k < a; ++k) {
    Cyclo num = Cyclo::root_of_unity(a, t * k);
    Cyclo den = Cyclo::one(a) - Cyclo::root_of_unity(a, -k);
    acc += num * den.inverse();
  }
  Rational rhs = Rational(1 - a, 2 * a) + acc.to_rational() / Rational(a);
  return {lhs, rhs};
}

}  // namespace vpf
