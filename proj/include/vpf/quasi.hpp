#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "truncated_power.hpp"

namespace vpf {

// s_j(x) = (-1)^j (x + 2^j x^2 + ... + (r-1)^j x^{r-1}).
inline Cyclo signed_power_sum(int j, int64_t r, const Cyclo& x) {
  Cyclo acc = Cyclo::from_rational(Rational(0), x.modulus());
  Cyclo xk = Cyclo::one(x.modulus());
  for (int64_t k = 1; k < r; ++k) {
    xk *= x;
    acc += xk * Rational(pow(Integer(k), j));
  }
  return j % 2 ? -acc : acc;
}

// Least r with (theta^m)^r = 1 for every column m outside the fixed set;
// 1 for the identity.
inline int64_t least_r(const IntMatrix& m, const CharacterData& cd) {
  int64_t r = 1;
  int64_t n = cd.theta.modulus();
  for (int j : cd.complement) {
    int64_t e = cd.theta.pairing(m.column(j));
    r = std::lcm(r, n / std::gcd(n, e));
  }
  return r;
}

namespace detail {

// Shared tail of the local-piece computations: from the graded base terms,
//   c_mu = base_mu - sum_{l<mu} sum_{|u|=mu-l} D^u c_l * entry(u).
template <class C>
std::vector<MPoly<C>> corrected_parts(std::vector<MPoly<C>> c, const TaylorTable& table) {
  if (c.empty()) return c;
  int s = c[0].nvars();
  for (size_t mu = 1; mu < c.size(); ++mu) {
    MPoly<C> acc = c[mu];
    for (size_t l = 0; l < mu; ++l) {
      for (const auto& u : monomials_of_degree(s, static_cast<int>(mu - l))) {
        Rational e = table.entry(u);
        if (e.is_zero()) continue;
        acc -= c[l].d_pow(u).scaled(e);
      }
    }
    c[mu] = std::move(acc);
  }
  return c;
}

}  // namespace detail

// Graded pieces p_0..p_{n-s} of the identity-character part of the
// partition quasi-polynomial on the chamber; p_mu is homogeneous of degree
// n-s-mu.  p_0 is the truncated-power polynomial of the chamber and the
// rest are corrections driven by the Taylor table of the column series.
inline std::vector<RPoly> polynomial_part(const IntMatrix& m, const Chamber& ch) {
  int d = m.n() - m.s();
  std::vector<RPoly> base(d + 1, RPoly(m.s()));
  base[0] = truncated_power_polynomial(m, ch.witness);
  TaylorTable table = box_taylor(m.s(), m.columns(), d);
  return detail::corrected_parts(std::move(base), table);
}

// Graded pieces of the part attached to one character theta, of degrees
// n-s-kappa-mu.  Zero throughout when the chamber is not inside the cone of
// the fixed columns.  Otherwise the base terms combine directional
// derivatives of the truncated power of the fixed columns with the
// signed power sums of theta at the complement columns; the corrections use
// the Taylor table of the matrix with complement columns scaled by r.
inline std::vector<CPoly> character_part(const IntMatrix& m, const Chamber& ch,
                                         const CharacterData& cd) {
  int s = m.s();
  int kappa = static_cast<int>(cd.complement.size());
  int d = m.n() - s - kappa;
  int64_t bigN = cd.theta.modulus();
  std::vector<CPoly> base(d + 1, CPoly(s));
  IntMatrix mtheta(s, m.columns_subset(cd.fixed));
  if (!cone_interior_contains(mtheta, ch.witness)) return base;
  RPoly tpoly = truncated_power_polynomial(mtheta, ch.witness);
  int64_t r = least_r(m, cd);
  std::vector<std::vector<Cyclo>> factors(kappa);
  for (int i = 0; i < kappa; ++i) {
    Cyclo x = Cyclo::root_of_unity(bigN, -cd.theta.pairing(m.column(cd.complement[i])));
    factors[i].reserve(d + 1);
    for (int j = 0; j <= d; ++j)
      factors[i].push_back(signed_power_sum(j + 1, r, x) *
                           (Rational(1) / Rational(factorial(j + 1))));
  }
  // Distribute derivative orders j_1..j_kappa over the complement columns.
  auto rec = [&](auto&& self, int i, int used, const RPoly& cur, const Cyclo& fac) -> void {
    if (i == kappa) {
      base[used] += promote(cur, bigN) * fac;
      return;
    }
    RPoly derived = cur;
    for (int j = 0; used + j <= d; ++j) {
      if (j > 0) {
        derived = derived.dir_derivative(m.column(cd.complement[i]));
        if (derived.is_zero()) break;
      }
      self(self, i + 1, used + j, derived, fac * factors[i][j]);
    }
  };
  rec(rec, 0, 0, tpoly, Cyclo::one(bigN));
  Rational scale = Rational(1) / pow(Rational(r), kappa);
  for (auto& b : base) b = b.scaled(scale);
  std::vector<IntVec> scaled_cols = m.columns();
  for (int j : cd.complement)
    for (auto& v : scaled_cols[j]) v *= r;
  TaylorTable table = box_taylor(s, scaled_cols, d);
  return detail::corrected_parts(std::move(base), table);
}

// The partition counting function on a chamber closure: a finite character
// sum alpha -> sum_theta theta^alpha p_theta(alpha) agreeing with t(.|M) at
// every lattice point of the closure.
struct QuasiPolynomial {
  int64_t modulus = 1;
  Chamber chamber;
  Arrangement arr;  // for the closure guard in evaluate
  std::vector<std::pair<Character, CPoly>> parts;

  // Character-weighted sum, accumulated in the group algebra of the N-th
  // roots (exponent residues mod N) with a single field reduction at the end.
  Cyclo sum_at(const IntVec& alpha) const {
    std::vector<Rational> acc(modulus, Rational(0));
    for (const auto& [theta, poly] : parts) {
      if (poly.is_zero()) continue;
      Cyclo v = poly.evaluate(alpha);
      if (v.modulus() != modulus) v = v.lifted(modulus);
      int64_t shift = theta.pairing(alpha);
      const auto& c = v.coeffs();
      for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero())
          acc[(static_cast<int64_t>(i) + shift) % modulus] += c[i];
    }
    return Cyclo(modulus, std::move(acc));
  }

  // Unguarded evaluation; meaningful wherever the character sum itself is,
  // e.g. for the reciprocity identity at negated arguments.
  Rational evaluate_raw(const IntVec& alpha) const { return sum_at(alpha).to_rational(); }

  // Guarded evaluation at a lattice point of the chamber closure, where the
  // value is the exact solution count.
  Integer evaluate(const IntVec& alpha) const {
    if (!in_closure(arr, chamber.signs, to_rat_vec(alpha)))
      throw error("point lies outside the chamber closure");
    Rational v = evaluate_raw(alpha);
    if (!v.is_integer())
      throw error("counting value is not an integer (internal error)");
    Integer out = v.to_integer();
    if (out < 0) throw error("counting value is negative (internal error)");
    return out;
  }
};

inline QuasiPolynomial quasi_polynomial(const IntMatrix& m, const Chamber& ch) {
  QuasiPolynomial qp;
  qp.modulus = m.lcm_dets().convert_to<int64_t>();
  qp.chamber = ch;
  qp.arr = arrangement(m);
  for (const auto& cd : m.characters()) {
    CPoly sum(m.s());
    for (auto& piece : character_part(m, ch, cd)) sum += piece;
    qp.parts.emplace_back(cd.theta, std::move(sum));
  }
  return qp;
}

// Shortcut assembly valid for 1-prime matrices: every character other than
// the identity fixes exactly s independent columns, so its part is the
// constant (1/|det M_theta|) prod_w 1/(1-theta^{-w}) on chambers inside
// cone(M_theta) and zero elsewhere.
inline QuasiPolynomial one_prime_quasi_polynomial(const IntMatrix& m, const Chamber& ch) {
  if (!m.is_k_prime(1))
    throw error("matrix is not 1-prime; use the general quasi-polynomial");
  QuasiPolynomial qp;
  qp.modulus = m.lcm_dets().convert_to<int64_t>();
  qp.chamber = ch;
  qp.arr = arrangement(m);
  for (const auto& cd : m.characters()) {
    CPoly part(m.s());
    if (cd.theta.is_identity()) {
      for (auto& piece : polynomial_part(m, ch)) part += promote(piece, qp.modulus);
    } else {
      if (static_cast<int>(cd.fixed.size()) != m.s())
        throw error("1-prime matrix with an oversized fixed set (internal error)");
      IntMatrix mtheta(m.s(), m.columns_subset(cd.fixed));
      if (cone_interior_contains(mtheta, ch.witness)) {
        Cyclo c = Cyclo::from_rational(
            Rational(1) / Rational(abs(detail::det_cols(mtheta.columns()))), qp.modulus);
        for (int j : cd.complement) {
          Cyclo root = Cyclo::root_of_unity(qp.modulus, -cd.theta.pairing(m.column(j)));
          c *= (Cyclo::one(qp.modulus) - root).inverse();
        }
        part.add_term(MultiIndex(m.s(), 0), c);
      }
    }
    qp.parts.emplace_back(cd.theta, std::move(part));
  }
  return qp;
}

}  // namespace vpf
