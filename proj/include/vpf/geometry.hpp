#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace vpf {

// The hyperplanes spanned by column subsets of a matrix, as primitive
// normals with a canonical sign, sorted.  Chambers are the connected
// components of the complement; each is identified by its sign vector.
struct Arrangement {
  int dim = 0;
  std::vector<IntVec> normals;
};

inline Arrangement arrangement(const IntMatrix& m) {
  return {m.s(), detail::hyperplane_normals(m.s(), m.columns())};
}

inline Rational dot(const IntVec& a, const RatVec& b) {
  Rational r(0);
  for (size_t i = 0; i < a.size(); ++i) r += Rational(a[i]) * b[i];
  return r;
}

// One '+', '-' or '0' per arrangement normal.
inline std::string sign_vector(const Arrangement& arr, const RatVec& x) {
  std::string s;
  s.reserve(arr.normals.size());
  for (const auto& nu : arr.normals) {
    int sg = dot(nu, x).sign();
    s += sg > 0 ? '+' : sg < 0 ? '-' : '0';
  }
  return s;
}

// Arrangement normals with all columns weakly on the positive side, after
// orientation.  These are exactly the facet normals of the column cone, so
// they are its H-description.
inline std::vector<IntVec> support_normals(const IntMatrix& m) {
  std::vector<IntVec> out;
  for (auto nu : detail::hyperplane_normals(m.s(), m.columns())) {
    int pos = 0, neg = 0;
    for (const auto& c : m.columns()) {
      int sg = detail::dot(nu, c).sign();
      if (sg > 0) ++pos;
      if (sg < 0) ++neg;
    }
    if (pos && neg) continue;
    if (neg)
      for (auto& v : nu) v = -v;
    out.push_back(std::move(nu));
  }
  return out;
}

inline bool cone_contains(const IntMatrix& m, const RatVec& x) {
  for (const auto& nu : support_normals(m))
    if (dot(nu, x).sign() < 0) return false;
  return true;
}

inline bool cone_interior_contains(const IntMatrix& m, const RatVec& x) {
  for (const auto& nu : support_normals(m))
    if (dot(nu, x).sign() <= 0) return false;
  return true;
}

// An open region of the column cone cut out by the arrangement.  The truncated
// power restricts to a single homogeneous polynomial here, and the partition
// function to a single quasi-polynomial on the closure.
struct Chamber {
  RatVec witness;            // a point interior to the chamber
  std::string signs;         // sign vector of the witness
  std::vector<IntVec> rays;  // extreme rays when known (s <= 2), else empty
};

// Chamber of the point, which must be interior to one: strictly inside the
// column cone and off every arrangement hyperplane.
inline Chamber chamber_of(const IntMatrix& m, const RatVec& x) {
  for (const auto& nu : support_normals(m))
    if (dot(nu, x).sign() < 0)
      throw outside_cone_error("point lies outside the column cone");
  Arrangement arr = arrangement(m);
  std::string signs = sign_vector(arr, x);
  if (signs.find('0') != std::string::npos)
    throw wall_error("point lies on an arrangement hyperplane");
  return Chamber{x, signs, {}};
}

// Whether x lies in the closed chamber: each pairing is zero or agrees in
// sign with the chamber's sign vector.
inline bool in_closure(const Arrangement& arr, const std::string& signs, const RatVec& x) {
  for (size_t i = 0; i < arr.normals.size(); ++i) {
    int sg = dot(arr.normals[i], x).sign();
    if (sg == 0) continue;
    if ((sg > 0 ? '+' : '-') != signs[i]) return false;
  }
  return true;
}

inline bool in_closure(const IntMatrix& m, const Chamber& ch, const RatVec& x) {
  return in_closure(arrangement(m), ch.signs, x);
}

namespace detail {

inline Integer one_norm(const IntVec& v) {
  Integer r = 0;
  for (const auto& c : v) r += abs(c);
  return r;
}

inline Integer cross2(const IntVec& a, const IntVec& b) {
  return a[0] * b[1] - a[1] * b[0];
}

}  // namespace detail

// All chambers of the column cone, counterclockwise for s = 2.  Implemented
// for s <= 2 where the walls are exactly the rays through the columns.
inline std::vector<Chamber> enumerate_chambers(const IntMatrix& m) {
  Arrangement arr = arrangement(m);
  if (m.s() == 1) {
    IntVec ray = m.column(0);
    detail::make_primitive(ray);
    int sg = ray[0].sign();
    // Columns all share one sign; the cone is a half-line.
    RatVec witness{Rational(sg)};
    return {Chamber{witness, sign_vector(arr, witness), {ray}}};
  }
  if (m.s() != 2)
    throw error("chamber enumeration is implemented for s <= 2 only");
  std::set<std::vector<Integer>> dirset;
  for (auto c : m.columns()) {
    detail::make_primitive(c);
    dirset.insert(c);
  }
  std::vector<IntVec> dirs(dirset.begin(), dirset.end());
  // Pointed cone: all pairwise angles are below pi, so the cross product
  // comparator is a strict weak ordering.
  std::sort(dirs.begin(), dirs.end(), [](const IntVec& a, const IntVec& b) {
    return detail::cross2(a, b) > 0;
  });
  std::vector<Chamber> out;
  for (size_t i = 0; i + 1 < dirs.size(); ++i) {
    const IntVec& r1 = dirs[i];
    const IntVec& r2 = dirs[i + 1];
    IntVec w(2);
    for (int k = 0; k < 2; ++k)
      w[k] = r1[k] * detail::one_norm(r2) + r2[k] * detail::one_norm(r1);
    // No wall crosses the open sector between consecutive rays, so the
    // positive combination above is interior; the loop is insurance.
    RatVec witness = to_rat_vec(w);
    for (int attempt = 0; attempt < 16; ++attempt) {
      std::string signs = sign_vector(arr, witness);
      if (signs.find('0') == std::string::npos) {
        out.push_back(Chamber{witness, signs, {r1, r2}});
        break;
      }
      for (int k = 0; k < 2; ++k) witness[k] += Rational(r1[k]);
    }
  }
  return out;
}

// Chambers whose closure contains x, for callers that must tolerate points
// on walls.  Strictly interior points give their unique chamber.  For s <= 2
// every containing chamber is returned; for larger s one is found by nudging
// x off the walls it lies on.
inline std::vector<Chamber> chambers_containing(const IntMatrix& m, const RatVec& x) {
  if (!cone_contains(m, x))
    throw outside_cone_error("point lies outside the column cone");
  try {
    return {chamber_of(m, x)};
  } catch (const wall_error&) {
  }
  Arrangement arr = arrangement(m);
  if (m.s() <= 2) {
    std::vector<Chamber> out;
    for (auto& ch : enumerate_chambers(m))
      if (in_closure(arr, ch.signs, x)) out.push_back(std::move(ch));
    return out;
  }
  // Nudge radius keeping every nonzero pairing's sign: below half the least
  // nonzero |<nu, x>| over the largest possible one-norm times step size.
  Rational least(0);
  Integer widest = 1;
  for (const auto& nu : arr.normals) {
    Rational v = abs(dot(nu, x));
    if (!v.is_zero() && (least.is_zero() || v < least)) least = v;
    widest = std::max(widest, detail::one_norm(nu));
  }
  if (least.is_zero()) least = Rational(1);
  Rational delta = least / Rational(2 * widest);
  int s = m.s();
  std::vector<int> step(s, -1);
  while (true) {
    bool all_zero = true;
    for (int v : step)
      if (v) all_zero = false;
    if (!all_zero) {
      RatVec cand = x;
      for (int i = 0; i < s; ++i) cand[i] += delta * Rational(step[i]);
      try {
        Chamber ch = chamber_of(m, cand);
        if (in_closure(arr, ch.signs, x)) return {ch};
      } catch (const error&) {
      }
    }
    int pos = 0;
    while (pos < s && step[pos] == 1) step[pos++] = -1;
    if (pos == s) break;
    ++step[pos];
  }
  throw error("no chamber closure containing the point was found");
}

}  // namespace vpf
