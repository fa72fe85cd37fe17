#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "applications.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "quasi.hpp"
#include "rational.hpp"

// JSON shapes:
//   Rational            "p/q" or "p"
//   Cyclo               {"modulus": n, "coeffs": [Rational...]}
//   IntMatrix           {"rows": s, "cols": n, "data": [[row-major ints]]}
//   MPoly               {"vars": s, "terms": [{"exp": [ints], "coeff": scalar}]}
//   Chamber             {"witness": [Rational], "signs": "+-...", "rays": [[ints]]?}
//   QuasiPolynomial     {"modulus": N, "chamber": Chamber,
//                        "parts": [{"character": [ints], "poly": MPoly/Cyclo}],
//                        "arrangement": [[ints]]}
//   EhrhartQP           {"degree": d, "period": p, "coeffs": [[Rational per residue]]}

// Integer is a boost type, so argument-dependent lookup cannot see
// serializers placed in this namespace; specialize instead.
namespace nlohmann {

template <>
struct adl_serializer<vpf::Integer> {
  static void to_json(json& j, const vpf::Integer& v) {
    if (v >= std::numeric_limits<int64_t>::min() &&
        v <= std::numeric_limits<int64_t>::max())
      j = v.convert_to<int64_t>();
    else
      j = v.str();
  }
  static void from_json(const json& j, vpf::Integer& v) {
    if (j.is_number_integer()) {
      v = vpf::Integer(j.get<int64_t>());
      return;
    }
    v = vpf::Integer(j.get<std::string>());
  }
};

}  // namespace nlohmann

namespace vpf {

using nlohmann::json;

inline void to_json(json& j, const Rational& r) { j = r.str(); }
inline void from_json(const json& j, Rational& r) {
  if (j.is_number_integer()) {
    r = Rational(static_cast<long long>(j.get<int64_t>()));
    return;
  }
  r = Rational::parse(j.get<std::string>());
}

inline void to_json(json& j, const Cyclo& c) {
  j = json{{"modulus", c.modulus()}, {"coeffs", c.coeffs()}};
}
inline void from_json(const json& j, Cyclo& c) {
  int64_t n = j.at("modulus").get<int64_t>();
  auto coeffs = j.at("coeffs").get<std::vector<Rational>>();
  c = Cyclo(n, std::move(coeffs));
}

inline void to_json(json& j, const IntMatrix& m) {
  j = json{{"rows", m.s()}, {"cols", m.n()}, {"data", m.rows_data()}};
}
inline IntMatrix matrix_from_json(const json& j) {
  int s = j.at("rows").get<int>();
  int n = j.at("cols").get<int>();
  auto data = j.at("data").get<std::vector<IntVec>>();
  if (static_cast<int>(data.size()) != s)
    throw error("matrix JSON: row count does not match 'rows'");
  for (const auto& row : data)
    if (static_cast<int>(row.size()) != n)
      throw error("matrix JSON: row length does not match 'cols'");
  return IntMatrix::from_rows(data);
}

template <class C>
void to_json(json& j, const MPoly<C>& p) {
  json terms = json::array();
  for (const auto& [u, c] : p.terms())
    terms.push_back(json{{"exp", u}, {"coeff", c}});
  j = json{{"vars", p.nvars()}, {"terms", std::move(terms)}};
}
template <class C>
MPoly<C> poly_from_json(const json& j) {
  MPoly<C> p(j.at("vars").get<int>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("exp").get<MultiIndex>(), t.at("coeff").get<C>());
  return p;
}
inline void from_json(const json& j, MPoly<Rational>& p) { p = poly_from_json<Rational>(j); }
inline void from_json(const json& j, MPoly<Cyclo>& p) { p = poly_from_json<Cyclo>(j); }

inline void to_json(json& j, const Chamber& ch) {
  j = json{{"witness", ch.witness}, {"signs", ch.signs}};
  if (!ch.rays.empty()) j["rays"] = ch.rays;
}
inline void from_json(const json& j, Chamber& ch) {
  ch.witness = j.at("witness").get<RatVec>();
  ch.signs = j.at("signs").get<std::string>();
  ch.rays.clear();
  if (j.contains("rays")) ch.rays = j.at("rays").get<std::vector<IntVec>>();
}

inline void to_json(json& j, const QuasiPolynomial& qp) {
  json parts = json::array();
  for (const auto& [theta, poly] : qp.parts)
    parts.push_back(json{{"character", theta.exponents()}, {"poly", poly}});
  j = json{{"modulus", qp.modulus},
           {"chamber", qp.chamber},
           {"parts", std::move(parts)},
           {"arrangement", qp.arr.normals}};
}
inline void from_json(const json& j, QuasiPolynomial& qp) {
  qp.modulus = j.at("modulus").get<int64_t>();
  qp.chamber = j.at("chamber").get<Chamber>();
  qp.parts.clear();
  for (const auto& part : j.at("parts")) {
    Character theta(qp.modulus, part.at("character").get<std::vector<int64_t>>());
    qp.parts.emplace_back(std::move(theta), part.at("poly").get<CPoly>());
  }
  qp.arr.normals.clear();
  if (j.contains("arrangement")) {
    qp.arr.normals = j.at("arrangement").get<std::vector<IntVec>>();
    qp.arr.dim = qp.arr.normals.empty() ? 0 : static_cast<int>(qp.arr.normals[0].size());
  }
}

inline void to_json(json& j, const EhrhartQP& e) {
  j = json{{"degree", e.degree}, {"period", e.period}, {"coeffs", e.coeffs}};
}
inline void from_json(const json& j, EhrhartQP& e) {
  e.degree = j.at("degree").get<int>();
  e.period = j.at("period").get<int64_t>();
  e.coeffs = j.at("coeffs").get<std::vector<std::vector<Rational>>>();
}

// ---- human-readable output ----

inline std::string pretty(const Rational& r) { return r.str(); }

// Root-of-unity aware coefficient rendering: exp(2*pi*i*k/n) terms.
inline std::string pretty(const Cyclo& c) {
  if (c.is_rational()) return c.to_rational().str();
  std::ostringstream out;
  bool first = true;
  const auto& cs = c.coeffs();
  for (size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_zero()) continue;
    if (!first) out << " + ";
    if (i == 0) {
      out << cs[i].str();
    } else {
      if (cs[i] != Rational(1)) out << cs[i].str() << "*";
      out << "exp(2*pi*i*" << i << "/" << c.modulus() << ")";
    }
    first = false;
  }
  return out.str();
}

template <class C>
std::string pretty_poly(const MPoly<C>& p, const std::string& var = "k") {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first reads like the worked formulas.
  std::vector<std::pair<MultiIndex, C>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return mi_degree(a.first) > mi_degree(b.first);
  });
  for (const auto& [u, c] : terms) {
    if (!first) out << " + ";
    out << "(" << pretty(c) << ")";
    for (size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      out << "*" << var << i + 1;
      if (u[i] > 1) out << "^" << u[i];
    }
    first = false;
  }
  return out.str();
}

inline std::string pretty(const Character& theta) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < theta.exponents().size(); ++i) {
    if (i) out << ", ";
    int64_t e = theta.exponents()[i];
    if (e == 0)
      out << "1";
    else
      out << "exp(2*pi*i*" << e << "/" << theta.modulus() << ")";
  }
  out << ")";
  return out.str();
}

inline std::string pretty(const Chamber& ch) {
  std::ostringstream out;
  out << "chamber signs " << ch.signs << ", witness (";
  for (size_t i = 0; i < ch.witness.size(); ++i) {
    if (i) out << ", ";
    out << ch.witness[i].str();
  }
  out << ")";
  if (!ch.rays.empty()) {
    out << ", rays";
    for (const auto& r : ch.rays) {
      out << " (";
      for (size_t i = 0; i < r.size(); ++i) {
        if (i) out << ", ";
        out << r[i].str();
      }
      out << ")";
    }
  }
  return out.str();
}

inline std::string pretty(const QuasiPolynomial& qp) {
  std::ostringstream out;
  out << "modulus " << qp.modulus << ", " << pretty(qp.chamber) << "\n";
  out << "f(k) = sum over characters theta of theta^k * p_theta(k):\n";
  for (const auto& [theta, poly] : qp.parts)
    out << "  theta = " << pretty(theta) << ": " << pretty_poly(poly) << "\n";
  return out.str();
}

inline std::string pretty(const EhrhartQP& e) {
  std::ostringstream out;
  out << "degree " << e.degree << ", period " << e.period << "\n";
  for (int64_t rho = 0; rho < e.period; ++rho) {
    out << "  g = " << rho << " (mod " << e.period << "): L(g) = ";
    bool first = true;
    for (int i = e.degree; i >= 0; --i) {
      const Rational& c = e.coeffs[i][static_cast<size_t>(rho)];
      if (c.is_zero() && !(i == 0 && first)) continue;
      if (!first) out << " + ";
      out << "(" << c.str() << ")";
      if (i >= 1) out << "*g";
      if (i >= 2) out << "^" << i;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace vpf
