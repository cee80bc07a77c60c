#pragma once

// JSON encodings:
//   CycInt            {"q": int, "coeffs": [int, ...]}
//   Rational          {"num": int, "den": int}
//   ExactPoly         {"domain": "int" | "rat" | {"cyc": q}, "coeffs": [...]}
//   FactoredCharPoly  {"total_degree", "lambda_exp", "factors": [{"d", "c", "mult"}]}
//   SpectralMeasure   {"n", "m", "atoms": [{"value": CycInt, "mass": Rational}]}
//   Hypergraph        {"vertices": N, "k": k, "edges": [[...], ...]}
//   Hypermatrix       {"m", "n", "entries": [{"idx": [...], "val": Rational}]}
// Integers outside the signed 64-bit range are written as decimal strings;
// readers accept either form.

#include <hyperspec/bigint.hpp>
#include <hyperspec/cyclotomic.hpp>
#include <hyperspec/distribution.hpp>
#include <hyperspec/errors.hpp>
#include <hyperspec/hypermatrix.hpp>
#include <hyperspec/polynomial.hpp>
#include <hyperspec/spectra.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace hyperspec {

using json = nlohmann::json;

inline json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

inline BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return from_u64(j.get<std::uint64_t>());
    return BigInt(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw PreconditionError("expected an integer, got " + j.dump());
}

inline json rational_to_json(const Rational& r) {
  return {{"num", bigint_to_json(r.get_num())}, {"den", bigint_to_json(r.get_den())}};
}

inline Rational rational_from_json(const json& j) {
  if (j.is_object()) {
    const BigInt den = bigint_from_json(j.at("den"));
    if (den == 0) throw PreconditionError("zero denominator");
    return make_rational(bigint_from_json(j.at("num")), den);
  }
  return Rational(bigint_from_json(j));
}

inline json cycint_to_json(const CycInt& c) {
  json coeffs = json::array();
  for (const auto& v : c.coeffs()) coeffs.push_back(bigint_to_json(v));
  return {{"q", c.order()}, {"coeffs", coeffs}};
}

inline CycInt cycint_from_json(const json& j) {
  const auto q = j.at("q").get<unsigned>();
  const auto& arr = j.at("coeffs");
  if (arr.size() != euler_totient(q)) throw PreconditionError("coeffs length must be phi(q)");
  std::vector<BigInt> v;
  for (const auto& e : arr) v.push_back(bigint_from_json(e));
  return CycInt::reduce_any(std::move(v), q);
}

inline json poly_to_json(const IntPoly& p) {
  json c = json::array();
  for (const auto& v : p.coeffs()) c.push_back(bigint_to_json(v));
  return {{"domain", "int"}, {"coeffs", c}};
}

inline json poly_to_json(const RatPoly& p) {
  json c = json::array();
  for (const auto& v : p.coeffs()) c.push_back(rational_to_json(v));
  return {{"domain", "rat"}, {"coeffs", c}};
}

inline json poly_to_json(const CycPoly& p) {
  json c = json::array();
  for (const auto& v : p.coeffs()) c.push_back(cycint_to_json(v));
  return {{"domain", {{"cyc", p.zero().order()}}}, {"coeffs", c}};
}

template <class P>
P poly_from_json(const json& j);

template <>
inline IntPoly poly_from_json<IntPoly>(const json& j) {
  if (j.at("domain") != "int") throw PreconditionError("expected an int polynomial");
  std::vector<BigInt> v;
  for (const auto& e : j.at("coeffs")) v.push_back(bigint_from_json(e));
  return IntPoly(std::move(v));
}

template <>
inline RatPoly poly_from_json<RatPoly>(const json& j) {
  if (j.at("domain") != "rat") throw PreconditionError("expected a rat polynomial");
  std::vector<Rational> v;
  for (const auto& e : j.at("coeffs")) v.push_back(rational_from_json(e));
  return RatPoly(std::move(v));
}

template <>
inline CycPoly poly_from_json<CycPoly>(const json& j) {
  const auto& dom = j.at("domain");
  if (!dom.is_object() || !dom.contains("cyc")) throw PreconditionError("expected a cyc polynomial");
  const auto q = dom.at("cyc").get<unsigned>();
  std::vector<CycInt> v;
  for (const auto& e : j.at("coeffs")) {
    v.push_back(cycint_from_json(e));
    if (v.back().order() != q) throw PreconditionError("coefficient order mismatch");
  }
  return CycPoly(std::move(v), CycInt::zero(q));
}

inline json charpoly_to_json(const FactoredCharPoly& f) {
  json factors = json::array();
  for (const auto& fac : f.factors) {
    factors.push_back({{"d", fac.d}, {"c", cycint_to_json(fac.c)}, {"mult", fac.mult}});
  }
  return {{"total_degree", f.total_degree}, {"lambda_exp", f.lambda_exponent}, {"factors", factors}};
}

inline FactoredCharPoly charpoly_from_json(const json& j) {
  FactoredCharPoly f;
  f.total_degree = j.at("total_degree").get<std::uint64_t>();
  f.lambda_exponent = j.at("lambda_exp").get<std::uint64_t>();
  for (const auto& e : j.at("factors")) {
    f.factors.push_back(
        {e.at("d").get<unsigned>(), cycint_from_json(e.at("c")), e.at("mult").get<std::uint64_t>()});
  }
  f.check();
  return f;
}

inline json measure_to_json(const SpectralMeasure& m) {
  json atoms = json::array();
  for (const auto& [v, mass] : m.atoms) {
    atoms.push_back({{"value", cycint_to_json(v)}, {"mass", rational_to_json(mass)}});
  }
  return {{"n", m.n}, {"m", m.m}, {"atoms", atoms}};
}

inline SpectralMeasure measure_from_json(const json& j) {
  SpectralMeasure m;
  m.n = j.at("n").get<unsigned>();
  m.m = j.at("m").get<unsigned>();
  for (const auto& a : j.at("atoms")) {
    m.atoms[cycint_from_json(a.at("value"))] += rational_from_json(a.at("mass"));
  }
  return m;
}

inline json hypergraph_to_json(const Hypergraph& h) {
  return {{"vertices", h.vertex_count()}, {"k", h.uniformity()}, {"edges", h.edges()}};
}

inline Hypergraph hypergraph_from_json(const json& j) {
  return Hypergraph(j.at("vertices").get<unsigned>(), j.at("k").get<unsigned>(),
                    j.at("edges").get<std::vector<std::vector<unsigned>>>());
}

inline json hypermatrix_to_json(const Hypermatrix& a) {
  json entries = json::array();
  for (const auto& [idx, v] : a.entries()) {
    entries.push_back({{"idx", idx}, {"val", rational_to_json(v)}});
  }
  return {{"m", a.order()}, {"n", a.dim()}, {"entries", entries}};
}

inline Hypermatrix hypermatrix_from_json(const json& j) {
  Hypermatrix a(j.at("m").get<unsigned>(), j.at("n").get<unsigned>());
  for (const auto& e : j.at("entries")) {
    a.add(e.at("idx").get<std::vector<unsigned>>(), rational_from_json(e.at("val")));
  }
  return a;
}

}  // namespace hyperspec
