#pragma once

// JSON and text rendering of series.
//
// JSON layout: {"den": [24,4] or [24,4,24], "qprec": int|null,
// "terms": [[nq, ly(, ms), "coeff"], ...]}. Three-variable series add
// "sprec". A null precision marks an exact polynomial. Non-integer rings
// add "ring" (and "conductor" for cyclotomic coefficients).

#include <string>

#include <nlohmann/json.hpp>

#include "jacobi/series.hpp"

namespace jacobi {

using Json = nlohmann::ordered_json;

inline Json prec_to_json(std::int64_t p) { return p >= kInf ? Json(nullptr) : Json(p); }

inline std::int64_t prec_from_json(const Json &j, const char *field) {
  if (!j.contains(field) || j.at(field).is_null()) return kInf;
  if (!j.at(field).is_number_integer()) throw ParseError(std::string("field '") + field + "' must be an integer");
  return j.at(field).get<std::int64_t>();
}

template <class K, class C> Json to_json(const Series<K, C> &a) {
  Json j;
  if constexpr (K::kDims == 2)
    j["den"] = {kQDen, kYDen};
  else
    j["den"] = {kQDen, kYDen, kSDen};
  if constexpr (!std::is_same_v<C, Integer>) j["ring"] = RingTraits<C>::name();
  if constexpr (std::is_same_v<C, Cyclotomic>) j["conductor"] = a.ring_param();
  j["qprec"] = prec_to_json(a.qprec());
  if constexpr (K::kDims == 3) j["sprec"] = prec_to_json(a.sprec());
  Json terms = Json::array();
  for (const auto &[k, c] : a.terms()) {
    Json t = Json::array({k.nq, k.ly});
    if constexpr (K::kDims == 3) t.push_back(k.ms());
    t.push_back(RingTraits<C>::to_string(c));
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

template <class K, class C> Series<K, C> series_from_json(const Json &j) {
  if (!j.is_object()) throw ParseError("series payload must be a JSON object");
  if (!j.contains("den") || !j.at("den").is_array() || j.at("den").size() != K::kDims)
    throw ParseError("series payload has missing or wrong 'den'");
  const auto &den = j.at("den");
  if (den[0] != kQDen || den[1] != kYDen || (K::kDims == 3 && den[2] != kSDen))
    throw ParseError("unsupported exponent denominators " + den.dump());
  std::string ring = j.value("ring", std::string("integer"));
  if (ring != RingTraits<C>::name())
    throw RingMismatchError("payload ring '" + ring + "' does not match " + RingTraits<C>::name());
  int param = Series<K, C>::default_param();
  if constexpr (std::is_same_v<C, Cyclotomic>) param = j.value("conductor", 1);
  std::int64_t qprec = prec_from_json(j, "qprec");
  std::int64_t sprec = K::kDims == 3 ? prec_from_json(j, "sprec") : kInf;
  if (!j.contains("terms") || !j.at("terms").is_array()) throw ParseError("series payload lacks 'terms'");
  Series<K, C> r(qprec, sprec, param);
  for (const auto &t : j.at("terms")) {
    if (!t.is_array() || t.size() != K::kDims + 1) throw ParseError("malformed term " + t.dump());
    for (int i = 0; i < K::kDims; ++i)
      if (!t[i].is_number_integer()) throw ParseError("non-integer exponent in term " + t.dump());
    if (!t[K::kDims].is_string()) throw ParseError("coefficient must be a decimal string in " + t.dump());
    K k = K::make(t[0].get<std::int64_t>(), t[1].get<std::int64_t>(),
                  K::kDims == 3 ? t[2].template get<std::int64_t>() : 0);
    if (k.nq >= qprec || k.ms() >= sprec) throw ParseError("term beyond stated precision: " + t.dump());
    C c = RingTraits<C>::parse(t[K::kDims].template get<std::string>(), param);
    if (RingTraits<C>::is_zero(c)) throw ParseError("stored zero coefficient in " + t.dump());
    if (!RingTraits<C>::is_zero(r.coefficient(k))) throw ParseError("duplicate term " + t.dump());
    r.add_term(k, c);
  }
  return r;
}

/// Exponent n/den rendered as "n", "n/d" in lowest terms.
std::string exponent_string(std::int64_t num, std::int64_t den);

/// Laurent polynomial in y for the q-row nq, e.g. "10y^-2 - 64y^-1 + 108".
std::string row_text(const Series2 &a, std::int64_t nq);
std::string row_text(const QSeries2 &a, std::int64_t nq);

/// One line per nonzero q-row: "q^n: (row)".
std::string series_text(const Series2 &a);
std::string series_text(const Series3 &a);

} // namespace jacobi
