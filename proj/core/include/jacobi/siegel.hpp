#pragma once

// Series in q = e(τ), y = e(z), s = e(ω) for functions of the genus-2
// period matrix Z = (τ z; z ω).
//
// Products over (1 - y^l) with l < 0 and a negative exponent have infinite
// y-support. Such factors are carried symbolically next to the series.

#include <map>
#include <optional>

#include "jacobi/series.hpp"
#include "jacobi/series_io.hpp"

namespace jacobi {

struct SiegelSeries {
  Series3 series;
  /// ly -> e for the factor (1 - y^{ly/4})^e; every ly is negative.
  std::map<std::int64_t, std::int64_t> y_factors;
  int weight2 = 0;
  int character_order = 1;
  int index_t = 0;

  SiegelSeries() = default;
  explicit SiegelSeries(Series3 s, int w2 = 0, int t = 0)
      : series(std::move(s)), weight2(w2), index_t(t) {}

  std::int64_t qprec() const { return series.qprec(); }
  std::int64_t sprec() const { return series.sprec(); }

  /// Multiplies the symbolic factors into the series. Throws ValidationError
  /// on a negative exponent.
  Series3 expanded() const;

  SiegelSeries inverse() const;
  SiegelSeries pow(std::int64_t k) const;
  SiegelSeries truncated(std::int64_t qprec, std::int64_t sprec) const;
  friend SiegelSeries operator*(const SiegelSeries &a, const SiegelSeries &b);

  /// Equality below the common precision after clearing the common
  /// symbolic factors.
  bool agrees_with(const SiegelSeries &b) const;
  std::optional<Key3> first_difference(const SiegelSeries &b) const;
};

/// (1 - y^{ly/4})^e; positive ly is rewritten as -y^{ly/4}(1 - y^{-ly/4}).
SiegelSeries y_factor(std::int64_t ly, std::int64_t e);

/// F(τ, j z, k ω).
SiegelSeries substitute_zw(const SiegelSeries &f, int j, int k);

Json to_json(const SiegelSeries &f);
SiegelSeries siegel_from_json(const Json &j);

} // namespace jacobi
