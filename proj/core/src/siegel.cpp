#include "jacobi/siegel.hpp"

#include "jacobi/series_ops.hpp"

namespace jacobi {

namespace {

Series3 y_poly(std::int64_t ly, std::int64_t e) {
  std::vector<ProductFactor<Key3>> f{{Key3::make(0, ly, 0), e}};
  return product_expand<Key3>(f, kInf, kInf);
}

Series3 multiply_factors(Series3 s, const std::map<std::int64_t, std::int64_t> &factors) {
  for (const auto &[ly, e] : factors) {
    if (e < 0)
      throw ValidationError("factor (1 - y^" + exponent_string(ly, kYDen) + ")^" + std::to_string(e) +
                            " has infinite y-support");
    if (e > 0) s = s * y_poly(ly, e);
  }
  return s;
}

void add_factor(std::map<std::int64_t, std::int64_t> &m, std::int64_t ly, std::int64_t e) {
  auto &v = m[ly];
  v += e;
  if (v == 0) m.erase(ly);
}

} // namespace

Series3 SiegelSeries::expanded() const { return multiply_factors(series, y_factors); }

SiegelSeries SiegelSeries::inverse() const {
  SiegelSeries r(series.inverse(), -weight2, index_t);
  r.character_order = character_order;
  for (const auto &[ly, e] : y_factors) r.y_factors[ly] = -e;
  return r;
}

SiegelSeries SiegelSeries::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  SiegelSeries r(series.pow(k), static_cast<int>(weight2 * k), index_t);
  r.character_order = character_order;
  if (k != 0)
    for (const auto &[ly, e] : y_factors) r.y_factors[ly] = e * k;
  return r;
}

SiegelSeries SiegelSeries::truncated(std::int64_t qprec, std::int64_t sprec) const {
  SiegelSeries r = *this;
  r.series = series.truncated(qprec, sprec);
  return r;
}

SiegelSeries operator*(const SiegelSeries &a, const SiegelSeries &b) {
  SiegelSeries r(a.series * b.series, a.weight2 + b.weight2, a.index_t == b.index_t ? a.index_t : 0);
  r.y_factors = a.y_factors;
  for (const auto &[ly, e] : b.y_factors) add_factor(r.y_factors, ly, e);
  return r;
}

namespace {

std::pair<Series3, Series3> cleared(const SiegelSeries &a, const SiegelSeries &b) {
  std::map<std::int64_t, std::int64_t> fa, fb;
  std::map<std::int64_t, std::int64_t> all = a.y_factors;
  for (const auto &[ly, e] : b.y_factors) all.emplace(ly, 0);
  for (const auto &[ly, unused] : all) {
    auto ia = a.y_factors.find(ly);
    auto ib = b.y_factors.find(ly);
    std::int64_t ea = ia == a.y_factors.end() ? 0 : ia->second;
    std::int64_t eb = ib == b.y_factors.end() ? 0 : ib->second;
    std::int64_t m = std::min(ea, eb);
    if (ea > m) fa[ly] = ea - m;
    if (eb > m) fb[ly] = eb - m;
  }
  return {multiply_factors(a.series, fa), multiply_factors(b.series, fb)};
}

} // namespace

bool SiegelSeries::agrees_with(const SiegelSeries &b) const {
  auto [x, y] = cleared(*this, b);
  return x.agrees_with(y);
}

std::optional<Key3> SiegelSeries::first_difference(const SiegelSeries &b) const {
  auto [x, y] = cleared(*this, b);
  return x.first_difference(y);
}

SiegelSeries y_factor(std::int64_t ly, std::int64_t e) {
  if (ly == 0) throw ValidationError("y-factor with the unit monomial");
  SiegelSeries r(Series3::one());
  if (e == 0) return r;
  if (ly > 0) {
    Integer sign = (e & 1) ? -1 : 1;
    r.series = Series3::monomial(Key3::make(0, ly * e, 0), sign);
    ly = -ly;
  }
  r.y_factors[ly] = e;
  return r;
}

SiegelSeries substitute_zw(const SiegelSeries &f, int j, int k) {
  if (j <= 0 || k <= 0) throw ValidationError("substitution scales must be positive");
  ExponentMap map{{{1, 0, 0}, {0, j, 0}, {0, 0, k}}, {}};
  SiegelSeries r = f;
  r.series = monomial_substitute<Key3>(f.series, map);
  r.y_factors.clear();
  for (const auto &[ly, e] : f.y_factors) r.y_factors[ly * j] = e;
  return r;
}

Json to_json(const SiegelSeries &f) {
  Json j = to_json(f.series);
  j["weight2"] = f.weight2;
  j["character_order"] = f.character_order;
  j["index_t"] = f.index_t;
  if (!f.y_factors.empty()) {
    Json arr = Json::array();
    for (const auto &[ly, e] : f.y_factors) arr.push_back(Json::array({ly, e}));
    j["y_factors"] = std::move(arr);
  }
  return j;
}

SiegelSeries siegel_from_json(const Json &j) {
  SiegelSeries r(series_from_json<Key3, Integer>(j));
  auto int_field = [&](const char *name, int def) {
    if (!j.contains(name)) return def;
    if (!j.at(name).is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
    return j.at(name).get<int>();
  };
  r.weight2 = int_field("weight2", 0);
  r.character_order = int_field("character_order", 1);
  r.index_t = int_field("index_t", 0);
  if (j.contains("y_factors")) {
    for (const auto &p : j.at("y_factors")) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        throw ParseError("malformed y-factor " + p.dump());
      std::int64_t ly = p[0].get<std::int64_t>();
      if (ly >= 0) throw ParseError("y-factor exponents must be negative: " + p.dump());
      add_factor(r.y_factors, ly, p[1].get<std::int64_t>());
    }
  }
  return r;
}

} // namespace jacobi
