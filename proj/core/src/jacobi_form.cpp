#include "jacobi/jacobi_form.hpp"

#include "jacobi/series_ops.hpp"

namespace jacobi {

namespace {

std::optional<GeneratorPolynomial> combine(const std::optional<GeneratorPolynomial> &a,
                                           const std::optional<GeneratorPolynomial> &b, char op) {
  if (!a || !b) return std::nullopt;
  switch (op) {
  case '+': return *a + *b;
  case '-': return *a - *b;
  default: return *a * *b;
  }
}

void check_same_type(const JacobiForm &a, const JacobiForm &b) {
  if (a.weight2 != b.weight2 || a.index2 != b.index2)
    throw ValidationError("adding Jacobi forms of different weight or index (" + std::to_string(a.weight2) +
                          "/2, " + std::to_string(a.index2) + "/2) vs (" + std::to_string(b.weight2) + "/2, " +
                          std::to_string(b.index2) + "/2)");
}

} // namespace

JacobiForm JacobiForm::scaled(const Integer &c) const {
  std::optional<GeneratorPolynomial> p;
  if (poly) p = poly->scaled(Rational(c));
  return JacobiForm(weight2, index2, series.scaled(c), p);
}

JacobiForm JacobiForm::pow(int k) const {
  if (k < 0) throw ValidationError("negative power of a Jacobi form");
  std::optional<GeneratorPolynomial> p;
  if (poly) p = poly->pow(k);
  return JacobiForm(weight2 * k, index2 * k, series.pow(k), p);
}

JacobiForm operator+(const JacobiForm &a, const JacobiForm &b) {
  check_same_type(a, b);
  return JacobiForm(a.weight2, a.index2, a.series + b.series, combine(a.poly, b.poly, '+'));
}

JacobiForm operator-(const JacobiForm &a, const JacobiForm &b) {
  check_same_type(a, b);
  return JacobiForm(a.weight2, a.index2, a.series - b.series, combine(a.poly, b.poly, '-'));
}

JacobiForm operator*(const JacobiForm &a, const JacobiForm &b) {
  return JacobiForm(a.weight2 + b.weight2, a.index2 + b.index2, a.series * b.series,
                    combine(a.poly, b.poly, '*'));
}

bool JacobiForm::is_symmetric() const {
  for (const auto &[k, c] : series.terms())
    if (series.coefficient(Key2{k.nq, -k.ly}) != c) return false;
  return true;
}

void JacobiForm::validate_weak() const {
  for (const auto &[k, c] : series.terms()) {
    if (k.nq < 0) throw ValidationError("weak form has a negative q-power at " + key_string(k));
    if (((k.ly - 2 * index2) % 4 + 4) % 4 != 0)
      throw ValidationError("y-exponent at " + key_string(k) + " is not in index + Z");
  }
}

bool same_form(const JacobiForm &a, const JacobiForm &b) {
  return a.weight2 == b.weight2 && a.index2 == b.index2 && a.series.agrees_with(b.series);
}

JacobiForm scale_z(const JacobiForm &f, int k) {
  ExponentMap m{{{1, 0}, {0, k}}, {}};
  return JacobiForm(f.weight2, f.index2 * k * k, monomial_substitute<Key2>(f.series, m));
}

Json to_json(const JacobiForm &f) {
  Json j = to_json(f.series);
  j["weight2"] = f.weight2;
  j["index2"] = f.index2;
  if (f.poly) j["poly"] = f.poly->to_string();
  return j;
}

JacobiForm jacobi_form_from_json(const Json &j) {
  JacobiForm f;
  f.series = series_from_json<Key2, Integer>(j);
  if (!j.contains("weight2") || !j.at("weight2").is_number_integer() || !j.contains("index2") ||
      !j.at("index2").is_number_integer())
    throw ParseError("Jacobi form payload needs integer 'weight2' and 'index2'");
  f.weight2 = j.at("weight2").get<int>();
  f.index2 = j.at("index2").get<int>();
  if (j.contains("poly") && !j.at("poly").is_null()) f.poly = GeneratorPolynomial::parse(j.at("poly").get<std::string>());
  return f;
}

} // namespace jacobi
