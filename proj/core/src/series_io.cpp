#include "jacobi/series_io.hpp"

#include <numeric>

#include <fmt/format.h>

namespace jacobi {

std::string key_string(const Key2 &k) {
  return fmt::format("q^{} y^{}", exponent_string(k.nq, kQDen), exponent_string(k.ly, kYDen));
}

std::string key_string(const Key3 &k) {
  return fmt::format("q^{} y^{} s^{}", exponent_string(k.nq, kQDen), exponent_string(k.ly, kYDen),
                     exponent_string(k.ms(), kSDen));
}

std::string exponent_string(std::int64_t num, std::int64_t den) {
  std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den == 1) return std::to_string(num);
  return fmt::format("({}/{})", num, den);
}

namespace {

template <class C>
void append_term(std::string &out, const C &c, const std::string &mono) {
  std::string cs = RingTraits<C>::to_string(c);
  bool neg = !cs.empty() && cs[0] == '-';
  if (neg) cs.erase(0, 1);
  if (out.empty())
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (mono.empty())
    out += cs;
  else if (cs == "1")
    out += mono;
  else
    out += cs + mono;
}

std::string y_monomial(std::int64_t ly) {
  if (ly == 0) return "";
  if (ly == kYDen) return "y";
  return "y^" + exponent_string(ly, kYDen);
}

template <class C> std::string row_text_impl(const Series<Key2, C> &a, std::int64_t nq) {
  std::string out;
  for (const auto &[k, c] : a.row(nq)) append_term(out, c, y_monomial(k.ly));
  return out.empty() ? "0" : out;
}

} // namespace

std::string row_text(const Series2 &a, std::int64_t nq) { return row_text_impl(a, nq); }
std::string row_text(const QSeries2 &a, std::int64_t nq) { return row_text_impl(a, nq); }

std::string series_text(const Series2 &a) {
  std::string out;
  std::int64_t last = std::numeric_limits<std::int64_t>::min();
  for (const auto &[k, c] : a.terms()) {
    if (k.nq == last) continue;
    last = k.nq;
    out += fmt::format("q^{}: ({})\n", exponent_string(k.nq, kQDen), row_text(a, k.nq));
  }
  if (a.qprec() < kInf) out += fmt::format("+ O(q^{})\n", exponent_string(a.qprec(), kQDen));
  return out;
}

std::string series_text(const Series3 &a) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::string> rows;
  for (const auto &[k, c] : a.terms()) append_term(rows[{k.nq, k.ms()}], c, y_monomial(k.ly));
  std::string out;
  for (const auto &[qs, text] : rows)
    out += fmt::format("q^{} s^{}: ({})\n", exponent_string(qs.first, kQDen),
                       exponent_string(qs.second, kSDen), text);
  if (a.qprec() < kInf || a.sprec() < kInf)
    out += fmt::format("+ O(q^{}, s^{})\n", a.qprec() < kInf ? exponent_string(a.qprec(), kQDen) : "inf",
                       a.sprec() < kInf ? exponent_string(a.sprec(), kSDen) : "inf");
  return out;
}

} // namespace jacobi
