#include "jacobi/ring.hpp"

#include <map>
#include <mutex>

namespace jacobi {

// ---- helpers --------------------------------------------------------------

Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_mod(const Integer &a, const Integer &b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer binomial(std::int64_t e, std::int64_t j) {
  if (j < 0) return 0;
  Integer r = 1;
  for (std::int64_t i = 0; i < j; ++i) {
    r *= Integer(std::to_string(e - i));
    r /= Integer(std::to_string(i + 1));
  }
  return r;
}

namespace {

Integer parse_integer(const std::string &s) {
  Integer v;
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || v.set_str(t, 10) != 0)
    throw ParseError("invalid integer literal '" + s + "'");
  return v;
}

// Reduce a rational root-of-unity exponent k/n to the form j/m; returns
// the exponent in units of 1/m or nothing if m does not divide m*k/n.
std::optional<std::int64_t> scaled_exponent(std::int64_t n, std::int64_t k, std::int64_t m) {
  if (n <= 0) throw ValidationError("root of unity order must be positive");
  const std::int64_t r = ((k % n) + n) % n;
  if ((r * m) % n != 0) return std::nullopt;
  return (r * m) / n;
}

[[noreturn]] void promotion_failure(const std::string &ring, std::int64_t n, std::int64_t k) {
  throw RingPromotionError("exp(2*pi*i*" + std::to_string(k) + "/" + std::to_string(n) +
                           ") is not in the " + ring +
                           " ring; promote the coefficients to a larger ring");
}

} // namespace

// ---- Integer / Rational ----------------------------------------------------

std::optional<Integer> RingTraits<Integer>::exact_quotient(const Integer &a, const Integer &b) {
  if (sgn(b) == 0) return std::nullopt;
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer RingTraits<Integer>::root_of_unity(std::int64_t n, std::int64_t k, int) {
  auto e = scaled_exponent(n, k, 2);
  if (!e) promotion_failure(name(), n, k);
  return *e == 0 ? 1 : -1;
}

Integer RingTraits<Integer>::parse(const std::string &s, int) { return parse_integer(s); }

std::optional<Rational> RingTraits<Rational>::exact_quotient(const Rational &a, const Rational &b) {
  if (sgn(b) == 0) return std::nullopt;
  return Rational(a / b);
}

Rational RingTraits<Rational>::root_of_unity(std::int64_t n, std::int64_t k, int) {
  auto e = scaled_exponent(n, k, 2);
  if (!e) promotion_failure(name(), n, k);
  return *e == 0 ? 1 : -1;
}

Rational RingTraits<Rational>::parse(const std::string &s, int) {
  Rational v;
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || v.set_str(t, 10) != 0) throw ParseError("invalid rational literal '" + s + "'");
  v.canonicalize();
  return v;
}

// ---- Gaussian ---------------------------------------------------------------

Gaussian &Gaussian::operator+=(const Gaussian &o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian &Gaussian::operator-=(const Gaussian &o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian &Gaussian::operator*=(const Gaussian &o) {
  Integer r = re_ * o.re_ - im_ * o.im_;
  Integer i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

bool RingTraits<Gaussian>::is_unit(const Gaussian &a) {
  return (sgn(a.im()) == 0 && abs(a.re()) == 1) || (sgn(a.re()) == 0 && abs(a.im()) == 1);
}

std::optional<Gaussian> RingTraits<Gaussian>::exact_quotient(const Gaussian &a, const Gaussian &b) {
  Integer norm = b.re() * b.re() + b.im() * b.im();
  if (sgn(norm) == 0) return std::nullopt;
  Gaussian num = a * Gaussian(b.re(), -b.im());
  auto re = RingTraits<Integer>::exact_quotient(num.re(), norm);
  auto im = RingTraits<Integer>::exact_quotient(num.im(), norm);
  if (!re || !im) return std::nullopt;
  return Gaussian(*re, *im);
}

Gaussian RingTraits<Gaussian>::root_of_unity(std::int64_t n, std::int64_t k, int) {
  auto e = scaled_exponent(n, k, 4);
  if (!e) promotion_failure(name(), n, k);
  switch (*e) {
  case 0: return Gaussian(1, 0);
  case 1: return Gaussian(0, 1);
  case 2: return Gaussian(-1, 0);
  default: return Gaussian(0, -1);
  }
}

std::string RingTraits<Gaussian>::to_string(const Gaussian &a) {
  if (sgn(a.im()) == 0) return a.re().get_str();
  std::string s = a.re().get_str();
  if (sgn(a.im()) > 0) s += "+";
  return s + a.im().get_str() + "i";
}

Gaussian RingTraits<Gaussian>::parse(const std::string &s, int) {
  if (s.empty() || s.back() != 'i') return Gaussian(parse_integer(s));
  // split "re(+|-)im i" at the last sign that is not the leading one
  std::size_t pos = s.find_last_of("+-");
  if (pos == std::string::npos || pos == 0) {
    std::string im = s.substr(0, s.size() - 1);
    if (im.empty() || im == "+" || im == "-") im += "1";
    return Gaussian(0, parse_integer(im));
  }
  std::string im = s.substr(pos, s.size() - 1 - pos);
  if (im == "+" || im == "-") im += "1";
  return Gaussian(parse_integer(s.substr(0, pos)), parse_integer(im));
}

// ---- Cyclotomic -------------------------------------------------------------

namespace {

using Poly = std::vector<Integer>;

// Exact division of a by a monic polynomial b.
Poly monic_divide(Poly a, const Poly &b) {
  std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

} // namespace

const std::vector<Integer> &Cyclotomic::cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, Poly> cache;
  if (n < 1 || n > 12) throw ValidationError("cyclotomic conductor must lie in 1..12");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    Poly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e)
      if (d % e == 0) p = monic_divide(p, cache.at(e));
    cache.emplace(d, std::move(p));
  }
  return cache.at(n);
}

Cyclotomic::Cyclotomic(int conductor, const Integer &value) : conductor_(conductor) {
  const auto &phi = cyclotomic_polynomial(conductor);
  coords_.assign(phi.size() - 1, 0);
  coords_[0] = value;
}

Cyclotomic Cyclotomic::root_power(int conductor, std::int64_t k) {
  Cyclotomic r(conductor, 0);
  std::int64_t e = k % conductor;
  if (e < 0) e += conductor;
  Poly raw(e + 1, 0);
  raw[e] = 1;
  r.reduce(std::move(raw));
  return r;
}

void Cyclotomic::reduce(std::vector<Integer> raw) {
  const auto &phi = cyclotomic_polynomial(conductor_);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = raw.size(); i-- > deg;) {
    if (sgn(raw[i]) == 0) continue;
    Integer c = raw[i];
    for (std::size_t j = 0; j <= deg; ++j) raw[i - deg + j] -= c * phi[j];
  }
  raw.resize(deg, 0);
  coords_ = std::move(raw);
}

void Cyclotomic::check_same(const Cyclotomic &o) const {
  if (conductor_ != o.conductor_)
    throw RingMismatchError("cyclotomic conductors differ: " + std::to_string(conductor_) +
                            " vs " + std::to_string(o.conductor_));
}

bool Cyclotomic::is_rational_integer() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return false;
  return true;
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &o) {
  check_same(o);
  Poly raw(coords_.size() * 2, 0);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coords_.size(); ++j) raw[i + j] += coords_[i] * o.coords_[j];
  }
  reduce(std::move(raw));
  return *this;
}

Cyclotomic operator-(Cyclotomic a) {
  for (auto &c : a.coords_) c = -c;
  return a;
}

bool RingTraits<Cyclotomic>::is_zero(const Cyclotomic &a) {
  for (const auto &c : a.coords())
    if (sgn(c) != 0) return false;
  return true;
}

bool RingTraits<Cyclotomic>::is_unit(const Cyclotomic &a) {
  auto q = exact_quotient(one(a.conductor()), a);
  return q.has_value();
}

std::optional<Cyclotomic> RingTraits<Cyclotomic>::exact_quotient(const Cyclotomic &a,
                                                                 const Cyclotomic &b) {
  if (a.conductor() != b.conductor())
    throw RingMismatchError("cyclotomic conductors differ");
  if (is_zero(b)) return std::nullopt;
  const int n = a.conductor();
  const std::size_t dim = a.coords().size();
  // Solve M x = a where column j of M is b * x^j.
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim + 1));
  for (std::size_t j = 0; j < dim; ++j) {
    Cyclotomic col = b * Cyclotomic::root_power(n, static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = col.coords()[i];
  }
  for (std::size_t i = 0; i < dim; ++i) m[i][dim] = a.coords()[i];
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t piv = c;
    while (piv < dim && sgn(m[piv][c]) == 0) ++piv;
    if (piv == dim) return std::nullopt;
    std::swap(m[piv], m[c]);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= dim; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Integer> coords(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Rational x = m[i][dim] / m[i][i];
    if (x.get_den() != 1) return std::nullopt;
    coords[i] = x.get_num();
  }
  Cyclotomic r(n, 0);
  for (std::size_t i = 0; i < dim; ++i)
    r += Cyclotomic(n, coords[i]) * Cyclotomic::root_power(n, static_cast<std::int64_t>(i));
  return r;
}

Cyclotomic RingTraits<Cyclotomic>::root_of_unity(std::int64_t n, std::int64_t k, int param) {
  auto e = scaled_exponent(n, k, param);
  if (!e) promotion_failure(name() + "(" + std::to_string(param) + ")", n, k);
  return Cyclotomic::root_power(param, *e);
}

std::string RingTraits<Cyclotomic>::to_string(const Cyclotomic &a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    if (i) s += ",";
    s += a.coords()[i].get_str();
  }
  return s + "]";
}

Cyclotomic RingTraits<Cyclotomic>::parse(const std::string &s, int param) {
  if (s.empty() || s.front() != '[') return Cyclotomic(param, parse_integer(s));
  if (s.back() != ']') throw ParseError("invalid cyclotomic literal '" + s + "'");
  Cyclotomic r(param, 0);
  std::size_t i = 1, k = 0;
  while (i < s.size() - 1) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size() - 1;
    r += Cyclotomic(param, parse_integer(s.substr(i, j - i))) *
         Cyclotomic::root_power(param, static_cast<std::int64_t>(k++));
    i = j + 1;
  }
  if (k != r.coords().size()) throw ParseError("cyclotomic literal has wrong length '" + s + "'");
  return r;
}

} // namespace jacobi
