#include "jacobi/generator_polynomial.hpp"

#include <cctype>

namespace jacobi {

GeneratorPolynomial::GeneratorPolynomial(const Rational &c) { add({0, 0, 0, 0}, c); }

GeneratorPolynomial GeneratorPolynomial::symbol(int i) {
  if (i < 1 || i > 4) throw ValidationError("generator symbol index must be 1..4");
  Exponents e{0, 0, 0, 0};
  e[i - 1] = 1;
  return monomial(e);
}

GeneratorPolynomial GeneratorPolynomial::monomial(const Exponents &e, const Rational &c) {
  GeneratorPolynomial p;
  p.add(e, c);
  return p;
}

void GeneratorPolynomial::add(const Exponents &e, const Rational &c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

bool GeneratorPolynomial::is_integral() const {
  for (const auto &[e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

int GeneratorPolynomial::index() const {
  int idx = -1;
  for (const auto &[e, c] : terms_) {
    int m = e[0] + 2 * e[1] + 3 * e[2] + 4 * e[3];
    if (idx >= 0 && m != idx) return -1;
    idx = m;
  }
  return idx;
}

GeneratorPolynomial &GeneratorPolynomial::operator+=(const GeneratorPolynomial &o) {
  for (const auto &[e, c] : o.terms_) add(e, c);
  return *this;
}

GeneratorPolynomial &GeneratorPolynomial::operator-=(const GeneratorPolynomial &o) {
  for (const auto &[e, c] : o.terms_) add(e, -c);
  return *this;
}

GeneratorPolynomial &GeneratorPolynomial::operator*=(const GeneratorPolynomial &o) {
  GeneratorPolynomial r;
  for (const auto &[ea, ca] : terms_)
    for (const auto &[eb, cb] : o.terms_) {
      Exponents e;
      for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  return *this = std::move(r);
}

GeneratorPolynomial GeneratorPolynomial::scaled(const Rational &c) const {
  GeneratorPolynomial r;
  for (const auto &[e, v] : terms_) r.add(e, v * c);
  return r;
}

GeneratorPolynomial GeneratorPolynomial::pow(int k) const {
  if (k < 0) throw ValidationError("negative power of a generator polynomial");
  GeneratorPolynomial r(1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

GeneratorPolynomial GeneratorPolynomial::reduced() const {
  // Φ1^a Φ3^c with a,c >= 1: peel one Φ1Φ3 at a time. Each step lowers
  // the Φ1 degree, so the loop terminates.
  GeneratorPolynomial work = *this;
  GeneratorPolynomial done;
  const GeneratorPolynomial replacement = symbol(4).scaled(4) + symbol(2) * symbol(2);
  while (!work.is_zero()) {
    auto [e, c] = *work.terms_.begin();
    work.terms_.erase(work.terms_.begin());
    if (e[0] == 0 || e[2] == 0) {
      done.add(e, c);
      continue;
    }
    Exponents rest = e;
    rest[0] -= 1;
    rest[2] -= 1;
    work += monomial(rest, c) * replacement;
  }
  return done;
}

GeneratorPolynomial GeneratorPolynomial::integral_form() const {
  if (is_integral()) return *this;
  GeneratorPolynomial r = reduced();
  if (!r.is_integral())
    throw DivisibilityError("generator polynomial " + to_string() + " is not integral modulo 4Φ4=Φ1Φ3-Φ2^2");
  return r;
}

std::string GeneratorPolynomial::to_string(bool ascii) const {
  if (terms_.empty()) return "0";
  const std::string sym = ascii ? "Phi" : "Φ";
  std::string out;
  for (const auto &[e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += sym + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? "-" : "+";
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

namespace {

class Parser {
public:
  explicit Parser(const std::string &s) : s_(s) {}

  GeneratorPolynomial run() {
    GeneratorPolynomial p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &what) {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(const std::string &tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  Integer number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(s_.substr(start, pos_ - start));
  }
  GeneratorPolynomial sum() {
    GeneratorPolynomial acc;
    bool neg = false;
    if (eat("-"))
      neg = true;
    else
      eat("+");
    acc = product();
    if (neg) acc = -acc;
    for (;;) {
      if (eat("+"))
        acc += product();
      else if (eat("-"))
        acc -= product();
      else
        return acc;
    }
  }
  GeneratorPolynomial product() {
    GeneratorPolynomial acc = power();
    while (eat("*")) acc *= power();
    return acc;
  }
  GeneratorPolynomial power() {
    GeneratorPolynomial base = atom();
    if (eat("^")) {
      Integer e = number();
      if (e > 64) fail("exponent too large");
      base = base.pow(static_cast<int>(e.get_si()));
    }
    return base;
  }
  GeneratorPolynomial atom() {
    skip();
    if (eat("(")) {
      GeneratorPolynomial p = sum();
      if (!eat(")")) fail("expected ')'");
      return p;
    }
    if (eat("Φ") || eat("Phi") || eat("phi")) {
      Integer i = number();
      if (i < 1 || i > 4) fail("generator index must be 1..4");
      return GeneratorPolynomial::symbol(static_cast<int>(i.get_si()));
    }
    Integer n = number();
    Rational v(n);
    std::size_t save = pos_;
    if (eat("/")) {
      skip();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        Integer d = number();
        if (d == 0) fail("division by zero");
        v = Rational(n, d);
        v.canonicalize();
      } else {
        pos_ = save;
      }
    }
    return GeneratorPolynomial(v);
  }

  const std::string &s_;
  std::size_t pos_ = 0;
};

} // namespace

GeneratorPolynomial GeneratorPolynomial::parse(const std::string &text) { return Parser(text).run(); }

} // namespace jacobi
