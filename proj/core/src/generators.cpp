#include "jacobi/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "jacobi/modular.hpp"
#include "jacobi/series_ops.hpp"

namespace jacobi {

namespace {

std::string normalize_name(const std::string &s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == 0xCF && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x86) {
      out += "phi"; // φ
      ++i;
    } else if (c == 0xCE && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xBE) {
      out += "xi"; // ξ
      ++i;
    } else if (c == '_' || c == '{' || c == '}' || c == ',' || c == ' ') {
      continue;
    } else {
      out += static_cast<char>(std::tolower(c));
    }
  }
  return out;
}

Series2 theta_product(std::int64_t qprec) {
  const std::int64_t bound = qprec - 3;
  std::vector<ProductFactor<Key2>> factors{{Key2{0, 4}, 1}};
  for (std::int64_t n = 1; 24 * n < bound; ++n) {
    factors.push_back({Key2{24 * n, 4}, 1});
    factors.push_back({Key2{24 * n, -4}, 1});
    factors.push_back({Key2{24 * n, 0}, 1});
  }
  Series2 p = product_expand<Key2>(factors, std::max<std::int64_t>(bound, 0));
  return (-p).shifted(Key2{3, -2});
}

Series2 theta_of_kz(std::int64_t qprec, int k) {
  Series2 t = theta_product(qprec);
  if (k == 1) return t;
  return monomial_substitute<Key2>(t, ExponentMap{{{1, 0}, {0, k}}, {}});
}

JacobiForm build_phi02(std::int64_t p) {
  Series2 sum(p + 4);
  for (std::int64_t m = -200; m <= 200; ++m) {
    if (3 * m * m >= p + 4) continue;
    int km = kronecker(-4, m);
    if (km == 0) continue;
    for (std::int64_t n = -400; n <= 400; ++n) {
      std::int64_t nq = 3 * m * m + n * n;
      if (nq >= p + 4) continue;
      int kn = kronecker(12, n);
      if (kn == 0) continue;
      sum.add_term(Key2{nq, 2 * (m + n)}, Integer(3 * m - n) * (km * kn));
    }
  }
  Series2 twice = sum * eta_power(-4, p - 4);
  Series2 half(twice.qprec());
  for (const auto &[k, c] : twice.terms()) {
    auto h = RingTraits<Integer>::exact_quotient(c, 2);
    if (!h) throw IdentityError("theta-sum for phi_{0,2} has an odd coefficient at " + key_string(k));
    half.add_term(k, *h);
  }
  return JacobiForm(0, 4, half.truncated(p), GeneratorPolynomial::symbol(2));
}

JacobiForm build_phi01(std::int64_t p) {
  QSeries2 s = xi_ab(0, 0, p) * xi_ab(0, 0, p) + xi_ab(1, 0, p) * xi_ab(1, 0, p) +
               xi_ab(0, 1, p) * xi_ab(0, 1, p);
  return JacobiForm(0, 2, to_integer_series(s.scaled(4)).truncated(p), GeneratorPolynomial::symbol(1));
}

JacobiForm build(Generator g, std::int64_t p);

struct Cache {
  std::mutex mu;
  std::map<Generator, JacobiForm> forms;
};

Cache &cache() {
  static Cache c;
  return c;
}

JacobiForm build(Generator g, std::int64_t p) {
  using GP = GeneratorPolynomial;
  switch (g) {
  case Generator::PhiM1Half:
    return JacobiForm(-2, 1, theta_product(p + 3).exact_div(eta_power(3, p + 3)).truncated(p));
  case Generator::Phi032:
    return JacobiForm(0, 3, theta_of_kz(p + 3, 2).exact_div(theta_product(p + 3)).truncated(p));
  case Generator::Phi01:
    return build_phi01(p);
  case Generator::Phi02:
    return build_phi02(p);
  case Generator::Phi03: {
    JacobiForm h = generator(Generator::Phi032, p);
    return JacobiForm(0, 6, (h.series * h.series).truncated(p), GP::symbol(3));
  }
  case Generator::Phi04:
    return JacobiForm(0, 8, theta_of_kz(p + 3, 3).exact_div(theta_product(p + 3)).truncated(p),
                      GP::symbol(4));
  case Generator::Phi06: {
    auto f = generator(Generator::Phi02, p) * generator(Generator::Phi04, p) -
             generator(Generator::Phi03, p).pow(2);
    return f.truncated(p);
  }
  case Generator::Phi08: {
    auto f = generator(Generator::Phi02, p) * generator(Generator::Phi06, p) -
             generator(Generator::Phi04, p).pow(2);
    return f.truncated(p);
  }
  case Generator::Phi012: {
    auto f = generator(Generator::Phi04, p) * generator(Generator::Phi08, p) -
             generator(Generator::Phi06, p).pow(2).scaled(2);
    return f.truncated(p);
  }
  case Generator::Xi06: {
    const std::int64_t q = std::max<std::int64_t>(p - 21, 4);
    Series2 t12 = theta_product(q).pow(12);
    Series2 xi = t12.exact_div(eta_power(12, p + 12)).truncated(p);
    GP poly = -(GP::symbol(1).pow(2) * GP::symbol(4)) + GP::symbol(1) * GP::symbol(2) * GP::symbol(3).scaled(9) -
              GP::symbol(2).pow(3).scaled(8) - GP::symbol(3).pow(2).scaled(27);
    return JacobiForm(0, 12, xi, poly);
  }
  }
  throw ValidationError("unknown generator");
}

} // namespace

Generator generator_from_name(const std::string &name) {
  static const std::map<std::string, Generator> table = {
      {"phi-11/2", Generator::PhiM1Half}, {"phim1half", Generator::PhiM1Half},
      {"phi032", Generator::Phi032},      {"phi03/2", Generator::Phi032},
      {"phi01", Generator::Phi01},        {"phi02", Generator::Phi02},
      {"phi03", Generator::Phi03},        {"phi04", Generator::Phi04},
      {"phi06", Generator::Phi06},        {"phi08", Generator::Phi08},
      {"phi012", Generator::Phi012},      {"xi06", Generator::Xi06},
  };
  auto it = table.find(normalize_name(name));
  if (it == table.end()) throw ParseError("unknown generator '" + name + "'");
  return it->second;
}

std::string generator_name(Generator g) {
  switch (g) {
  case Generator::PhiM1Half: return "phi_{-1,1/2}";
  case Generator::Phi032: return "phi_{0,3/2}";
  case Generator::Phi01: return "phi_{0,1}";
  case Generator::Phi02: return "phi_{0,2}";
  case Generator::Phi03: return "phi_{0,3}";
  case Generator::Phi04: return "phi_{0,4}";
  case Generator::Phi06: return "phi_{0,6}";
  case Generator::Phi08: return "phi_{0,8}";
  case Generator::Phi012: return "phi_{0,12}";
  case Generator::Xi06: return "xi_{0,6}";
  }
  return "?";
}

JacobiForm theta_jacobi(std::int64_t qprec) { return JacobiForm(1, 1, theta_product(qprec)); }

Series2 theta_jacobi_sum(std::int64_t qprec) {
  Series2 r(qprec);
  for (std::int64_t m = 1; 3 * m * m < qprec; m += 2) {
    r.add_term(Key2{3 * m * m, 2 * m}, kronecker(-4, m));
    r.add_term(Key2{3 * m * m, -2 * m}, kronecker(-4, -m));
  }
  return r;
}

Series2 theta_ab(int a, int b, std::int64_t qprec) {
  if ((a != 0 && a != 1) || (b != 0 && b != 1)) throw ValidationError("theta characteristic must be 0 or 1");
  Series2 r(qprec);
  for (std::int64_t n = 0;; ++n) {
    bool any = false;
    for (std::int64_t m : {n, -n - 1}) {
      std::int64_t x = 2 * m + a;
      if (3 * x * x >= qprec) continue;
      any = true;
      r.add_term(Key2{3 * x * x, 2 * x}, (b == 1 && (m & 1)) ? -1 : 1);
    }
    if (!any) break;
  }
  return r;
}

QSeries2 xi_ab(int a, int b, std::int64_t qprec) {
  if (a == 1 && b == 1) throw ValidationError("xi_{11} is undefined: theta_{11}(tau,0) = 0");
  const std::int64_t p = qprec + (a == 1 ? 3 : 0);
  QSeries2 num = to_rational_series(theta_ab(a, b, p));
  QSeries2 den = to_rational_series(theta_constant(a, b, p));
  return num.exact_div(den).truncated(qprec);
}

JacobiForm generator(Generator g, std::int64_t qprec) {
  if (qprec < 24) throw PrecisionError("generator expansions need qprec >= 24 (one full q-order)");
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto it = cache().forms.find(g);
    if (it != cache().forms.end() && it->second.qprec() >= qprec) return it->second.truncated(qprec);
  }
  JacobiForm f = build(g, qprec);
  std::lock_guard<std::mutex> lock(cache().mu);
  auto &slot = cache().forms[g];
  if (slot.series.empty() || slot.qprec() < f.qprec()) slot = f;
  return f;
}

JacobiForm evaluate(const GeneratorPolynomial &p, std::int64_t qprec) {
  Integer den = 1;
  for (const auto &[e, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  const int index = p.index();
  if (index < 0 && !p.is_zero()) throw ValidationError("generator polynomial " + p.to_string() + " is not homogeneous");
  const Generator gens[4] = {Generator::Phi01, Generator::Phi02, Generator::Phi03, Generator::Phi04};
  std::map<std::pair<int, int>, Series2> powers;
  std::function<const Series2 &(int, int)> power = [&](int i, int k) -> const Series2 & {
    auto key = std::make_pair(i, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Series2 s = k == 1 ? generator(gens[i], qprec).series : power(i, k - 1) * generator(gens[i], qprec).series;
    return powers.emplace(key, std::move(s)).first->second;
  };
  Series2 acc(qprec);
  for (const auto &[e, c] : p.terms()) {
    Series2 term = Series2::one(qprec);
    for (int i = 0; i < 4; ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    Integer coef = c.get_num() * (den / c.get_den());
    acc += term.scaled(coef);
  }
  if (den != 1) {
    Series2 q(acc.qprec());
    for (const auto &[k, c] : acc.terms()) {
      auto v = RingTraits<Integer>::exact_quotient(c, den);
      if (!v)
        throw DivisibilityError("polynomial " + p.to_string() + " does not evaluate to an integral form (at " +
                                key_string(k) + ")");
      q.add_term(k, *v);
    }
    acc = std::move(q);
  }
  return JacobiForm(0, 2 * std::max(index, 0), acc, p);
}

Series2 to_integer_series(const QSeries2 &a) {
  Series2 r(a.qprec());
  for (const auto &[k, c] : a.terms()) {
    if (c.get_den() != 1) throw DivisibilityError("non-integral coefficient " + c.get_str() + " at " + key_string(k));
    r.add_term(k, c.get_num());
  }
  return r;
}

QSeries2 to_rational_series(const Series2 &a) {
  QSeries2 r(a.qprec());
  for (const auto &[k, c] : a.terms()) r.add_term(k, Rational(c));
  return r;
}

} // namespace jacobi
