#include "jacobi/reports.hpp"

#include <mutex>

#include <fmt/format.h>

#include "jacobi/generators.hpp"
#include "jacobi/modular.hpp"
#include "jacobi/series_io.hpp"
#include "jacobi/specialize.hpp"

namespace jacobi {

Json to_json(const Report &r) {
  Json out = Json::array();
  for (const auto &f : r) {
    Json j;
    j["check"] = f.check;
    j["status"] = f.pass ? "pass" : "fail";
    if (sgn(f.modulus) != 0) j["modulus"] = f.modulus.get_str();
    if (!f.detail.empty()) j["detail"] = f.detail;
    if (f.verified_orders > 0) j["verified_orders"] = f.verified_orders;
    out.push_back(std::move(j));
  }
  return out;
}

bool all_pass(const Report &r) {
  for (const auto &f : r)
    if (!f.pass) return false;
  return true;
}

namespace {

Integer power_of(long base, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::string modulus_text(long base, int e) { return e == 0 ? "1" : fmt::format("{}^{}", base, e); }

bool divides(const Integer &m, const Integer &v) { return mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t()) != 0; }

// "value = k*c + p^e q(...)": constant divisible by k, every q^n (n >= 1) by p^e.
Finding pattern(const std::string &label, const Series2 &s, long k, long base, int e) {
  Finding f;
  const Integer tail = power_of(base, e);
  f.modulus = tail;
  const Integer c0 = s.coefficient(Key2{0, 0});
  bool ok = divides(Integer(k), c0);
  std::string bad;
  for (const auto &[key, c] : s.terms()) {
    if (key.nq == 0) continue;
    if (key.nq % 24 != 0 || key.nq < 0) {
      ok = false;
      bad = "non-integral q-power " + key_string(key);
      break;
    }
    if (!divides(tail, c)) {
      ok = false;
      bad = fmt::format("q^{} coefficient {} not divisible by {}", key.nq / 24, c.get_str(), modulus_text(base, e));
      break;
    }
  }
  f.verified_orders = s.qprec() >= kInf ? 0 : (s.qprec() - 1) / 24;
  f.check = fmt::format("{}: {}c + {} q(...)", label, k, modulus_text(base, e));
  f.pass = ok;
  if (!divides(Integer(k), c0)) bad = fmt::format("constant {} not divisible by {}", c0.get_str(), k);
  f.detail = ok ? fmt::format("c = {}, tail verified to order {}", Integer(c0 / k).get_str(), f.verified_orders)
                : bad;
  return f;
}

Finding mod_check(const std::string &label, const Integer &v, long m) {
  Finding f;
  f.check = label;
  f.modulus = m;
  f.pass = divides(Integer(m), v);
  f.detail = "value " + v.get_str();
  return f;
}

// Σ over each q-row of the coefficients; all rows beyond q^0 must vanish.
std::pair<Integer, bool> value_at_zero(const JacobiForm &phi) {
  std::map<std::int64_t, Integer> rows;
  for (const auto &[k, c] : phi.series.terms()) rows[k.nq] += c;
  bool constant = true;
  for (const auto &[nq, v] : rows)
    if (nq != 0 && sgn(v) != 0) constant = false;
  return {rows.count(0) ? rows[0] : Integer(0), constant};
}

} // namespace

Report divisibility_report(const JacobiForm &phi, bool cy_genus) {
  if (phi.weight2 != 0) throw ValidationError("divisibility report needs weight 0");
  Report out;
  const int d = phi.index2;
  auto [e, constant] = value_at_zero(phi);
  out.push_back(Finding{"value at z=0 is constant", constant, "e = " + e.get_str(), 0, 0});
  if (d % 2 == 0) {
    out.push_back(mod_check("d*e = 0 mod 24", e * d, 24));
  } else if (d > 3) {
    out.push_back(mod_check("(d-3)*e = 0 mod 48", e * (d - 3), 48));
  }
  const bool strong = cy_genus && d % 8 == 2;
  if (strong) {
    auto f = mod_check("e = 0 mod 8 (applies when c1 = 0 over Z)", e, 8);
    out.push_back(f);
  }
  if (d % 2 != 0) return out;
  const int m = d / 2;
  const std::int64_t qprec = phi.qprec();
  if (qprec <= 24) return out;

  Series2 half = specialize_torsion(phi, 2, qprec);
  static const long half_k[4] = {1, 8, 2, 16};
  static const int half_e[4] = {13, 8, 12, 9};
  out.push_back(pattern(fmt::format("z=1/2, index {} = {} mod 4", m, m % 4), half, half_k[m % 4], 2, half_e[m % 4]));
  if (strong) out.push_back(pattern("z=1/2, dimension 2 mod 8", half, 16, 2, 9));

  Series2 third = specialize_torsion(phi, 3, qprec);
  static const long third_k[3] = {1, 9, 3};
  static const int third_e[3] = {6, 4, 3};
  out.push_back(
      pattern(fmt::format("z=1/3, index {} = {} mod 3", m, m % 3), third, third_k[m % 3], 3, third_e[m % 3]));

  Series2 quarter = specialize_torsion(phi, 4, qprec);
  if (m % 4 == 2) out.push_back(pattern(fmt::format("z=1/4, index {} = 2 mod 4", m), quarter, 4, 2, 5));
  if (m % 4 == 3) out.push_back(pattern(fmt::format("z=1/4, index {} = 3 mod 4", m), quarter, 2, 2, 3));
  if (strong) out.push_back(pattern("z=1/4, dimension 2 mod 8", quarter, 4, 2, 4));
  return out;
}

Report divisibility_report(const CYInvariants &inv, std::int64_t qprec) {
  Report out;
  for (const auto &r : relation_check(inv))
    out.push_back(Finding{r.relation, r.pass, "residual " + r.residual.get_str(), 0, 0});
  if (!all_pass(out)) return out;
  auto genus = divisibility_report(elliptic_genus(inv, qprec), true);
  out.insert(out.end(), genus.begin(), genus.end());
  return out;
}

JacobiForm random_form(int m, std::int64_t qprec, std::mt19937_64 &rng, int bound) {
  if (m < 1) throw ValidationError("random form needs index >= 1");
  static std::mutex mu;
  static std::map<std::pair<int, std::int64_t>, std::vector<JacobiForm>> cache;
  std::vector<JacobiForm> monomials;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[{m, qprec}];
    if (slot.empty()) {
      const Generator g[4] = {Generator::Phi01, Generator::Phi02, Generator::Phi03, Generator::Phi04};
      for (int a = 0; a <= m; ++a)
        for (int b = 0; a + 2 * b <= m; ++b)
          for (int c = 0; a + 2 * b + 3 * c <= m; ++c) {
            int rest = m - a - 2 * b - 3 * c;
            if (rest % 4 != 0) continue;
            int e[4] = {a, b, c, rest / 4};
            JacobiForm f(0, 0, Series2::constant(Integer(1), qprec), GeneratorPolynomial(Rational(1)));
            for (int i = 0; i < 4; ++i)
              if (e[i] > 0) f = f * generator(g[i], qprec).pow(e[i]);
            slot.push_back(f.truncated(qprec));
          }
    }
    monomials = slot;
  }
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (;;) {
    JacobiForm acc(0, 2 * m, Series2(qprec), GeneratorPolynomial());
    bool any = false;
    for (const auto &mono : monomials) {
      int c = dist(rng);
      if (c == 0) continue;
      any = true;
      acc = acc + mono.scaled(c);
    }
    if (any && !acc.series.empty()) return acc;
  }
}

namespace {

Finding equality(const std::string &label, const Series2 &a, const Series2 &b) {
  Finding f;
  f.check = label;
  f.pass = a.agrees_with(b);
  const std::int64_t p = std::min(a.qprec(), b.qprec());
  f.verified_orders = p >= kInf ? 0 : (p - 1) / 24;
  if (f.pass)
    f.detail = p >= kInf ? "exact" : "verified below q^" + exponent_string(p, kQDen);
  else
    f.detail = "first difference at " + key_string(*a.first_difference(b));
  return f;
}

Series2 constant(long c, std::int64_t qprec) { return Series2::constant(Integer(c), qprec); }

Series2 halved(const Series2 &a) {
  Series2 r(a.qprec());
  for (const auto &[k, c] : a.terms()) {
    if (!mpz_divisible_ui_p(c.get_mpz_t(), 2)) throw IdentityError("odd coefficient at " + key_string(k));
    r.add_term(k, Integer(c / 2));
  }
  return r;
}

Finding positivity(const std::string &label, const Series2 &a) {
  Finding f;
  f.check = label;
  f.pass = true;
  for (const auto &[k, c] : a.terms())
    if (sgn(c) <= 0) {
      f.pass = false;
      f.detail = "non-positive coefficient at " + key_string(k);
      break;
    }
  f.verified_orders = a.qprec() >= kInf ? 0 : (a.qprec() - 1) / 24;
  for (std::int64_t n = 0; f.pass && n <= f.verified_orders; ++n)
    if (sgn(a.coefficient(Key2{24 * n, 0})) == 0) {
      f.pass = false;
      f.detail = fmt::format("missing q^{} coefficient", n);
    }
  return f;
}

Finding congruent_to(const std::string &label, const Series2 &a, long c, const Integer &m) {
  Finding f;
  f.check = label;
  f.modulus = m;
  Series2 d = a - Series2::constant(Integer(c), a.qprec());
  f.pass = true;
  for (const auto &[k, v] : d.terms())
    if (!divides(m, v)) {
      f.pass = false;
      f.detail = "fails at " + key_string(k);
      break;
    }
  f.verified_orders = a.qprec() >= kInf ? 0 : (a.qprec() - 1) / 24;
  return f;
}

Series2 eta_q(std::initializer_list<std::pair<std::int64_t, std::int64_t>> factors, std::int64_t qprec) {
  return eta_quotient(EtaQuotientSpec{std::vector<std::pair<std::int64_t, std::int64_t>>(factors)}, qprec);
}

} // namespace

Report special_value_suite(std::int64_t qprec) {
  Report out;
  const JacobiForm p1 = generator(Generator::Phi01, qprec);
  const JacobiForm p2 = generator(Generator::Phi02, qprec);
  const JacobiForm p3 = generator(Generator::Phi03, qprec);
  const JacobiForm p4 = generator(Generator::Phi04, qprec);
  const JacobiForm xi = generator(Generator::Xi06, qprec);

  out.push_back(equality("phi01(tau,0) = 12", specialize_torsion(p1, 1), constant(12, qprec)));
  out.push_back(equality("phi02(tau,0) = 6", specialize_torsion(p2, 1), constant(6, qprec)));
  out.push_back(equality("phi03(tau,0) = 4", specialize_torsion(p3, 1), constant(4, qprec)));
  out.push_back(equality("phi04(tau,0) = 3", specialize_torsion(p4, 1), constant(3, qprec)));

  const Series2 alpha = specialize_torsion(p1, 2);
  const Series2 beta = specialize_torsion(p2, 3);
  const Series2 gamma = halved(specialize_torsion(p3, 4));

  Series2 alpha_golden(std::min<std::int64_t>(qprec, 24 * 6));
  const long alpha_coeffs[6] = {8, 256, 2048, 11264, 49152, 183808};
  for (int n = 0; n < 6; ++n)
    if (24 * n < alpha_golden.qprec()) alpha_golden.add_term(Key2{24 * n, 0}, Integer(alpha_coeffs[n]));
  out.push_back(equality("alpha = 8 + 2^8q + 2^11q^2 + 11*2^10q^3 + 3*2^14q^4 + 359*2^9q^5", alpha, alpha_golden));

  out.push_back(equality("phi02(tau,1/2) = 2", specialize_torsion(p2, 2), constant(2, qprec)));
  out.push_back(equality("phi03(tau,1/2) = 0", specialize_torsion(p3, 2), Series2(qprec)));
  out.push_back(equality("phi04(tau,1/2) = -1", specialize_torsion(p4, 2), constant(-1, qprec)));
  out.push_back(equality("phi01(tau,1/3) = beta^2", specialize_torsion(p1, 3), beta * beta));
  out.push_back(equality("phi03(tau,1/3) = 1", specialize_torsion(p3, 3), constant(1, qprec)));
  out.push_back(equality("phi04(tau,1/3) = 0", specialize_torsion(p4, 3), Series2(qprec)));
  out.push_back(equality("gamma*phi01(tau,1/4) = 8gamma^4 + 2", gamma * specialize_torsion(p1, 4),
                         gamma.pow(4).scaled(Integer(8)) + constant(2, qprec)));
  out.push_back(equality("phi02(tau,1/4) = 4gamma^2", specialize_torsion(p2, 4), (gamma * gamma).scaled(Integer(4))));
  out.push_back(equality("phi04(tau,1/4) = 1", specialize_torsion(p4, 4), constant(1, qprec)));

  const Series2 d2 = eta_q({{2, 24}, {1, -24}}, qprec).scaled(Integer(4096));
  const Series2 d3 = eta_q({{3, 12}, {1, -12}}, qprec).scaled(Integer(729));
  const Series2 d4 = eta_q({{4, 12}, {2, -12}}, qprec).scaled(Integer(64));
  const Series2 d6 = eta_q({{1, 12}, {6, 12}, {2, -12}, {3, -12}}, qprec);
  out.push_back(equality("xi06(tau,1/2) = 2^12 Delta(2tau)/Delta(tau)", specialize_torsion(xi, 2), d2));
  out.push_back(equality("xi06(tau,1/3) = 3^6 (Delta(3tau)/Delta(tau))^(1/2)", specialize_torsion(xi, 3), d3));
  out.push_back(equality("xi06(tau,1/4) = 2^6 (Delta(4tau)/Delta(2tau))^(1/2)", specialize_torsion(xi, 4), d4));
  out.push_back(equality("xi06(tau,1/6) = (Delta(tau)Delta(6tau)/(Delta(2tau)Delta(3tau)))^(1/2)",
                         specialize_torsion(xi, 6), d6));

  out.push_back(equality("alpha^2 - 64 = 2^12 Delta(2tau)/Delta(tau)", alpha * alpha - constant(64, qprec), d2));
  out.push_back(equality("beta^3 - 27 = 3^6 eta(3tau)^12/eta(tau)^12", beta.pow(3) - constant(27, qprec), d3));
  out.push_back(equality("gamma^2 * 2^6 (Delta(4tau)/Delta(2tau))^(1/2) = 4(gamma^4 - 1)", gamma * gamma * d4,
                         (gamma.pow(4) - constant(1, qprec)).scaled(Integer(4))));
  out.push_back(equality("gamma^4 - 1 = 2^4 eta(4tau)^8/eta(tau)^8", gamma.pow(4) - constant(1, qprec),
                         eta_q({{4, 8}, {1, -8}}, qprec).scaled(Integer(16))));
  out.push_back(equality("alpha = 16gamma^4 - 8", alpha, gamma.pow(4).scaled(Integer(16)) - constant(8, qprec)));
  out.push_back(congruent_to("alpha - 8 = 0 mod 2^8", alpha, 8, Integer(256)));
  out.push_back(congruent_to("beta - 3 = 0 mod 3^3", beta, 3, Integer(27)));

  const std::int64_t half_prec = (qprec + 1) / 2;
  const Series2 t00 = rescale_q(theta_constant(0, 0, half_prec), 2);
  const Series2 t01 = rescale_q(theta_constant(0, 1, half_prec), 2);
  out.push_back(equality("gamma * theta01(2tau) = theta00(2tau)", gamma * t01, t00));
  out.push_back(positivity("alpha has positive coefficients", alpha));
  out.push_back(positivity("gamma has positive coefficients", gamma));

  const Series2 h1 = specialize_center(p1);
  out.push_back(equality("center value of phi02 = -2", specialize_center(p2), constant(-2, kInf)));
  out.push_back(equality("center value of phi03 = 0", specialize_center(p3), Series2(kInf)));
  out.push_back(equality("center value of phi04 = -1", specialize_center(p4), constant(-1, kInf)));
  const Series2 t = theta_constant(0, 0, h1.qprec() + 12) * eta_power(-1, h1.qprec() + 12);
  out.push_back(equality("phi01 center^2 + 64 = (theta00/eta)^12", h1 * h1 + constant(64, kInf), t.pow(12)));
  return out;
}

} // namespace jacobi
