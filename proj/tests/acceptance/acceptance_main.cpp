#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "jacobi/basis.hpp"
#include "jacobi/elliptic_genus.hpp"
#include "jacobi/generators.hpp"
#include "jacobi/hecke.hpp"
#include "jacobi/lifts.hpp"
#include "jacobi/modular.hpp"
#include "jacobi/reports.hpp"
#include "jacobi/specialize.hpp"
#include "jacobi/suites.hpp"
#include "jacobi/taylor.hpp"

using namespace jacobi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string &what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
  void note(const std::string &what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

JacobiForm gen(Generator g, std::int64_t qprec) { return generator(g, qprec); }

Series2 rows(const JacobiForm &f, std::int64_t below) {
  Series2 r(kInf);
  for (const auto &[k, c] : f.series.terms())
    if (k.nq < below) r.add_term(k, c);
  return r;
}

template <class S> bool agree(const S &a, const S &b) { return !a.first_difference(b); }

Outcome c1_goldens() {
  Outcome o;
  const std::int64_t qp = 24 * 2;
  auto sym = [](std::int64_t nq, std::initializer_list<std::pair<int, long>> half) {
    Series2 s(kInf);
    for (auto [l, c] : half) {
      s.add_term(Key2{nq, 4 * l}, Integer(c));
      if (l != 0) s.add_term(Key2{nq, -4 * l}, Integer(c));
    }
    return s;
  };
  struct Golden {
    const char *name;
    Generator g;
    Series2 expect;
  };
  std::vector<Golden> goldens{
      {"phi01", Generator::Phi01, sym(0, {{1, 1}, {0, 10}}) + sym(24, {{2, 10}, {1, -64}, {0, 108}})},
      {"phi02", Generator::Phi02, sym(0, {{1, 1}, {0, 4}}) + sym(24, {{3, 1}, {2, -8}, {1, -1}, {0, 16}})},
      {"phi03", Generator::Phi03, sym(0, {{1, 1}, {0, 2}}) + sym(24, {{3, -2}, {2, -2}, {1, 2}, {0, 4}})},
      {"phi04", Generator::Phi04, sym(0, {{1, 1}, {0, 1}}) + sym(24, {{4, -1}, {3, -1}, {1, 1}, {0, 2}})},
  };
  for (const auto &g : goldens) {
    Series2 got = rows(gen(g.g, qp), qp);
    o.require(got == g.expect, std::string(g.name) + " rows differ");
  }
  if (o.pass) o.note("q^0 and q^1 rows of phi01..phi04 exact");
  return o;
}

Outcome c2_ring() {
  Outcome o;
  for (const auto &f : run_suite("ring", 10)) o.require(f.pass, f.check + " " + f.detail);
  if (o.pass) o.note("both relations through q^10");
  return o;
}

Outcome c3_basis() {
  Outcome o;
  for (const auto &f : run_suite("basis", 2))
    if (f.check.find("Taylor") == std::string::npos) o.require(f.pass, f.check + " " + f.detail);
  if (o.pass) o.note("m <= 12, all n; psi(5,1) q^0 = 5y + 2 + 5/y");
  return o;
}

Outcome c4_taylor() {
  Outcome o;
  const std::int64_t qp = 24 * 2;
  int count = 0;
  auto check = [&](const JacobiForm &f, const std::string &label) {
    auto [r1, r2] = lemma110_residuals(f);
    ++count;
    o.require(sgn(r1) == 0 && sgn(r2) == 0, fmt::format("{}: ({}, {})", label, r1.get_str(), r2.get_str()));
  };
  for (auto g : {Generator::Phi01, Generator::Phi02, Generator::Phi03, Generator::Phi04, Generator::Phi06,
                 Generator::Phi08, Generator::Phi012, Generator::Xi06})
    check(gen(g, qp), generator_name(g));
  for (int m = 1; m <= 12; ++m)
    for (int n = 1; n <= m; ++n) check(basis_psi(m, n, qp), fmt::format("psi({},{})", m, n));
  std::mt19937_64 rng(1009);
  for (int i = 0; i < 100; ++i) check(random_form(1 + i % 10, qp, rng), fmt::format("random #{}", i));
  if (o.pass) o.note(fmt::format("{} forms with residuals (0,0)", count));
  return o;
}

Outcome c5_hecke() {
  Outcome o;
  const std::int64_t qp = 24 * 6;
  auto p1 = gen(Generator::Phi01, 3 * qp), p2 = gen(Generator::Phi02, qp), p3 = gen(Generator::Phi03, qp);
  JacobiForm lhs = hecke_Tminus(p1, 2) - p2.scaled(2);
  JacobiForm rhs = p1.truncated(qp) * p1.truncated(qp) - p2.scaled(20);
  o.require(lhs.qprec() >= qp && agree(lhs.series, rhs.series), "T-(2) identity");
  JacobiForm t3 = hecke_Tminus(p1, 3) - p3.scaled(3);
  JacobiForm psi33 = evaluate(GeneratorPolynomial::parse("Phi1^3-30*Phi1*Phi2+117*Phi3"), qp);
  o.require(agree(t3.series, psi33.series), "T-(3) reading");
  if (o.pass) o.note("T-(2) through q^6; phi01|T-(3) - 3phi03 = phi01^3 - 30phi01phi02 + 117phi03 through q^6");
  return o;
}

Outcome c6_specialization() {
  Outcome o;
  const std::int64_t qp = 24 * 6;
  for (const auto &f : special_value_suite(qp)) o.require(f.pass, f.check + " " + f.detail);
  // The z = 1/4 value of xi06 against the literal right-hand side 2^6 (Delta(4tau)/Delta(tau))^(1/2).
  Series2 lhs = specialize_torsion(gen(Generator::Xi06, qp), 4);
  EtaQuotientSpec literal{{{4, 12}, {1, -12}}};
  Series2 rhs = eta_quotient(literal, qp).scaled(64);
  auto d = lhs.first_difference(rhs);
  o.require(!d, fmt::format("literal xi06(tau,1/4) = 2^6 (Delta(4tau)/Delta(tau))^(1/2) fails at {} "
                            "(lhs starts {}q^{}, rhs starts at q^{}); 2^6 (Delta(4tau)/Delta(2tau))^(1/2) holds",
                            d ? key_string(*d) : "-", lhs.coefficient(Key2{lhs.min_nq(), 0}).get_str(),
                            exponent_string(lhs.min_nq(), kQDen), exponent_string(rhs.min_nq(), kQDen)));
  return o;
}

Outcome c7_congruences() {
  Outcome o;
  for (const auto &f : run_suite("congruences", 5))
    if (f.check.rfind("random forms:", 0) == 0) o.require(f.pass, f.check + " " + f.detail);
  std::mt19937_64 rng(20240601);
  int forms = 0, literal_ok = 0, weak_ok = 0;
  std::string first;
  for (int i = 0; i < 200; ++i) {
    const int m = 1 + i % 8;
    if (m % 4 != 3) continue;
    JacobiForm f = random_form(m, 24 * 5, rng);
    Series2 v = specialize_torsion(f, 4, 24 * 5);
    ++forms;
    bool lit = mpz_even_p(v.coefficient(Key2{0, 0}).get_mpz_t()), weak = lit;
    for (int n = 1; n <= 4; ++n) {
      Integer c = v.coefficient(Key2{24 * n, 0});
      lit = lit && mpz_divisible_2exp_p(c.get_mpz_t(), 8);
      weak = weak && mpz_divisible_2exp_p(c.get_mpz_t(), 3);
    }
    literal_ok += lit;
    weak_ok += weak;
    if (!lit && first.empty()) first = fmt::format("first failure index {}: tail coefficient q^1 = {}", m,
                                                    v.coefficient(Key2{24, 0}).get_str());
  }
  Series2 p3 = specialize_torsion(gen(Generator::Phi03, 24 * 3), 4);
  o.require(literal_ok == forms,
            fmt::format("literal phi_{{0,4m+3}}(tau,1/4) = 2c + 2^8 q(...) holds for {}/{} forms ({}; "
                        "phi03(tau,1/4) = 2 + {}q + ...); 2c + 2^3 q(...) holds for {}/{}",
                        literal_ok, forms, first, p3.coefficient(Key2{24, 0}).get_str(), weak_ok, forms));
  // CY genera in dimension 8m + 2 at z = 1/4: 4c + 2^4 q(...).
  for (int k = 1; k <= 3; ++k) {
    JacobiForm g = gen(Generator::Phi01, 24 * 5).scaled(2 * k);
    Report r = divisibility_report(g, true);
    for (const auto &f : r) o.require(f.pass, "K3 multiple: " + f.check);
  }
  return o;
}

Outcome c8_cy() {
  Outcome o;
  const std::int64_t qp = 24 * 3;
  auto p1 = gen(Generator::Phi01, qp);
  o.require(same_form(elliptic_genus(CYInvariants(2, {2, -20, 2}), qp), p1.scaled(2)), "K3");
  o.require(same_form(elliptic_genus(CYInvariants(2, {1, -10, 1}), qp), p1), "Enriques");

  bool d4_enforced = false, mod6_named = false;
  try {
    elliptic_genus(CYInvariants(4, {1, 0, 1, 0, 1}), qp);
  } catch (const IdentityError &e) {
    std::string w = e.what();
    d4_enforced = w.find("chi2 = 22chi0 - 4chi1") != std::string::npos;
    mod6_named = w.find("e = 0 mod 6") != std::string::npos;
  }
  o.require(d4_enforced, "d=4 relation not enforced");
  o.require(mod6_named, "d=4 mod 6 rejection not reported");

  // d = 5, e = 24.
  CYInvariants m5(5, {0, -1, 11, -11, 1, 0});
  const Integer e5 = m5.euler();
  bool m5_ok = true;
  for (const auto &r : relation_check(m5)) m5_ok = m5_ok && r.pass;
  o.require(m5_ok && e5 == 24, "d=5 vector with e = 24 rejected");
  o.require(m5.chi[2] * 24 == 11 * e5, "chi2 = 11e/24");
  o.require(m5.chi[1] * 24 == e5,
            fmt::format("literal chi1 = e/24 fails: e = {} forces chi1 = {} (chi1 = -e/24)", e5.get_str(),
                        m5.chi[1].get_str()));
  bool rejected = false;
  try {
    elliptic_genus(CYInvariants(5, {0, 0, 1, -1, 0, 0}), qp);
  } catch (const IdentityError &e) {
    rejected = std::string(e.what()).find("e = 0 mod 24") != std::string::npos;
  }
  o.require(rejected, "d=5 with 24 not dividing e accepted");

  // d = 7: the genus phi_{0,3/2} psi(2,2) has chi1 != 0.
  JacobiForm g7 = gen(Generator::Phi032, qp) * basis_psi(2, 2, qp);
  CYInvariants m7 = chi_y_polynomial(g7);
  const Integer e7 = m7.euler(), lit = 12 * (m7.chi[2] - 4 * m7.chi[1]), fixed = 12 * (m7.chi[2] - 3 * m7.chi[1]);
  o.require(e7 == fixed, "e = 12(chi2 - 3chi1)");
  o.require(e7 == lit, fmt::format("literal e(M7) = 12(chi2 - 4chi1) fails: chi = ({},{},{},{}) gives e = {}, "
                                   "formula {}; 12(chi2 - 3chi1) = {} holds",
                                   m7.chi[0].get_str(), m7.chi[1].get_str(), m7.chi[2].get_str(),
                                   m7.chi[3].get_str(), e7.get_str(), lit.get_str(), fixed.get_str()));
  return o;
}

Outcome c9_duals() {
  Outcome o;
  const std::int64_t qp = 24 * 10;
  auto p1 = gen(Generator::Phi01, qp), p2 = gen(Generator::Phi02, qp), p3 = gen(Generator::Phi03, qp);
  o.require(agree(exp_lift(p2, 3, 3), arithmetic_lift(ArithmeticLift::Delta2, 4, 4)), "Delta2");
  o.require(agree(exp_lift(p3, 3, 3), arithmetic_lift(ArithmeticLift::Delta1, 4, 4)), "Delta1");
  o.require(agree(exp_lift(p1.scaled(2), 2, 2), theta_product(3, 3)), "theta product");
  if (o.pass) o.note("Delta2, Delta1 to q,s <= 3; theta product to q,s <= 2");
  return o;
}

Outcome c10_factorization() {
  Outcome o;
  const std::int64_t qp = 24 * 6;
  CYInvariants k3(2, {2, -20, 2}), m4(4, {1, 4, 6, 4, 1});
  for (const auto &inv : {k3, m4}) {
    JacobiForm genus = elliptic_genus(inv, qp);
    auto d = e_form(inv, 2, 2).first_difference(exp_lift(genus.scaled(-1), 2, 2));
    o.require(!d, fmt::format("d={} first difference at {}", inv.d, d ? key_string(*d) : ""));
  }
  if (o.pass) o.note("K3 and chi = (1,4,6,4,1) to q,s <= 2");
  return o;
}

Outcome c11_sqeg() {
  Outcome o;
  JacobiForm k3 = gen(Generator::Phi01, 24 * 6).scaled(2);
  Series2 p1 = symmetric_product_genus(k3, 1, 24 * 3);
  o.require(agree(p1, k3.series.truncated(24 * 3)), "p^1 coefficient");
  // Π(1 - p^n)^{-24}: 1, 24, 324, 3200.
  const std::vector<long> expect{1, 24, 324, 3200};
  Series3 s = sqeg(k3, 3, 24 * 2);
  for (int n = 0; n <= 3; ++n) {
    std::map<std::int64_t, Integer> at_y1;
    for (const auto &[k, c] : s.terms())
      if (k.ms() == 24 * n) at_y1[k.nq] += c;
    for (const auto &[nq, c] : at_y1)
      o.require(c == (nq == 0 ? Integer(expect[n]) : Integer(0)),
                fmt::format("p^{} q-exponent {} at y=1: {}", n, exponent_string(nq, kQDen), c.get_str()));
    if (!at_y1.count(0)) o.require(expect[n] == 0, fmt::format("p^{} missing", n));
  }
  if (o.pass) o.note("y=1 gives 1, 24, 324, 3200 with no q-dependence");
  return o;
}

Outcome c12_humbert() {
  Outcome o;
  auto text = [](const std::vector<HumbertDatum> &v) {
    std::string s;
    for (const auto &h : v) s += fmt::format("H{}({}):{} ", h.D, h.b, h.multiplicity.get_str());
    return s;
  };
  auto d3 = humbert_divisor(gen(Generator::Phi06, 24 * 4).scaled(-1));
  o.require(d3.size() == 2 && d3[0].D == 1 && d3[0].b == 1 && d3[0].multiplicity == 1 && d3[1].D == 1 &&
                d3[1].b == 5 && d3[1].multiplicity == -1,
            "Phi3: " + text(d3));
  JacobiForm g5 = scale_z(gen(Generator::Phi032, 24 * 4) * gen(Generator::Phi01, 24 * 4), 2).scaled(-1);
  auto d5 = humbert_divisor(g5);
  std::multiset<long> m5;
  for (const auto &h : d5) m5.insert(h.multiplicity.get_si());
  o.require(m5 == std::multiset<long>{1, -1, 12, -12}, "Phi5: " + text(d5));
  if (o.pass) o.note("Phi3 " + text(d3) + "| Phi5 " + text(d5));
  return o;
}

Outcome c13_homomorphism() {
  Outcome o;
  const std::int64_t qp = 24 * 6;
  JacobiForm phi = basis_psi(2, 1, qp), psi = basis_psi(2, 2, qp);
  int pairs = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      SiegelSeries lhs = exp_lift(phi.scaled(a) + psi.scaled(b), 2, 2);
      SiegelSeries rhs = exp_lift(phi.scaled(a), 2, 2) * exp_lift(psi.scaled(b), 2, 2);
      auto d = lhs.first_difference(rhs);
      ++pairs;
      o.require(!d, fmt::format("(a,b) = ({},{}) first difference at {}", a, b, d ? key_string(*d) : ""));
    }
  CYInvariants m(3, {0, 1, -1, 0}), w(3, {0, -1, 1, 0});
  o.require(m.euler() == -2 && w.euler() == 2, "mirror Euler numbers");
  o.require((e_form(m, 2, 2) * e_form(w, 2, 2)).agrees_with(SiegelSeries(Series3::one())), "mirror product");
  if (o.pass) o.note(fmt::format("{} (a,b) pairs on phi02, psi(2,2); mirror product = 1", pairs));
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"generator goldens", c1_goldens},
      {"ring relations", c2_ring},
      {"integral basis m <= 12", c3_basis},
      {"Taylor residuals", c4_taylor},
      {"Hecke identities", c5_hecke},
      {"specialization identities", c6_specialization},
      {"congruence battery", c7_congruences},
      {"CY layer", c8_cy},
      {"dual Siegel constructions", c9_duals},
      {"anomaly * SQEG factorization", c10_factorization},
      {"SQEG sanity", c11_sqeg},
      {"divisor data", c12_humbert},
      {"exp-lift homomorphism and mirror", c13_homomorphism},
  };
  int failed = 0, i = 0;
  for (const auto &[name, run] : criteria) {
    ++i;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::cout << fmt::format("{} {:>2} {} ({:.2f} s) {}\n", o.pass ? "PASS" : "FAIL", i, name, secs, o.detail);
  }
  std::cout << fmt::format("{}/{} criteria pass\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
