#include "jacobi/suites.hpp"

#include <map>
#include <random>

#include <fmt/format.h>

#include "jacobi/basis.hpp"
#include "jacobi/generators.hpp"
#include "jacobi/hecke.hpp"
#include "jacobi/lifts.hpp"
#include "jacobi/taylor.hpp"

namespace jacobi {

namespace {

template <class S> Finding compare(const std::string &label, const S &a, const S &b) {
  auto diff = a.first_difference(b);
  Finding f;
  f.check = label;
  f.pass = !diff;
  f.detail = diff ? "first difference at " + key_string(*diff)
                  : fmt::format("agree below qprec {}", std::min(a.qprec(), b.qprec()));
  return f;
}

Finding flag(const std::string &label, bool pass, std::string detail = {}) {
  Finding f;
  f.check = label;
  f.pass = pass;
  f.detail = std::move(detail);
  return f;
}

JacobiForm gen(Generator g, std::int64_t qprec) { return generator(g, qprec); }

Report ring_suite(std::int64_t qmax) {
  const std::int64_t qp = kQDen * qmax;
  auto p1 = gen(Generator::Phi01, qp), p2 = gen(Generator::Phi02, qp), p3 = gen(Generator::Phi03, qp),
       p4 = gen(Generator::Phi04, qp);
  Report r;
  r.push_back(compare("4 phi04 = phi01 phi03 - phi02^2", p4.scaled(4).series, (p1 * p3 - p2 * p2).series));
  JacobiForm rhs = -(p1 * p1 * p4) + (p1 * p2 * p3).scaled(9) - p2.pow(3).scaled(8) - (p3 * p3).scaled(27);
  r.push_back(compare("xi06 = -phi01^2 phi04 + 9 phi01 phi02 phi03 - 8 phi02^3 - 27 phi03^2",
                      gen(Generator::Xi06, qp).series, rhs.series));
  return r;
}

std::string vec_text(const std::vector<Integer> &v) {
  std::string s;
  for (const auto &x : v) s += (s.empty() ? "" : ",") + x.get_str();
  return "[" + s + "]";
}

Report basis_suite(std::int64_t qmax) {
  const std::int64_t qp = kQDen * std::max<std::int64_t>(qmax, 2);
  Report r;
  for (int m = 1; m <= 12; ++m) {
    bool shape = true, lemma = true;
    std::string bad;
    for (int n = 1; n <= m; ++n) {
      JacobiForm psi = basis_psi(m, n, qp);
      auto v = q0_vector(psi);
      bool ok = true;
      if (n == 1) {
        ok = v[1] == Integer(m / std::gcd(12, m));
        for (int k = 2; k <= m; ++k) ok = ok && sgn(v[k]) == 0;
      } else if (n == 2) {
        ok = v[0] == 6 && v[1] == -4 && v[2] == 1;
        for (int k = 3; k <= m; ++k) ok = ok && sgn(v[k]) == 0;
      } else {
        ok = v[n] == 1;
        for (int k = 2; k <= m; ++k)
          if (k != n) ok = ok && sgn(v[k]) == 0;
      }
      if (!ok && bad.empty()) bad = fmt::format("psi({},{}) q^0 = {}", m, n, vec_text(v));
      shape = shape && ok;
      auto [r1, r2] = lemma110_residuals(psi);
      if (sgn(r1) != 0 || sgn(r2) != 0) {
        lemma = false;
        if (bad.empty()) bad = fmt::format("psi({},{}) residuals {}, {}", m, n, r1.get_str(), r2.get_str());
      }
    }
    r.push_back(flag(fmt::format("basis index {} leading structure", m), shape, shape ? "" : bad));
    r.push_back(flag(fmt::format("basis index {} Taylor residuals", m), lemma, lemma ? "" : bad));
  }
  auto v5 = q0_vector(basis_psi(5, 1, qp));
  r.push_back(flag("psi(5,1) q^0 = 5y + 2 + 5/y", v5[0] == 2 && v5[1] == 5, vec_text(v5)));
  return r;
}

Report hecke_suite(std::int64_t qmax) {
  const std::int64_t qp = kQDen * qmax;
  auto p1 = gen(Generator::Phi01, 3 * qp), p2 = gen(Generator::Phi02, qp), p3 = gen(Generator::Phi03, qp);
  Report r;
  JacobiForm lhs = hecke_Tminus(p1, 2) - p2.scaled(2);
  r.push_back(compare("phi01|T-(2) - 2 phi02 = phi01^2 - 20 phi02", lhs.series,
                      (p1.truncated(qp) * p1.truncated(qp) - p2.scaled(20)).series));
  JacobiForm t3 = hecke_Tminus(p1, 3) - p3.scaled(3);
  r.push_back(compare("phi01|T-(3) - 3 phi03 = psi(3,3)", t3.series, basis_psi(3, 3, qp).series));
  return r;
}

Report congruence_suite(std::int64_t qmax) {
  Report r;
  std::mt19937_64 rng(20240601);
  std::map<std::string, std::pair<int, int>> tally;
  std::map<std::string, std::string> first_bad;
  const std::int64_t qp = kQDen * std::max<std::int64_t>(qmax, 5);
  for (int i = 0; i < 200; ++i) {
    const int m = 1 + i % 8;
    JacobiForm f = random_form(m, qp, rng);
    for (const auto &fd : divisibility_report(f)) {
      auto &t = tally[fd.check];
      ++t.second;
      if (fd.pass)
        ++t.first;
      else if (!first_bad.count(fd.check))
        first_bad[fd.check] = fmt::format("form {} index {}: {}", i, m, fd.detail);
    }
  }
  for (const auto &[name, t] : tally) {
    std::string detail = fmt::format("{}/{} random forms", t.first, t.second);
    if (first_bad.count(name)) detail += "; " + first_bad[name];
    r.push_back(flag("random forms: " + name, t.first == t.second, detail));
  }
  for (auto &fd : special_value_suite(kQDen * std::max<std::int64_t>(qmax, 6))) r.push_back(fd);
  return r;
}

Report lift_suite(std::int64_t qmax) {
  const std::int64_t n = std::max<std::int64_t>(qmax, 2);
  const std::int64_t qp = kQDen * (n * n + 2);
  Report r;
  auto p1 = gen(Generator::Phi01, qp), p2 = gen(Generator::Phi02, qp), p3 = gen(Generator::Phi03, qp);
  auto same = [&](const std::string &label, const SiegelSeries &a, const SiegelSeries &b) {
    auto diff = a.first_difference(b);
    r.push_back(flag(label, !diff,
                     diff ? "first difference at " + key_string(*diff)
                          : fmt::format("agree below qprec {} sprec {}", std::min(a.qprec(), b.qprec()),
                                        std::min(a.sprec(), b.sprec()))));
  };
  same("exp_lift(phi02) = Delta2 sum", exp_lift(p2, n, n), arithmetic_lift(ArithmeticLift::Delta2, n + 1, n + 1));
  same("exp_lift(phi03) = Delta1 sum", exp_lift(p3, n, n), arithmetic_lift(ArithmeticLift::Delta1, n + 1, n + 1));
  same("exp_lift(2 phi01) = 2^-12 prod theta^2", exp_lift(p1.scaled(2), n, n), theta_product(n + 1, n + 1));

  CYInvariants k3(2, {2, -20, 2});
  same("K3: anomaly * SQEG = exp_lift(-genus)", e_form(k3, n, n), exp_lift(p1.scaled(-2), n, n));
  CYInvariants m3(3, {0, 1, -1, 0}), w3(3, {0, -1, 1, 0});
  same("E(M3) E(mirror) = 1", e_form(m3, n, n) * e_form(w3, n, n), SiegelSeries(Series3::one()));

  auto div3 = humbert_divisor(gen(Generator::Phi06, kQDen * 4).scaled(-1));
  std::string d3;
  for (const auto &h : div3) d3 += fmt::format("({},{}):{} ", h.D, h.b, h.multiplicity.get_str());
  r.push_back(flag("Phi3 divisor H1(0) - H1(5)",
                   div3.size() == 2 && div3[0].b == 1 && div3[0].multiplicity == 1 && div3[1].b == 5 &&
                       div3[1].multiplicity == -1,
                   d3));
  for (auto &f : delta11_identity_check(std::min<std::int64_t>(n, 3), std::min<std::int64_t>(n, 3)))
    r.push_back(f);
  return r;
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"ring", "basis", "hecke", "congruences", "lifts"};
  return names;
}

Report run_suite(const std::string &name, std::int64_t qmax) {
  if (qmax < 1) throw ValidationError("qmax must be at least 1");
  if (name == "all") {
    Report all;
    for (const auto &s : suite_names())
      for (auto &f : run_suite(s, qmax)) all.push_back(std::move(f));
    return all;
  }
  if (name == "ring") return ring_suite(qmax);
  if (name == "basis") return basis_suite(qmax);
  if (name == "hecke") return hecke_suite(qmax);
  if (name == "congruences") return congruence_suite(qmax);
  if (name == "lifts") return lift_suite(qmax);
  throw ValidationError("unknown suite '" + name + "'");
}

} // namespace jacobi
