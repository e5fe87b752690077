#include "jacobi/elliptic_genus.hpp"

#include <fmt/format.h>

#include "jacobi/basis.hpp"
#include "jacobi/decompose.hpp"
#include "jacobi/generators.hpp"

namespace jacobi {

CYInvariants::CYInvariants(int d_, std::vector<Integer> chi_) : d(d_), chi(std::move(chi_)) {
  if (d < 0) throw ValidationError("dimension must be non-negative");
  if (chi.size() != static_cast<std::size_t>(d) + 1)
    throw ValidationError(fmt::format("expected {} values chi_0..chi_{}, got {}", d + 1, d, chi.size()));
  for (int p = 0; p <= d; ++p) {
    Integer mirror = (d % 2 == 0) ? chi[d - p] : Integer(-chi[d - p]);
    if (chi[p] != mirror)
      throw ValidationError(fmt::format("Serre symmetry fails: chi_{} = {} but (-1)^d chi_{} = {}", p,
                                        chi[p].get_str(), d - p, mirror.get_str()));
  }
}

Integer CYInvariants::euler() const {
  Integer e = 0;
  for (int p = 0; p <= d; ++p) e += (p % 2 == 0) ? chi[p] : Integer(-chi[p]);
  return e;
}

CYInvariants CYInvariants::from_hodge(int d, const std::vector<std::vector<Integer>> &h) {
  if (h.size() != static_cast<std::size_t>(d) + 1) throw ValidationError("Hodge table must have d+1 rows");
  std::vector<Integer> chi(d + 1, 0);
  for (int p = 0; p <= d; ++p) {
    if (h[p].size() != static_cast<std::size_t>(d) + 1) throw ValidationError("Hodge table must have d+1 columns");
    for (int q = 0; q <= d; ++q) chi[p] += (q % 2 == 0) ? h[p][q] : Integer(-h[p][q]);
  }
  return CYInvariants(d, std::move(chi));
}

namespace {

Integer json_integer(const Json &v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    Integer r;
    if (r.set_str(v.get<std::string>(), 10) != 0) throw ParseError("not an integer: " + v.dump());
    return r;
  }
  throw ParseError("expected an integer, got " + v.dump());
}

} // namespace

CYInvariants cy_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("d") || !j.at("d").is_number_integer())
    throw ParseError("invariants payload needs an integer 'd'");
  const int d = j.at("d").get<int>();
  if (d < 0 || d > 64) throw ValidationError("dimension out of range");
  if (j.contains("chi")) {
    if (!j.at("chi").is_array()) throw ParseError("'chi' must be an array");
    std::vector<Integer> chi;
    for (const auto &v : j.at("chi")) chi.push_back(json_integer(v));
    return CYInvariants(d, std::move(chi));
  }
  if (j.contains("hodge")) {
    if (!j.at("hodge").is_array()) throw ParseError("'hodge' must be an array of rows");
    std::vector<std::vector<Integer>> h;
    for (const auto &row : j.at("hodge")) {
      if (!row.is_array()) throw ParseError("'hodge' rows must be arrays");
      auto &r = h.emplace_back();
      for (const auto &v : row) r.push_back(json_integer(v));
    }
    return CYInvariants::from_hodge(d, h);
  }
  throw ParseError("invariants payload needs 'chi' or 'hodge'");
}

Json to_json(const CYInvariants &inv) {
  Json j;
  j["d"] = inv.d;
  Json chi = Json::array();
  for (const auto &c : inv.chi) chi.push_back(c.get_str());
  j["chi"] = std::move(chi);
  j["euler"] = inv.euler().get_str();
  return j;
}

namespace {

// q^0-row of the genus divided by φ_{0,3/2} for odd d, as y^0..y^m coefficients.
struct ReducedRow {
  int m = 0;
  std::vector<Integer> q0;
  Integer overflow = 0;
};

ReducedRow reduce(const CYInvariants &inv) {
  const int d = inv.d;
  ReducedRow r;
  auto term = [&](int p) { return (p % 2 == 0) ? inv.chi[p] : Integer(-inv.chi[p]); };
  if (d % 2 == 0) {
    r.m = d / 2;
    for (int k = 0; k <= r.m; ++k) r.q0.push_back(term(r.m - k));
    return r;
  }
  // P(u) = Σ term(p) u^{d-2p} with u = y^{1/2}; Q = P / (u + 1/u)
  std::map<int, Integer> q;
  auto qat = [&](int e) { auto it = q.find(e); return it == q.end() ? Integer(0) : it->second; };
  for (int e = d; e >= -d + 2; e -= 2) q[e - 1] = term((d - e) / 2) - qat(e + 1);
  r.m = (d - 3) / 2;
  r.overflow = qat(d - 1);
  for (int k = 0; k <= r.m; ++k) r.q0.push_back(qat(2 * k));
  return r;
}

struct Solution {
  std::vector<Integer> x;
  Rational constant_residual;
  Integer y_remainder;
  Integer y_modulus = 1;
};

Solution solve(const ReducedRow &row) {
  Solution s;
  const int m = row.m;
  s.x.assign(m + 1, 0);
  if (m == 0) {
    s.x[0] = row.q0[0];
    return s;
  }
  std::vector<Rational> r(row.q0.begin(), row.q0.end());
  for (int n = m; n >= 1; --n) {
    auto basis = q0_vector(basis_psi(m, n, 24));
    Rational xn;
    if (n >= 2) {
      xn = r[n];
      s.x[n] = r[n].get_num();
    } else {
      s.y_modulus = basis[1];
      xn = r[1] / Rational(basis[1]);
      s.y_remainder = r[1].get_num() % basis[1];
      s.x[1] = xn.get_num() / xn.get_den();
    }
    for (int k = 0; k <= m; ++k) r[k] -= xn * Rational(basis[k]);
  }
  s.constant_residual = r[0];
  return s;
}

Rational frac(const Integer &n, long d) {
  Rational r(n, Integer(d));
  r.canonicalize();
  return r;
}

RelationResult linear(std::string name, const Rational &residual) {
  return RelationResult{std::move(name), sgn(residual) == 0, residual};
}

RelationResult congruence(std::string name, const Integer &value, long modulus) {
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return RelationResult{std::move(name), sgn(r) == 0, Rational(r)};
}

} // namespace

std::vector<RelationResult> relation_check(const CYInvariants &inv) {
  std::vector<RelationResult> out;
  const int d = inv.d;
  const auto &c = inv.chi;
  const Integer e = inv.euler();
  Rational sum = 0;
  for (int p = 0; p <= d; ++p) {
    Rational w = frac(Integer(d - 2 * p) * Integer(d - 2 * p), 4);
    sum += (p % 2 == 0 ? Rational(c[p]) : Rational(-c[p])) * w;
  }
  out.push_back(linear("e*d/12 = sum (-1)^p chi_p (d/2-p)^2", frac(e * d, 12) - sum));
  if (d % 2 == 0)
    out.push_back(congruence("d*e = 0 mod 24", e * d, 24));
  else if (d > 3)
    out.push_back(congruence("(d-3)*e = 0 mod 48", e * (d - 3), 48));
  if (d % 2 == 1) out.push_back(linear("chi0 = 0", Rational(c[0])));
  switch (d) {
  case 4:
    out.push_back(linear("chi2 = 22chi0 - 4chi1", Rational(c[2] - 22 * c[0] + 4 * c[1])));
    out.push_back(congruence("e = 0 mod 6", e, 6));
    break;
  case 5:
    out.push_back(linear("chi1 = -e/24", Rational(c[1]) + frac(e, 24)));
    out.push_back(linear("chi2 = 11e/24", Rational(c[2]) - frac(11 * e, 24)));
    out.push_back(congruence("e = 0 mod 24", e, 24));
    break;
  case 6:
    out.push_back(linear("-chi3 = 34chi0 - 14chi1 + 2chi2", Rational(c[3] + 34 * c[0] - 14 * c[1] + 2 * c[2])));
    out.push_back(congruence("e = 0 mod 4", e, 4));
    break;
  case 7:
    out.push_back(linear("e = 12(chi2 - 3chi1)", Rational(e - 12 * (c[2] - 3 * c[1]))));
    out.push_back(congruence("e = 0 mod 12", e, 12));
    break;
  case 8:
    out.push_back(
        linear("chi4 = 46chi0 - 25chi1 + 10chi2 - chi3", Rational(c[4] - 46 * c[0] + 25 * c[1] - 10 * c[2] + c[3])));
    out.push_back(congruence("e = 0 mod 3", e, 3));
    break;
  case 10:
    out.push_back(linear("-chi5 = 58chi0 - 36chi1 + 20chi2 - 8chi3 + 2/5(chi4 + chi3 - chi2 - chi1)",
                         Rational(-c[5] - 58 * c[0] + 36 * c[1] - 20 * c[2] + 8 * c[3]) -
                             frac(2 * (c[4] + c[3] - c[2] - c[1]), 5)));
    break;
  default:
    break;
  }
  if (d >= 2 && d <= 13) {
    ReducedRow row = reduce(inv);
    if (sgn(row.overflow) == 0) {
      Solution s = solve(row);
      out.push_back(linear("q^0-term realized by a weak form", s.constant_residual));
      out.push_back(congruence("integral coordinates (y-coefficient mod " + s.y_modulus.get_str() + ")",
                               s.y_remainder, s.y_modulus.get_si()));
    }
  }
  return out;
}

JacobiForm elliptic_genus(const CYInvariants &inv, std::int64_t qprec, std::optional<Integer> xi6_coefficient) {
  const int d = inv.d;
  if (d < 2 || d > 13) throw ValidationError(fmt::format("elliptic genus is supported for 2 <= d <= 13, got d = {}", d));
  if (d == 12 && !xi6_coefficient)
    throw ValidationError("d = 12: the q^0-term leaves a multiple of xi_{0,6} undetermined; pass xi6_coefficient");
  if (d != 12 && xi6_coefficient) throw ValidationError("xi6_coefficient only applies to d = 12");

  auto checks = relation_check(inv);
  std::string hard, soft;
  for (const auto &r : checks) {
    if (r.pass) continue;
    std::string item = r.relation + " (residual " + r.residual.get_str() + ")";
    bool is_congruence = r.relation.find(" mod ") != std::string::npos;
    std::string &target = is_congruence ? soft : hard;
    target += (target.empty() ? "" : "; ") + item;
  }
  if (!hard.empty())
    throw IdentityError("chi-vector is inconsistent: " + hard + (soft.empty() ? "" : "; also " + soft));
  if (!soft.empty()) throw DivisibilityError("chi-vector violates " + soft);

  ReducedRow row = reduce(inv);
  Solution s = solve(row);
  const int m = row.m;
  JacobiForm body;
  if (m == 0) {
    body = JacobiForm(0, 0, Series2::constant(s.x[0], qprec));
  } else {
    Series2 acc(qprec);
    GeneratorPolynomial poly;
    for (int n = 1; n <= m; ++n) {
      if (sgn(s.x[n]) == 0) continue;
      acc += basis_psi(m, n, qprec).series.scaled(s.x[n]);
      poly += basis_polynomial(m, n).scaled(Rational(s.x[n]));
    }
    if (xi6_coefficient && sgn(*xi6_coefficient) != 0) {
      JacobiForm xi = generator(Generator::Xi06, qprec);
      acc += xi.series.scaled(*xi6_coefficient);
      poly += xi.poly->scaled(Rational(*xi6_coefficient));
    }
    body = JacobiForm(0, 2 * m, acc, poly.integral_form());
  }
  if (d % 2 == 0) return body;
  JacobiForm f = generator(Generator::Phi032, qprec) * body;
  f.poly.reset();
  return f.truncated(qprec);
}

CYInvariants chi_y_polynomial(const JacobiForm &phi) {
  if (phi.weight2 != 0) throw ValidationError("chi_y data is defined for weight 0");
  const int d = phi.index2;
  if (d < 0) throw ValidationError("negative index");
  std::vector<Integer> chi(d + 1, 0);
  for (const auto &[k, c] : phi.series.row(0)) {
    if ((k.ly - 2 * d) % 4 != 0 || k.ly > 2 * d || k.ly < -2 * d)
      throw ValidationError("q^0-term has y-power " + key_string(k) + " outside the index range");
  }
  for (int p = 0; p <= d; ++p) {
    Integer v = phi.series.coefficient(Key2{0, 2 * d - 4 * p});
    chi[p] = (p % 2 == 0) ? v : Integer(-v);
  }
  return CYInvariants(d, std::move(chi));
}

} // namespace jacobi
