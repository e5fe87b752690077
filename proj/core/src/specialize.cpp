#include "jacobi/specialize.hpp"

#include <map>

namespace jacobi {

Series2 specialize_torsion(const JacobiForm &phi, int n, std::int64_t qprec) {
  if (n != 1 && n != 2 && n != 3 && n != 4 && n != 6)
    throw ValidationError("torsion order must be one of 1, 2, 3, 4, 6");
  if (!phi.integral_index()) throw ValidationError("torsion specialization needs integral index");
  if (!phi.is_symmetric()) throw ValidationError("torsion specialization needs f(n,l) = f(n,-l)");
  const std::int64_t p = std::min(qprec, phi.qprec());
  std::map<std::int64_t, Cyclotomic> rows;
  for (const auto &[k, c] : phi.series.terms()) {
    if (k.nq >= p) break;
    if (k.ly % 4 != 0) throw ValidationError("non-integral y-power " + key_string(k));
    Cyclotomic v = Cyclotomic(n, c) * Cyclotomic::root_power(n, k.ly / 4);
    auto it = rows.find(k.nq);
    if (it == rows.end())
      rows.emplace(k.nq, v);
    else
      it->second += v;
  }
  Series2 out(p);
  for (const auto &[nq, v] : rows) {
    if (!v.is_rational_integer())
      throw IdentityError("specialization at z=1/" + std::to_string(n) + " has a non-rational component at q-exponent " +
                          std::to_string(nq) + "/24");
    out.add_term(Key2{nq, 0}, v.coords()[0]);
  }
  return out;
}

namespace {

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) return -1;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), Integer(std::to_string(v)).get_mpz_t());
  return r.get_si();
}

} // namespace

Series2 specialize_center(const JacobiForm &phi, std::int64_t qprec) {
  if (!phi.integral_index()) throw ValidationError("center specialization of half-integral index is not supported");
  if (phi.weight2 != 0) throw ValidationError("center specialization needs weight 0");
  const std::int64_t m = phi.index();
  // output exponent E = e/4 is exact while every weak-support (n,l) feeding it
  // has n below the input precision: (l-m)^2 <= m e + m^2, n = (e+2l-m)/4
  std::int64_t out_prec = kInf;
  if (phi.qprec() < kInf) {
    const std::int64_t pin = (phi.qprec() + 23) / 24;
    for (std::int64_t e = -m;; ++e) {
      std::int64_t u = isqrt(m * e + m * m);
      if (u < 0) continue;
      std::int64_t nmax = e + 2 * (m + u) - m;
      nmax = nmax >= 0 ? nmax / 4 : -((-nmax + 3) / 4);
      if (nmax >= pin) {
        out_prec = 6 * e;
        break;
      }
    }
  }
  out_prec = std::min(out_prec, qprec);
  Series2 out(out_prec);
  for (const auto &[k, c] : phi.series.terms()) {
    const std::int64_t l = k.ly / 4;
    const std::int64_t nq = k.nq - 12 * l + 6 * m;
    out.add_term(Key2{nq, 0}, (l % 2 == 0) ? c : Integer(-c));
  }
  return out;
}

} // namespace jacobi
