#include "jacobi/hecke.hpp"

#include <cmath>

#include "jacobi/modular.hpp"

namespace jacobi {

namespace {

void require_weight0_integral(const JacobiForm &phi, const char *op) {
  if (phi.weight2 != 0 || !phi.integral_index())
    throw ValidationError(std::string(op) + " needs a weight-0 form of integral index");
  for (const auto &[k, c] : phi.series.terms())
    if (k.nq % 24 != 0 || k.ly % 4 != 0)
      throw ValidationError(std::string(op) + " needs integral exponents; found " + key_string(k));
}

} // namespace

JacobiForm hecke_Tminus(const JacobiForm &phi, int m) {
  require_weight0_integral(phi, "T_-(m)");
  if (m < 1) throw ValidationError("Hecke index must be positive");
  const std::int64_t qin = phi.qprec();
  const std::int64_t qout = qin >= kInf ? kInf : (qin + m - 1) / m;
  Series2 out(qout);
  for (const auto &[k, c] : phi.series.terms()) {
    const std::int64_t n = k.nq / 24, l = k.ly / 4;
    for (std::int64_t a = 1; a <= m; ++a) {
      if (m % a != 0 || (n * a) % m != 0) continue;
      const std::int64_t big_n = n * a * a / m;
      out.add_term(Key2{24 * big_n, 4 * l * a}, c * (m / a));
    }
  }
  // qout is in 1/24 units; rows beyond it were fed by truncated input
  return JacobiForm(0, phi.index2 * m, out.truncated(qout));
}

std::map<std::int64_t, Integer> norm_coefficients(const JacobiForm &phi) {
  require_weight0_integral(phi, "norm_coefficients");
  const std::int64_t t = phi.index();
  std::map<std::int64_t, Integer> g;
  const std::int64_t nmax = phi.qprec() >= kInf ? phi.series.max_nq() / 24 + 1 : (phi.qprec() + 23) / 24;
  // every (n, l) in range is visited so that zero coefficients are checked too
  std::int64_t lmax = 0;
  for (const auto &[k, c] : phi.series.terms()) lmax = std::max(lmax, std::abs(k.ly / 4));
  for (std::int64_t n = 0; n < nmax && 24 * n < phi.qprec(); ++n) {
    for (std::int64_t l = -lmax; l <= lmax; ++l) {
      const std::int64_t norm = 4 * t * n - l * l;
      Integer c = phi.coeff(n, 2 * l);
      auto it = g.find(norm);
      if (it == g.end()) {
        g.emplace(norm, c);
      } else if (it->second != c) {
        throw ValidationError("coefficients are not determined by the norm: f(" + std::to_string(n) + "," +
                              std::to_string(l) + ") differs at norm " + std::to_string(norm));
      }
    }
  }
  return g;
}

JacobiForm hecke_T0_2(const JacobiForm &phi) {
  auto g = norm_coefficients(phi);
  const std::int64_t t = phi.index();
  if (t <= 0) throw ValidationError("T_0(2) needs positive index");
  const std::int64_t nin = phi.qprec() >= kInf ? phi.series.max_nq() / 24 + 1 : (phi.qprec() + 23) / 24;
  std::int64_t minnorm = 0;
  for (const auto &[norm, c] : g)
    if (sgn(c) != 0) minnorm = std::min(minnorm, norm);

  // g(x): nullopt if x is representable but lies beyond the input precision.
  auto lookup = [&](std::int64_t x) -> std::optional<Integer> {
    std::optional<std::int64_t> best;
    for (std::int64_t l = 0; l < 2 * t; ++l) {
      std::int64_t v = x + l * l;
      if (((v % (4 * t)) + 4 * t) % (4 * t) != 0) continue;
      std::int64_t n = v / (4 * t);
      if (!best || n < *best) best = n;
    }
    if (!best || *best < 0) return Integer(0);
    if (*best >= nin) return std::nullopt;
    auto it = g.find(x);
    return it == g.end() ? Integer(0) : it->second;
  };

  Series2 out(kInf);
  std::int64_t n = 0;
  for (;; ++n) {
    bool ok = true;
    Series2 row(kInf);
    const std::int64_t lmax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(4 * t * n - minnorm))) + 1;
    for (std::int64_t l = -lmax; l <= lmax && ok; ++l) {
      const std::int64_t big_n = 4 * t * n - l * l;
      Integer v = 0;
      auto a = lookup(4 * big_n);
      if (!a) { ok = false; break; }
      v += 8 * *a;
      int kr = kronecker(-big_n, 2);
      if (kr != 0) {
        auto b = lookup(big_n);
        if (!b) { ok = false; break; }
        v += 2 * kr * *b;
      }
      if (big_n % 4 == 0) {
        auto c = lookup(big_n / 4);
        if (!c) { ok = false; break; }
        v += *c;
      }
      row.add_term(Key2{24 * n, 4 * l}, v);
    }
    if (!ok) break;
    out += row;
  }
  return JacobiForm(0, phi.index2, out.truncated(24 * n));
}

} // namespace jacobi
