#include "jacobi/taylor.hpp"

#include "jacobi/generators.hpp"
#include "jacobi/modular.hpp"

namespace jacobi {

std::vector<QSeries2> taylor_coeffs(const JacobiForm &phi, int count, std::int64_t qprec) {
  if (!phi.integral_index()) throw ValidationError("Taylor coefficients need integral index");
  const std::int64_t p = std::min(qprec, phi.qprec());
  const std::int64_t m = phi.index();
  // moments g_j = Σ_l f(n,l) l^j / j! as q-series
  std::vector<QSeries2> moments(count, QSeries2(p));
  for (const auto &[k, c] : phi.series.terms()) {
    if (k.nq >= p) break;
    if (k.ly % 4 != 0) throw ValidationError("non-integral y-power " + key_string(k));
    const Integer l = k.ly / 4;
    Rational term(c);
    for (int j = 0; j < count; ++j) {
      moments[j].add_term(Key2{k.nq, 0}, term);
      term = term * Rational(l) / (j + 1);
    }
  }
  // twist powers (2m G2)^k / k!
  QSeries2 twist = g2_series(p).scaled(Rational(2 * m));
  std::vector<QSeries2> tw(count / 2 + 1, QSeries2::one(p));
  for (std::size_t k = 1; k < tw.size(); ++k) tw[k] = (tw[k - 1] * twist).scaled(Rational(1, static_cast<long>(k)));
  std::vector<QSeries2> out;
  for (int n = 0; n < count; ++n) {
    QSeries2 f(p);
    for (int k = 0; 2 * k <= n; ++k) f += (tw[k] * moments[n - 2 * k]).truncated(p);
    out.push_back(f.truncated(p));
  }
  return out;
}

std::pair<Integer, Integer> lemma110_residuals(const JacobiForm &phi) {
  if (phi.weight2 != 0 || !phi.integral_index()) throw ValidationError("residuals need weight 0 and integral index");
  if (phi.qprec() < 48) throw PrecisionError("residuals need the q^1-row (qprec >= 48)");
  const Integer m = phi.index();
  Integer s0 = 0, s2 = 0, t1 = 0;
  for (const auto &[k, c] : phi.series.row(0)) {
    const Integer l = k.ly / 4;
    s0 += c;
    s2 += l * l * c;
  }
  for (const auto &[k, c] : phi.series.row(24)) {
    const Integer l = k.ly / 4;
    t1 += (m - 6 * l * l) * c;
  }
  return {m * s0 - 6 * s2, 24 * m * s0 - t1};
}

} // namespace jacobi
