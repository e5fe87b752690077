#pragma once

// One-variable q-series: Kronecker symbols, eta products, G2 and theta
// constants. All results are Series2 with no y-dependence.

#include <cstdint>
#include <utility>
#include <vector>

#include "jacobi/series.hpp"

namespace jacobi {

/// Kronecker symbol (a/n), extended to n <= 0 and even n.
int kronecker(std::int64_t a, std::int64_t n);

/// Sum of divisors of n > 0.
Integer sigma1(std::int64_t n);

/// Coefficients of Π_{n>=1} (1 - q^n)^r for q^0 .. q^{count-1}.
std::vector<Integer> euler_power(std::int64_t r, std::int64_t count);

/// η(τ)^r; exact below nq < qprec (1/24 units).
Series2 eta_power(std::int64_t r, std::int64_t qprec);

/// Factors (scale, power) of Π η(scale·τ)^power.
struct EtaQuotientSpec {
  std::vector<std::pair<std::int64_t, std::int64_t>> factors;
  EtaQuotientSpec negated() const;
};

Series2 eta_quotient(const EtaQuotientSpec &spec, std::int64_t qprec);

/// G2(τ) = -1/24 + Σ σ1(n) q^n.
QSeries2 g2_series(std::int64_t qprec);

/// ϑ_{ab}(τ) = Σ_n (-1)^{bn} q^{(n+a/2)^2/2}.
Series2 theta_constant(int a, int b, std::int64_t qprec);

/// Δ(τ) = η(τ)^24.
Series2 delta_series(std::int64_t qprec);

/// f(kτ) for a y-free series f; precision scales by k.
template <class C> Series<Key2, C> rescale_q(const Series<Key2, C> &f, std::int64_t k) {
  Series<Key2, C> r(f.qprec() >= kInf ? kInf : f.qprec() * k, kInf, f.ring_param());
  for (const auto &[key, c] : f.terms()) r.add_term(Key2{key.nq * k, key.ly}, c);
  return r;
}

} // namespace jacobi
