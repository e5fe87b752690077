#include "jacobi/modular.hpp"

#include <cstdlib>

namespace jacobi {

namespace {

int jacobi_symbol(std::int64_t a, std::int64_t n) {
  // n odd and positive
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a > 0) == (b > 0))) ++q;
  return q;
}

} // namespace

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    std::int64_t r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  return result * jacobi_symbol(a, n);
}

Integer sigma1(std::int64_t n) {
  Integer s = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += d;
    if (d != n / d) s += n / d;
  }
  return s;
}

std::vector<Integer> euler_power(std::int64_t r, std::int64_t count) {
  // a_k = -(r/k) Σ_{j=1}^{k} σ1(j) a_{k-j}, from the logarithmic derivative
  std::vector<Integer> a(std::max<std::int64_t>(count, 0), 0);
  if (count <= 0) return a;
  a[0] = 1;
  std::vector<Integer> sig(count);
  for (std::int64_t j = 1; j < count; ++j) sig[j] = sigma1(j);
  for (std::int64_t k = 1; k < count; ++k) {
    Integer s = 0;
    for (std::int64_t j = 1; j <= k; ++j) s += sig[j] * a[k - j];
    s *= -r;
    a[k] = s / k;
  }
  return a;
}

Series2 eta_power(std::int64_t r, std::int64_t qprec) {
  return eta_quotient(EtaQuotientSpec{{{1, r}}}, qprec);
}

EtaQuotientSpec EtaQuotientSpec::negated() const {
  EtaQuotientSpec s = *this;
  for (auto &f : s.factors) f.second = -f.second;
  return s;
}

Series2 eta_quotient(const EtaQuotientSpec &spec, std::int64_t qprec) {
  std::int64_t lead = 0;
  for (const auto &[scale, power] : spec.factors) {
    if (scale <= 0) throw ValidationError("eta quotient scale must be positive");
    lead += scale * power;
  }
  // number of integral q-steps needed above the leading exponent
  const std::int64_t count = std::max<std::int64_t>(ceil_div(qprec - lead, 24), 0);
  std::vector<Integer> acc(count, 0);
  if (count > 0) acc[0] = 1;
  for (const auto &[scale, power] : spec.factors) {
    if (power == 0 || count == 0) continue;
    auto base = euler_power(power, (count - 1) / scale + 1);
    std::vector<Integer> next(count, 0);
    for (std::int64_t i = 0; i < count; ++i) {
      if (sgn(acc[i]) == 0) continue;
      for (std::size_t j = 0; i + static_cast<std::int64_t>(j) * scale < count && j < base.size(); ++j)
        next[i + j * scale] += acc[i] * base[j];
    }
    acc = std::move(next);
  }
  Series2 r(qprec);
  for (std::int64_t i = 0; i < count; ++i) r.add_term(Key2{lead + 24 * i, 0}, acc[i]);
  return r;
}

QSeries2 g2_series(std::int64_t qprec) {
  QSeries2 r(qprec);
  r.add_term(Key2{0, 0}, Rational(-1, 24));
  for (std::int64_t n = 1; 24 * n < qprec; ++n) r.add_term(Key2{24 * n, 0}, Rational(sigma1(n)));
  return r;
}

Series2 theta_constant(int a, int b, std::int64_t qprec) {
  if ((a != 0 && a != 1) || (b != 0 && b != 1)) throw ValidationError("theta characteristic must be 0 or 1");
  Series2 r(qprec);
  for (std::int64_t n = 0;; ++n) {
    bool any = false;
    for (std::int64_t m : {n, -n - 1}) {
      std::int64_t x = 2 * m + a;
      std::int64_t nq = 3 * x * x;
      if (nq >= qprec) continue;
      any = true;
      r.add_term(Key2{nq, 0}, (b == 1 && (m & 1)) ? -1 : 1);
    }
    if (!any) break;
  }
  return r;
}

Series2 delta_series(std::int64_t qprec) { return eta_power(24, qprec); }

} // namespace jacobi
