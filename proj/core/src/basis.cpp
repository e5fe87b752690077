#include "jacobi/basis.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "jacobi/generators.hpp"

namespace jacobi {

namespace {

using GP = GeneratorPolynomial;

GP phi(int m) {
  switch (m) {
  case 1: return GP::symbol(1);
  case 2: return GP::symbol(2);
  case 3: return GP::symbol(3);
  case 4: return GP::symbol(4);
  case 6: return GP::symbol(2) * GP::symbol(4) - GP::symbol(3).pow(2);
  case 8: return GP::symbol(2) * phi(6) - GP::symbol(4).pow(2);
  case 12: return GP::symbol(4) * phi(8) - phi(6).pow(2).scaled(2);
  default: throw ValidationError("no generator φ_{0," + std::to_string(m) + "}");
  }
}

std::mutex &memo_mutex() {
  static std::mutex mu;
  return mu;
}

GP tilde(int m) { return psi1_polynomial(m).scaled(std::gcd(12, m)); }

std::vector<Integer> q0_of(const GP &p, int m) {
  JacobiForm f = evaluate(p, 24);
  f.index2 = 2 * m;
  return q0_vector(f);
}

GP build_psi1(int m) {
  if (m == 1 || m == 2 || m == 3 || m == 4 || m == 6 || m == 8 || m == 12) return phi(m);
  const int d = std::gcd(12, m);
  const GP one_form = tilde(m - 4) * phi(4) + tilde(m - 2) * phi(2) - tilde(m - 3) * phi(3).scaled(2);
  const Rational third(1, 3);
  switch (d) {
  case 1: return one_form;
  case 2: return one_form.scaled(Rational(1, 2));
  case 3:
  case 6: {
    GP three = tilde(m - 3) * phi(3).scaled(Rational(2, 3)) + tilde(m - 6) * phi(6).scaled(third) -
               tilde(m - 4) * phi(4);
    return d == 3 ? three : three.scaled(Rational(1, 2));
  }
  case 4:
    return (tilde(m - 12) * phi(12) + tilde(m - 4) * phi(4) - tilde(m - 8) * phi(8)).scaled(Rational(1, 4));
  default:
    return tilde(m - 3) * phi(3).scaled(Rational(2, 3)) - tilde(m - 4) * phi(4).scaled(Rational(1, 2)) -
           tilde(m - 6) * phi(6).scaled(Rational(1, 6)) + tilde(m - 12) * phi(12).scaled(Rational(1, 12));
  }
}

GP build_raw(int m, int n) {
  if (n == 1) return psi1_polynomial(m);
  if (n == 2) {
    if (m <= 4) return psi2_variantB(m);
    return tilde(m - 3) * phi(3) - tilde(m - 4) * phi(4) - tilde(m);
  }
  if (n == m) return GP::symbol(1).pow(m);
  if (n == m - 1) return GP::symbol(1).pow(m - 2) * GP::symbol(2);
  return basis_polynomial(m - 3, n - 1) * GP::symbol(3);
}

} // namespace

std::vector<Integer> q0_vector(const JacobiForm &f) {
  if (!f.integral_index()) throw ValidationError("q0_vector needs an integral index");
  const int m = f.index();
  std::vector<Integer> v(m + 1, 0);
  for (const auto &[k, c] : f.series.row(0)) {
    if (k.ly % 4 != 0) throw ValidationError("q^0-row has a non-integral y-power");
    std::int64_t l = k.ly / 4;
    if (l < 0) continue;
    if (l > m) throw ValidationError("q^0-row exceeds y-degree of the index");
    v[l] = c;
  }
  return v;
}

GeneratorPolynomial psi1_polynomial(int m) {
  if (m < 1) throw ValidationError("index must be positive");
  static std::map<int, GP> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
  }
  GP p = build_psi1(m).integral_form();
  const int d = std::gcd(12, m);
  auto v = q0_of(p, m);
  if (v[1] != m / d || v[0] != (12 - 2 * m) / d)
    throw IdentityError("psi_" + std::to_string(m) + "^(1) has unexpected q^0-term");
  std::lock_guard<std::mutex> lock(memo_mutex());
  return memo.emplace(m, p).first->second;
}

GeneratorPolynomial basis_polynomial(int m, int n) {
  if (m < 1) throw ValidationError("index must be positive");
  if (n < 1 || n > m) throw ValidationError("basis element n=" + std::to_string(n) + " outside 1.." + std::to_string(m));
  static std::map<std::pair<int, int>, GP> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = memo.find({m, n});
    if (it != memo.end()) return it->second;
  }
  GP p = build_raw(m, n).integral_form();
  auto v = q0_of(p, m);
  if (n >= 3) {
    if (v[n] != 1) throw IdentityError("basis element is not monic at y^" + std::to_string(n));
    for (int k = n - 1; k >= 2; --k) {
      if (sgn(v[k]) == 0) continue;
      GP lower = basis_polynomial(m, k);
      p -= lower.scaled(Rational(v[k]));
      v = q0_of(p, m);
    }
    const Integer period = m / std::gcd(12, m);
    Integer f = floor_div(v[1], period);
    if (sgn(f) != 0) {
      p -= basis_polynomial(m, 1).scaled(Rational(f));
      v = q0_of(p, m);
    }
    p = p.integral_form();
  } else if (n == 2) {
    if (!(v[2] == 1 && v[1] == -4 && v[0] == 6))
      throw IdentityError("psi_" + std::to_string(m) + "^(2) does not have q^0-term y^2-4y+6-4y^-1+y^-2");
  }
  for (std::size_t k = n + 1; k < v.size(); ++k)
    if (sgn(v[k]) != 0) throw IdentityError("basis element has y-degree above " + std::to_string(n));
  std::lock_guard<std::mutex> lock(memo_mutex());
  return memo.emplace(std::make_pair(m, n), p).first->second;
}

JacobiForm basis_psi(int m, int n, std::int64_t qprec) {
  GP p = basis_polynomial(m, n);
  JacobiForm f = evaluate(p, qprec);
  f.index2 = 2 * m;
  return f;
}

GeneratorPolynomial psi2_variantA(int m) {
  switch (m) {
  case 2: return GP::symbol(1).pow(2) - GP::symbol(2).scaled(20);
  case 3: return GP::symbol(1) * GP::symbol(2) - GP::symbol(3).scaled(15);
  case 4: return GP::symbol(1) * GP::symbol(3) - GP::symbol(4).scaled(12);
  default: throw ValidationError("variant A of psi^(2) is defined for index 2..4");
  }
}

GeneratorPolynomial psi2_variantB(int m) {
  switch (m) {
  case 2: return GP::symbol(1).pow(2) - GP::symbol(2).scaled(24);
  case 3: return GP::symbol(1) * GP::symbol(2) - GP::symbol(3).scaled(18);
  case 4: return GP::symbol(1) * GP::symbol(3) - GP::symbol(4).scaled(16);
  default: throw ValidationError("variant B of psi^(2) is defined for index 2..4");
  }
}

} // namespace jacobi
