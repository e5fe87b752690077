#include "jacobi/decompose.hpp"

#include "jacobi/basis.hpp"
#include "jacobi/generators.hpp"

namespace jacobi {

JacobiForm divide_by_xi06(const JacobiForm &phi) {
  if (phi.weight2 != 0 || !phi.integral_index() || phi.index() < 6)
    throw ValidationError("division by xi_{0,6} needs weight 0 and integral index >= 6");
  if (!phi.series.row(0).empty()) throw ValidationError("division by xi_{0,6} needs a vanishing q^0-term");
  if (phi.series.empty()) return JacobiForm(0, phi.index2 - 12, Series2(std::max<std::int64_t>(prec_sub(phi.qprec(), 24), 0)));
  const std::int64_t p = std::max<std::int64_t>(phi.qprec() >= kInf ? phi.series.max_nq() + 48 : phi.qprec(), 24);
  Series2 xi = generator(Generator::Xi06, p).series;
  return JacobiForm(0, phi.index2 - 12, phi.series.exact_div(xi));
}

JacobiForm halfint_factor(const JacobiForm &phi) {
  if (phi.index2 % 2 == 0) throw ValidationError("halfint_factor needs a half-integral index");
  if (phi.weight2 % 2 != 0) throw ValidationError("halfint_factor needs integral weight");
  const std::int64_t p = std::max<std::int64_t>(phi.qprec() >= kInf ? phi.series.max_nq() + 24 : phi.qprec(), 24);
  if (phi.weight2 % 4 == 0) {
    Series2 d = generator(Generator::Phi032, p).series;
    return JacobiForm(phi.weight2, phi.index2 - 3, phi.series.exact_div(d));
  }
  Series2 d = generator(Generator::PhiM1Half, p).series;
  return JacobiForm(phi.weight2 + 2, phi.index2 - 1, phi.series.exact_div(d));
}

std::vector<Integer> q0_coordinates(const std::vector<Integer> &q0, int m) {
  std::vector<std::vector<Integer>> rows(m + 1);
  for (int n = 1; n <= m; ++n) rows[n] = q0_vector(basis_psi(m, n, 24));
  std::vector<Integer> x(m + 1, 0);
  std::vector<Integer> r = q0;
  for (int n = m; n >= 1; --n) {
    if (n >= 2) {
      x[n] = r[n];
    } else {
      const Integer &p = rows[1][1];
      if (!mpz_divisible_p(r[1].get_mpz_t(), p.get_mpz_t())) {
        throw DivisibilityError("q^0-term is not integral over the basis: residual y-coefficient " + r[1].get_str() +
                                " is not divisible by " + p.get_str() + " (index " + std::to_string(m) + ")");
      }
      x[1] = r[1] / p;
    }
    for (int k = 0; k <= m; ++k) r[k] -= x[n] * rows[n][k];
  }
  for (int k = 0; k <= m; ++k) {
    if (sgn(r[k]) != 0)
      throw DivisibilityError("q^0-term violates the weak-form relation: constant residual " + r[0].get_str() +
                              " (index " + std::to_string(m) + ")");
  }
  return x;
}

GeneratorPolynomial decompose(const JacobiForm &phi) {
  if (phi.weight2 != 0 || !phi.integral_index()) throw ValidationError("decompose needs weight 0 and integral index");
  const int m = phi.index();
  if (m < 0) throw ValidationError("negative index");
  const std::int64_t need = 24 * (m / 6 + 2);
  if (phi.qprec() < need)
    throw PrecisionError("decompose of index " + std::to_string(m) + " needs qprec >= " + std::to_string(need) +
                         " (1/24 units); got " + std::to_string(phi.qprec()));
  if (m == 0) {
    Integer c = phi.series.coefficient(Key2{0, 0});
    if (phi.series.size() > (sgn(c) != 0 ? 1u : 0u))
      throw DivisibilityError("index-0 weak form must be constant");
    return GeneratorPolynomial(Rational(c));
  }
  auto x = q0_coordinates(q0_vector(phi), m);
  GeneratorPolynomial poly;
  Series2 rest = phi.series;
  for (int n = 1; n <= m; ++n) {
    if (sgn(x[n]) == 0) continue;
    poly += basis_polynomial(m, n).scaled(Rational(x[n]));
    rest -= basis_psi(m, n, phi.qprec()).series.scaled(x[n]);
  }
  if (!rest.empty()) {
    if (m < 6)
      throw DivisibilityError("form of index " + std::to_string(m) +
                              " is not determined by its q^0-term; it is not a weak Jacobi form");
    JacobiForm quotient = divide_by_xi06(JacobiForm(0, 2 * m, rest));
    GeneratorPolynomial xi = *generator(Generator::Xi06, 24).poly;
    poly += xi * decompose(quotient);
  }
  return poly.integral_form();
}

} // namespace jacobi
