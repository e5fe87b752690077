#pragma once

// Weak Jacobi forms: a (q, y)-series with doubled weight and index.

#include <optional>
#include <string>

#include "jacobi/generator_polynomial.hpp"
#include "jacobi/series.hpp"
#include "jacobi/series_io.hpp"

namespace jacobi {

struct JacobiForm {
  int weight2 = 0;
  int index2 = 0;
  Series2 series;
  std::optional<GeneratorPolynomial> poly;

  JacobiForm() = default;
  JacobiForm(int w2, int i2, Series2 s, std::optional<GeneratorPolynomial> p = std::nullopt)
      : weight2(w2), index2(i2), series(std::move(s)), poly(std::move(p)) {}

  std::int64_t qprec() const { return series.qprec(); }
  bool integral_index() const { return index2 % 2 == 0; }
  int index() const { return index2 / 2; }

  /// f(n, l) with n in integral q-orders and l in 1/2-steps given as 2l.
  Integer coeff(std::int64_t n, std::int64_t l2) const { return series.coefficient(Key2{24 * n, 2 * l2}); }

  JacobiForm truncated(std::int64_t qprec) const {
    return JacobiForm(weight2, index2, series.truncated(qprec), poly);
  }
  JacobiForm scaled(const Integer &c) const;
  JacobiForm pow(int k) const;

  friend JacobiForm operator+(const JacobiForm &a, const JacobiForm &b);
  friend JacobiForm operator-(const JacobiForm &a, const JacobiForm &b);
  friend JacobiForm operator*(const JacobiForm &a, const JacobiForm &b);
  friend JacobiForm operator-(const JacobiForm &a) { return a.scaled(-1); }

  /// f(n, l) = f(n, -l) for every stored key.
  bool is_symmetric() const;
  /// Exponent support: y-exponents in index + Z, no negative q-powers. Throws ValidationError.
  void validate_weak() const;
};

/// Coefficientwise equality below the common precision, plus matching weight/index.
bool same_form(const JacobiForm &a, const JacobiForm &b);

/// φ(τ, k z): y -> y^k, index scales by k².
JacobiForm scale_z(const JacobiForm &f, int k);

Json to_json(const JacobiForm &f);
JacobiForm jacobi_form_from_json(const Json &j);

} // namespace jacobi
