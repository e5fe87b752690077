#pragma once

// Polynomials in the four formal generator symbols Φ1..Φ4 (the weight-0
// forms of index 1..4). Coefficients are rational so that intermediate
// recipes with denominators can be carried; integral() tests the contract.

#include <array>
#include <functional>
#include <map>
#include <string>

#include "jacobi/ring.hpp"

namespace jacobi {

class GeneratorPolynomial {
public:
  using Exponents = std::array<int, 4>;
  using Terms = std::map<Exponents, Rational, std::greater<Exponents>>;

  GeneratorPolynomial() = default;
  explicit GeneratorPolynomial(const Rational &c);
  /// The symbol Φi, i in 1..4.
  static GeneratorPolynomial symbol(int i);
  static GeneratorPolynomial monomial(const Exponents &e, const Rational &c = 1);

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;
  /// Index Σ i·e_i of a homogeneous polynomial; -1 for mixed or zero.
  int index() const;

  GeneratorPolynomial &operator+=(const GeneratorPolynomial &o);
  GeneratorPolynomial &operator-=(const GeneratorPolynomial &o);
  GeneratorPolynomial &operator*=(const GeneratorPolynomial &o);
  friend GeneratorPolynomial operator+(GeneratorPolynomial a, const GeneratorPolynomial &b) { return a += b; }
  friend GeneratorPolynomial operator-(GeneratorPolynomial a, const GeneratorPolynomial &b) { return a -= b; }
  friend GeneratorPolynomial operator*(GeneratorPolynomial a, const GeneratorPolynomial &b) { return a *= b; }
  friend GeneratorPolynomial operator-(const GeneratorPolynomial &a) { return a.scaled(-1); }
  GeneratorPolynomial scaled(const Rational &c) const;
  GeneratorPolynomial pow(int k) const;
  friend bool operator==(const GeneratorPolynomial &a, const GeneratorPolynomial &b) {
    return a.terms_ == b.terms_;
  }

  /// Rewrites Φ1Φ3 -> 4Φ4 + Φ2² until no monomial contains Φ1Φ3. The
  /// result is the unique normal form modulo the torsion relation.
  GeneratorPolynomial reduced() const;
  /// reduced() if the polynomial is not already integral; throws
  /// DivisibilityError if even the normal form has denominators.
  GeneratorPolynomial integral_form() const;

  /// Renders as e.g. "Φ1^2-24*Φ2"; `ascii` uses "Phi" instead of "Φ".
  std::string to_string(bool ascii = false) const;
  /// Parses sums of products of integers, fractions, Φi/Phii, powers and parentheses.
  static GeneratorPolynomial parse(const std::string &text);

private:
  void add(const Exponents &e, const Rational &c);
  Terms terms_;
};

} // namespace jacobi
