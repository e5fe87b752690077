#pragma once

// Coefficient rings for exact series arithmetic.
//
// Every ring is accessed through RingTraits<T>. A ring may carry an integer
// parameter (the conductor of a cyclotomic ring); rings without one use 0.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "jacobi/errors.hpp"

namespace jacobi {

using Integer = mpz_class;
using Rational = mpq_class;

/// a + b*i with arbitrary-precision integer parts.
class Gaussian {
public:
  Gaussian() = default;
  Gaussian(Integer re, Integer im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  Gaussian(long v) : re_(v), im_(0) {}

  const Integer &re() const { return re_; }
  const Integer &im() const { return im_; }

  Gaussian &operator+=(const Gaussian &o);
  Gaussian &operator-=(const Gaussian &o);
  Gaussian &operator*=(const Gaussian &o);
  friend Gaussian operator+(Gaussian a, const Gaussian &b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian &b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian &b) { return a *= b; }
  friend Gaussian operator-(const Gaussian &a) { return Gaussian(-a.re_, -a.im_); }
  friend bool operator==(const Gaussian &a, const Gaussian &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

private:
  Integer re_{0};
  Integer im_{0};
};

/// Element of Z[x]/(Phi_N(x)), x a primitive N-th root of unity.
/// Coordinates are in the power basis 1, x, ..., x^{phi(N)-1}.
class Cyclotomic {
public:
  Cyclotomic() = default;
  /// The integer `value` embedded in conductor `n`.
  Cyclotomic(int conductor, const Integer &value);
  /// x^k embedded in conductor `n`.
  static Cyclotomic root_power(int conductor, std::int64_t k);

  int conductor() const { return conductor_; }
  const std::vector<Integer> &coords() const { return coords_; }

  /// True when the element lies in Z (all coordinates beyond the first vanish).
  bool is_rational_integer() const;

  Cyclotomic &operator+=(const Cyclotomic &o);
  Cyclotomic &operator-=(const Cyclotomic &o);
  Cyclotomic &operator*=(const Cyclotomic &o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) { return a *= b; }
  friend Cyclotomic operator-(Cyclotomic a);
  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
    return a.conductor_ == b.conductor_ && a.coords_ == b.coords_;
  }

  /// Integer coefficients of Phi_n, constant term first. Supports n <= 12.
  static const std::vector<Integer> &cyclotomic_polynomial(int n);

private:
  void check_same(const Cyclotomic &o) const;
  void reduce(std::vector<Integer> raw);

  int conductor_ = 1;
  std::vector<Integer> coords_{Integer(0)};
};

template <class T> struct RingTraits;

template <> struct RingTraits<Integer> {
  static std::string name() { return "integer"; }
  static int param(const Integer &) { return 0; }
  static Integer zero(int = 0) { return 0; }
  static Integer one(int = 0) { return 1; }
  static Integer from_integer(const Integer &v, int = 0) { return v; }
  static bool is_zero(const Integer &a) { return sgn(a) == 0; }
  static bool is_unit(const Integer &a) { return a == 1 || a == -1; }
  static std::optional<Integer> exact_quotient(const Integer &a, const Integer &b);
  static Integer root_of_unity(std::int64_t n, std::int64_t k, int param = 0);
  static std::string to_string(const Integer &a) { return a.get_str(); }
  static Integer parse(const std::string &s, int param = 0);
};

template <> struct RingTraits<Rational> {
  static std::string name() { return "rational"; }
  static int param(const Rational &) { return 0; }
  static Rational zero(int = 0) { return 0; }
  static Rational one(int = 0) { return 1; }
  static Rational from_integer(const Integer &v, int = 0) { return Rational(v); }
  static bool is_zero(const Rational &a) { return sgn(a) == 0; }
  static bool is_unit(const Rational &a) { return sgn(a) != 0; }
  static std::optional<Rational> exact_quotient(const Rational &a, const Rational &b);
  static Rational root_of_unity(std::int64_t n, std::int64_t k, int param = 0);
  static std::string to_string(const Rational &a) { return a.get_str(); }
  static Rational parse(const std::string &s, int param = 0);
};

template <> struct RingTraits<Gaussian> {
  static std::string name() { return "gaussian"; }
  static int param(const Gaussian &) { return 0; }
  static Gaussian zero(int = 0) { return Gaussian(); }
  static Gaussian one(int = 0) { return Gaussian(1); }
  static Gaussian from_integer(const Integer &v, int = 0) { return Gaussian(v); }
  static bool is_zero(const Gaussian &a) { return sgn(a.re()) == 0 && sgn(a.im()) == 0; }
  static bool is_unit(const Gaussian &a);
  static std::optional<Gaussian> exact_quotient(const Gaussian &a, const Gaussian &b);
  static Gaussian root_of_unity(std::int64_t n, std::int64_t k, int param = 0);
  static std::string to_string(const Gaussian &a);
  static Gaussian parse(const std::string &s, int param = 0);
};

template <> struct RingTraits<Cyclotomic> {
  static std::string name() { return "cyclotomic"; }
  static int param(const Cyclotomic &a) { return a.conductor(); }
  static Cyclotomic zero(int param) { return Cyclotomic(param, 0); }
  static Cyclotomic one(int param) { return Cyclotomic(param, 1); }
  static Cyclotomic from_integer(const Integer &v, int param) { return Cyclotomic(param, v); }
  static bool is_zero(const Cyclotomic &a);
  static bool is_unit(const Cyclotomic &a);
  static std::optional<Cyclotomic> exact_quotient(const Cyclotomic &a, const Cyclotomic &b);
  static Cyclotomic root_of_unity(std::int64_t n, std::int64_t k, int param);
  static std::string to_string(const Cyclotomic &a);
  static Cyclotomic parse(const std::string &s, int param);
};

/// Generalized binomial coefficient C(e, j) for any integer e and j >= 0.
Integer binomial(std::int64_t e, std::int64_t j);

/// Floor division and the matching non-negative remainder.
Integer floor_div(const Integer &a, const Integer &b);
Integer floor_mod(const Integer &a, const Integer &b);

} // namespace jacobi
