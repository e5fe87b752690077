#pragma once

// Exponential lifts of weak Jacobi forms, the second-quantized elliptic
// genus, its correction factor, and the explicit Fourier sums they match.

#include <optional>
#include <vector>

#include "jacobi/elliptic_genus.hpp"
#include "jacobi/reports.hpp"
#include "jacobi/siegel.hpp"

namespace jacobi {

struct AbcExponents {
  Rational a, b, c;
};

/// A = Σ f(0,l)/24, B = Σ_{l>0} l f(0,l)/2, C = Σ l² f(0,l)/4.
AbcExponents abc_exponents(const JacobiForm &phi);

/// q^A y^B s^C Π_{(n,l,m)>0} (1 - q^n y^l s^{tm})^{f(nm,l)} for a weight-0
/// form of integral index t. The product is truncated to q^n with n < qorders
/// and s^{tm} with tm < sorders; the result carries qprec = 24(A + qorders)
/// and sprec = 24(C + sorders).
SiegelSeries exp_lift(const JacobiForm &phi, std::int64_t qorders, std::int64_t sorders);

/// q-order of phi an exp_lift at this truncation reads.
std::int64_t exp_lift_needed_order(const JacobiForm &phi, std::int64_t qorders, std::int64_t sorders);

/// Π_{m>=0, l, n>0} (1 - q^m y^l p^n)^{-f(mn,l)} with p stored as s, for
/// p-orders up to pmax and nq < qprec.
Series3 sqeg(const JacobiForm &phi, std::int64_t pmax, std::int64_t qprec);

/// The p^n coefficient of sqeg.
Series2 symmetric_product_genus(const JacobiForm &phi, std::int64_t n, std::int64_t qprec);

/// η^{(e-3χ'_{d0})/2} Π_p (ϑ(τ,pz) s^{p²/2})^{-χ'_{d0-p}} for d = 2 d0, and
/// η^{e/2} Π_p (ϑ(τ,(2p-1)z/2) s^{(2p-1)²/8})^{-χ'_{d0-p+1}} for d = 2 d0 + 1,
/// with χ'_p = (-1)^p χ_p. Exact in s, nq below the leading q-power plus qprec.
SiegelSeries hodge_anomaly(const CYInvariants &inv, std::int64_t qprec);

/// hodge_anomaly · sqeg(genus) with p = s^d; for odd d followed by
/// (z, ω) -> (2z, 4ω). Truncation as in exp_lift, relative to the
/// anomaly's leading monomial.
SiegelSeries e_form(const CYInvariants &inv, std::int64_t qorders, std::int64_t sorders,
                    std::optional<Integer> xi6_coefficient = std::nullopt);

enum class ArithmeticLift { Delta2, Delta1 };

/// Δ_2 = Σ N (-4/Nl) Σ_{a|(n,l,m)} (-4/a) q^{n/4} y^{l/2} s^{m/2} over
/// n, m ≡ 1 mod 4, 2nm - l² = N², and
/// Δ_1 = Σ (-4/l)(12/M) Σ_{a|(n,l,m)} (-3/a) q^{n/6} y^{l/2} s^{m/2} over
/// n, m ≡ 1 mod 6, 4nm - 3l² = M². Exponents below q^qorders, s^sorders.
SiegelSeries arithmetic_lift(ArithmeticLift which, std::int64_t qorders, std::int64_t sorders);

/// ½ Σ (-4/n)(-4/m) q^{n²/8} y^{nm/4} s^{m²/8} below q^qorders, s^sorders.
SiegelSeries delta_half_theta(std::int64_t qorders, std::int64_t sorders);

struct Substitution {
  int y_scale = 1;
  int s_scale = 1;
};

/// Smallest (y, s) scaling, each in 1..8, under which delta_half_theta
/// matches exp_lift(φ_{0,4}) on the common exponents.
std::optional<Substitution> delta_half_substitution(std::int64_t qorders, std::int64_t sorders);

/// Θ_{a,b}(Z) for an even characteristic, below q^qorders, s^sorders.
SiegelSeries siegel_theta_constant(int a1, int a2, int b1, int b2, std::int64_t qorders,
                                   std::int64_t sorders);

/// 2^{-12} Π Θ_{a,b}² over the ten even characteristics.
SiegelSeries theta_product(std::int64_t qorders, std::int64_t sorders);

struct HumbertDatum {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t D = 0;
  Integer multiplicity = 0;
};

/// -Σ_{n>0} f(n²a, nb) for D = b² - 4ta > 0. Terms with n²D > t² vanish for
/// weak forms; the rest are read after reduction modulo the index.
Integer humbert_multiplicity(const JacobiForm &phi, std::int64_t a, std::int64_t b);

/// Every (D, b) with 0 <= b <= t, 0 < D <= t² and nonzero multiplicity.
std::vector<HumbertDatum> humbert_divisor(const JacobiForm &phi);

/// Δ_11 Δ_2² against Δ_5(Z) Δ_5(τ,2z,4ω) Δ_5(τ,z,ω+1/2), with Δ_11 the lift
/// of φ_{0,1}² - 20 φ_{0,2} and Δ_5 the lift of φ_{0,1}.
Report delta11_identity_check(std::int64_t qorders, std::int64_t sorders);

} // namespace jacobi
