#pragma once

// The generators of the ring of weak Jacobi forms and related theta series.
// Expansions are memoized per generator at the largest precision requested.

#include <string>

#include "jacobi/jacobi_form.hpp"

namespace jacobi {

enum class Generator { PhiM1Half, Phi032, Phi01, Phi02, Phi03, Phi04, Phi06, Phi08, Phi012, Xi06 };

/// Accepts "phi01", "phi_{0,1}", "φ_{0,1}", "phi032", "phi-1,1/2", "xi06", ...
Generator generator_from_name(const std::string &name);
std::string generator_name(Generator g);

/// ϑ(τ,z) = -q^{1/8} y^{-1/2} Π (1-q^{n-1}y)(1-q^n y^{-1})(1-q^n); weight 1/2, index 1/2.
JacobiForm theta_jacobi(std::int64_t qprec);
/// The same function as Σ_m (-4/m) q^{m²/8} y^{m/2}.
Series2 theta_jacobi_sum(std::int64_t qprec);
/// ϑ_{ab}(τ,z) = Σ_n (-1)^{bn} q^{(n+a/2)²/2} y^{n+a/2}.
Series2 theta_ab(int a, int b, std::int64_t qprec);
/// ξ_{ab}(τ,z) = ϑ_{ab}(τ,z)/ϑ_{ab}(τ,0); rational coefficients.
QSeries2 xi_ab(int a, int b, std::int64_t qprec);

/// Exact expansion to nq < qprec (1/24 units); qprec >= 24 required.
JacobiForm generator(Generator g, std::int64_t qprec);

/// Evaluates a polynomial in Φ1..Φ4 at the generator expansions. Rational
/// coefficients are allowed if the resulting form is integral.
JacobiForm evaluate(const GeneratorPolynomial &p, std::int64_t qprec);

/// Converts an integral-valued rational series, throwing DivisibilityError otherwise.
Series2 to_integer_series(const QSeries2 &a);
QSeries2 to_rational_series(const Series2 &a);

} // namespace jacobi
