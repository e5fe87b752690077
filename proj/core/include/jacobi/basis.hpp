#pragma once

// The integral basis ψ_{0,m}^{(n)}, n = 1..m, of weight-0 weak forms of
// index m modulo forms without q^0-term.

#include <vector>

#include "jacobi/jacobi_form.hpp"

namespace jacobi {

/// Coefficients of y^0 .. y^m in the q^0-row of an integral-index form.
std::vector<Integer> q0_vector(const JacobiForm &f);

/// ψ_m^{(1)} for m >= 1 (the case analysis on (12, m)).
GeneratorPolynomial psi1_polynomial(int m);
/// ψ_m^{(n)} in canonical form: for n >= 3 monic at y^n, the y^k coefficients
/// for 2 <= k < n are zero and the y coefficient lies in [0, m/(12,m)).
GeneratorPolynomial basis_polynomial(int m, int n);

JacobiForm basis_psi(int m, int n, std::int64_t qprec);

/// The two normalizations of ψ_{0,m}^{(2)} for m = 2, 3, 4:
/// A is φ1²-20φ2, φ1φ2-15φ3, φ1φ3-12φ4; B is φ1²-24φ2, φ1φ2-18φ3, φ1φ3-16φ4.
GeneratorPolynomial psi2_variantA(int m);
GeneratorPolynomial psi2_variantB(int m);

} // namespace jacobi
