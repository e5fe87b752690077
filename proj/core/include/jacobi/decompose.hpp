#pragma once

// Division in the ring of weak Jacobi forms and decomposition into generators.

#include "jacobi/generator_polynomial.hpp"
#include "jacobi/jacobi_form.hpp"

namespace jacobi {

/// φ/ξ_{0,6} for a weight-0 form of integral index >= 6 without q^0-term.
JacobiForm divide_by_xi06(const JacobiForm &phi);

/// Strips the factor φ_{0,3/2} (even weight) or φ_{-1,1/2} (odd weight)
/// from a form of half-integral index.
JacobiForm halfint_factor(const JacobiForm &phi);

/// Integer polynomial in Φ1..Φ4 evaluating to φ; qprec >= 24(⌊m/6⌋+2) needed.
GeneratorPolynomial decompose(const JacobiForm &phi);

/// Integer coordinates of the q^0-term against basis_psi(m, 1..m); throws
/// DivisibilityError naming the failing congruence if none exist.
std::vector<Integer> q0_coordinates(const std::vector<Integer> &q0, int m);

} // namespace jacobi
