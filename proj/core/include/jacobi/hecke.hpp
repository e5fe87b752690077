#pragma once

// Hecke operators on weight-0 weak Jacobi forms.

#include <map>

#include "jacobi/jacobi_form.hpp"

namespace jacobi {

/// φ|T_-(m): f_m(N,L) = m Σ_{a|(N,L,m)} a^{-1} f(Nm/a², L/a); index t -> tm.
JacobiForm hecke_Tminus(const JacobiForm &phi, int m);

/// Coefficients keyed by the norm 4tn - l²; throws ValidationError if the
/// form's coefficients are not a function of the norm.
std::map<std::int64_t, Integer> norm_coefficients(const JacobiForm &phi);

/// φ|T_0(2) applied normwise: g_2(N) = 8g(4N) + 2(-N/2)g(N) + g(N/4).
JacobiForm hecke_T0_2(const JacobiForm &phi);

} // namespace jacobi
