#pragma once

// Taylor coefficients in z of the G2-twisted form and the two linear
// identities they force on q^0 and q^1 rows.

#include <utility>
#include <vector>

#include "jacobi/jacobi_form.hpp"

namespace jacobi {

/// f_0 .. f_{count-1} of exp(-8π² m G2(τ) z²) φ(τ,z) = Σ f_n(τ) zⁿ, each
/// divided by (2πi)ⁿ.
std::vector<QSeries2> taylor_coeffs(const JacobiForm &phi, int count, std::int64_t qprec = kInf);

/// r1 = mΣf(0,l) - 6Σl²f(0,l), r2 = 24mΣf(0,l) - Σ(m-6l²)f(1,l).
std::pair<Integer, Integer> lemma110_residuals(const JacobiForm &phi);

} // namespace jacobi
