#pragma once

// Specializations of Jacobi forms to one-variable q-series.

#include "jacobi/jacobi_form.hpp"

namespace jacobi {

/// φ(τ, 1/N) for N in {1,2,3,4,6}; symmetric coefficients required.
Series2 specialize_torsion(const JacobiForm &phi, int n, std::int64_t qprec = kInf);

/// q^{m/4} φ(τ, -(τ+1)/2) for weight 0 and integral index m, i.e.
/// y^l -> (-1)^l q^{-l/2} followed by a shift of q^{m/4}. The result is
/// exact below the returned qprec.
Series2 specialize_center(const JacobiForm &phi, std::int64_t qprec = kInf);

} // namespace jacobi
