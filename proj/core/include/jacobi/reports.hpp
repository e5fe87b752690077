#pragma once

// Congruence findings for weight-0 forms and the torsion-point identities.

#include <random>
#include <string>
#include <vector>

#include "jacobi/elliptic_genus.hpp"

namespace jacobi {

struct Finding {
  std::string check;
  bool pass = false;
  std::string detail;
  Integer modulus = 0;
  /// Highest integral q-order covered by a tail congruence; 0 if none.
  std::int64_t verified_orders = 0;
};

using Report = std::vector<Finding>;

Json to_json(const Report &r);
bool all_pass(const Report &r);

/// Euler-number divisibility and the z = 1/2, 1/3, 1/4 patterns for the
/// index class of phi. cy_genus asserts c1 = 0 over Z, enabling the
/// stronger checks in dimensions 2 mod 8.
Report divisibility_report(const JacobiForm &phi, bool cy_genus = false);
Report divisibility_report(const CYInvariants &inv, std::int64_t qprec);

/// Values of the generators and ξ_{0,6} at z = 0, 1/2, 1/3, 1/4, 1/6 and at
/// the center -(τ+1)/2, checked against eta and theta expansions.
Report special_value_suite(std::int64_t qprec);

/// Random integral weight-0 form of index m: an integer combination of the
/// monomials in φ01..φ04 with coefficients in [-bound, bound].
JacobiForm random_form(int m, std::int64_t qprec, std::mt19937_64 &rng, int bound = 3);

} // namespace jacobi
