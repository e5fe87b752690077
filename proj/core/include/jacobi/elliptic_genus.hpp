#pragma once

// Elliptic genera of manifolds with vanishing first Chern class, built from
// the χ_y-genus data χ_0 .. χ_d.

#include <optional>
#include <string>
#include <vector>

#include "jacobi/jacobi_form.hpp"
#include "jacobi/series_io.hpp"

namespace jacobi {

struct CYInvariants {
  int d = 0;
  std::vector<Integer> chi;

  /// Checks 1 <= d, chi.size() == d + 1 and χ_p = (-1)^d χ_{d-p}.
  CYInvariants(int d, std::vector<Integer> chi);

  Integer euler() const;
  static CYInvariants from_hodge(int d, const std::vector<std::vector<Integer>> &h);
};

/// {"d": int, "chi": [...]} or {"d": int, "hodge": [[...]]}; entries are
/// integers or decimal strings.
CYInvariants cy_from_json(const Json &j);
Json to_json(const CYInvariants &inv);

/// The weak form of weight 0 and index d/2 with q^0-term Σ (-1)^p χ_p y^{d/2-p}.
/// Supports 2 <= d <= 13. For d = 12 the q^0-term leaves a multiple of
/// ξ_{0,6} free, which must be passed as xi6_coefficient.
JacobiForm elliptic_genus(const CYInvariants &inv, std::int64_t qprec,
                          std::optional<Integer> xi6_coefficient = std::nullopt);

/// χ_p read off the q^0-row of a weight-0 form; d is the doubled index.
CYInvariants chi_y_polynomial(const JacobiForm &phi);

struct RelationResult {
  std::string relation;
  bool pass = false;
  Rational residual;
};

/// The linear relations and Euler congruences forced on χ_p for this d.
std::vector<RelationResult> relation_check(const CYInvariants &inv);

} // namespace jacobi
