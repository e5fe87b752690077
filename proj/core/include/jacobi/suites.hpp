#pragma once

// Named identity batteries over the whole library.

#include <string>
#include <vector>

#include "jacobi/reports.hpp"

namespace jacobi {

/// ring, basis, hecke, congruences, lifts.
const std::vector<std::string> &suite_names();

/// Runs one suite (or "all") with qmax integral q-orders. Unknown names
/// raise ValidationError.
Report run_suite(const std::string &name, std::int64_t qmax);

} // namespace jacobi
