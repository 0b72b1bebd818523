#pragma once

#include <string>
#include <vector>

#include "a5/verify/fixtures.hpp"
#include "a5/verify/report.hpp"

namespace a5 {

/// icosa, decomp, families, invariants, loci, all.
const std::vector<std::string>& suite_names();

/// InvalidArgument for an unknown suite name.
Report run_suite(const std::string& name, const Fixtures& fx);

/// All checks tagged with one acceptance criterion (1..10).
Report run_criterion(int criterion, const Fixtures& fx);

}  // namespace a5
