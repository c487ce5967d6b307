#pragma once

#include <vector>

#include "finduality/report.hpp"

namespace finduality {

/// Exhaustive verification suites, shared by the CLI and the acceptance
/// runner. Each returns a sorted CheckReport with wall-clock timing.
CheckReport stone_suite(int max_atoms = 3);
CheckReport topology_suite(int max_points = 4);
CheckReport contact_suite(int max_atoms = 4);
CheckReport extension_suite();
CheckReport fedbridge_suite(int max_atoms = 4);
CheckReport oracle_suite();

/// Negative bounds select each suite's own default.
std::vector<CheckReport> all_suites(int max_atoms = -1, int max_points = -1);

}  // namespace finduality
