// Acceptance runner: one line per criterion, nonzero exit on any failure.
// Each criterion re-runs the corresponding suite under a wall-clock budget.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "finduality/report.hpp"
#include "finduality/suites.hpp"

using namespace finduality;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<CheckReport()> run;
};

std::string first_failure(const CheckReport& r) {
  for (const CheckEntry& c : r.checks)
    if (c.status == CheckStatus::Fail) return c.name + ": " + c.witness;
  return "";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1-stone-duality-3-atoms", 5.0, [] { return stone_suite(3); }},
      {"2-topology-and-map-predicates", 60.0, [] { return topology_suite(4); }},
      {"3-contact-kernel-sweep-4-atoms", 30.0, [] { return contact_suite(4); }},
      {"4-extension-theorem-fixtures", 5.0, [] { return extension_suite(); }},
      {"5-fedorchuk-bridge", 30.0, [] { return fedbridge_suite(4); }},
      {"6-frozen-oracles", 30.0, [] { return oracle_suite(); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    CheckReport r = c.run();
    bool in_budget = r.elapsed_seconds < c.budget_seconds;
    bool ok = !r.any_fail() && in_budget;
    std::printf("%s  %-32s %3d checks  %6.2fs / %.0fs budget\n",
                ok ? "PASS" : "FAIL", c.name.c_str(),
                static_cast<int>(r.checks.size()), r.elapsed_seconds,
                c.budget_seconds);
    if (!ok) {
      ++failures;
      if (r.any_fail())
        std::printf("      first failure: %s\n", first_failure(r).c_str());
      if (!in_budget) std::printf("      over time budget\n");
    }
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
