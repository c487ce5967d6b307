#pragma once

#include <string>
#include <vector>

namespace finduality {

enum class CheckStatus { Pass, Fail, Finding, Skipped };

std::string to_string(CheckStatus s);
CheckStatus status_from_string(const std::string& s);  // throws ShapeMismatch

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;     // non-empty whenever status is Fail
  std::string scope_note;  // degeneracy caveats etc.
};

bool operator==(const CheckEntry& a, const CheckEntry& b);

/// One suite run. Checks are kept sorted by name for diffable output; a
/// failing check always carries a witness (add() backfills a placeholder
/// if the caller had none).
struct CheckReport {
  std::string suite;
  std::vector<CheckEntry> checks;
  double elapsed_seconds = 0.0;

  void add(const std::string& name, bool ok, const std::string& witness = "",
           const std::string& scope_note = "");
  void add_entry(CheckEntry entry);
  void sort_checks();

  bool any_fail() const;
  int count(CheckStatus s) const;
};

bool operator==(const CheckReport& a, const CheckReport& b);

/// Single-document structured form, schema version 1.
std::string report_to_json(const CheckReport& report);
CheckReport report_from_json(const std::string& text);  // throws ShapeMismatch

/// Line-oriented human form: one status line per check plus a summary.
std::string report_to_text(const CheckReport& report);

}  // namespace finduality
