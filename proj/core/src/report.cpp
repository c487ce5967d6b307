#include "finduality/report.hpp"

#include <algorithm>
#include <sstream>

#include "finduality/errors.hpp"
#include "json.hpp"

namespace finduality {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Finding: return "finding";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

CheckStatus status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "finding") return CheckStatus::Finding;
  if (s == "skipped") return CheckStatus::Skipped;
  throw ShapeMismatch("unknown check status '" + s + "'");
}

bool operator==(const CheckEntry& a, const CheckEntry& b) {
  return a.name == b.name && a.status == b.status && a.witness == b.witness &&
         a.scope_note == b.scope_note;
}

void CheckReport::add(const std::string& name, bool ok,
                      const std::string& witness,
                      const std::string& scope_note) {
  CheckEntry entry{name, ok ? CheckStatus::Pass : CheckStatus::Fail, witness,
                   scope_note};
  add_entry(std::move(entry));
}

void CheckReport::add_entry(CheckEntry entry) {
  if (entry.status == CheckStatus::Fail && entry.witness.empty())
    entry.witness = "(no witness captured)";
  checks.push_back(std::move(entry));
}

void CheckReport::sort_checks() {
  std::sort(checks.begin(), checks.end(),
            [](const CheckEntry& a, const CheckEntry& b) {
              return a.name < b.name;
            });
}

bool CheckReport::any_fail() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckEntry& c) {
    return c.status == CheckStatus::Fail;
  });
}

int CheckReport::count(CheckStatus s) const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(),
                    [s](const CheckEntry& c) { return c.status == s; }));
}

bool operator==(const CheckReport& a, const CheckReport& b) {
  return a.suite == b.suite && a.checks == b.checks &&
         a.elapsed_seconds == b.elapsed_seconds;
}

std::string report_to_json(const CheckReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["suite"] = report.suite;
  j["elapsed_seconds"] = report.elapsed_seconds;
  j["checks"] = nlohmann::json::array();
  for (const CheckEntry& c : report.checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.scope_note.empty()) e["scope_note"] = c.scope_note;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2);
}

CheckReport report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ShapeMismatch("report is not valid JSON");
  if (!j.is_object() || j.value("schema", 0) != 1)
    throw ShapeMismatch("unsupported report schema");
  CheckReport report;
  report.suite = j.value("suite", "");
  report.elapsed_seconds = j.value("elapsed_seconds", 0.0);
  for (const auto& e : j.value("checks", nlohmann::json::array())) {
    CheckEntry entry;
    entry.name = e.value("name", "");
    entry.status = status_from_string(e.value("status", ""));
    entry.witness = e.value("witness", "");
    entry.scope_note = e.value("scope_note", "");
    report.add_entry(std::move(entry));
  }
  return report;
}

std::string report_to_text(const CheckReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << "\n";
  for (const CheckEntry& c : report.checks) {
    out << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.witness.empty()) out << "  -- " << c.witness;
    if (!c.scope_note.empty()) out << "  (" << c.scope_note << ")";
    out << "\n";
  }
  out << "  " << report.count(CheckStatus::Pass) << " pass, "
      << report.count(CheckStatus::Fail) << " fail, "
      << report.count(CheckStatus::Finding) << " finding, "
      << report.count(CheckStatus::Skipped) << " skipped in "
      << report.elapsed_seconds << "s\n";
  return out.str();
}

}  // namespace finduality
