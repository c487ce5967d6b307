#include "doctest.h"

#include "finduality/errors.hpp"
#include "finduality/report.hpp"
#include "finduality/suites.hpp"

using namespace finduality;

TEST_CASE("status strings round-trip and reject junk") {
  for (CheckStatus s : {CheckStatus::Pass, CheckStatus::Fail,
                        CheckStatus::Finding, CheckStatus::Skipped}) {
    CHECK(status_from_string(to_string(s)) == s);
  }
  CHECK_THROWS_AS(status_from_string("ok"), ShapeMismatch);
  CHECK_THROWS_AS(status_from_string(""), ShapeMismatch);
}

TEST_CASE("failing checks always carry a witness") {
  CheckReport r;
  r.add("something-broke", false);
  CHECK(r.checks.back().witness == "(no witness captured)");
  r.add("broke-with-detail", false, "a=3");
  CHECK(r.checks.back().witness == "a=3");
  r.add("fine", true);
  CHECK(r.checks.back().witness.empty());
  CHECK(r.any_fail());
  CHECK(r.count(CheckStatus::Fail) == 2);
}

TEST_CASE("report JSON round-trips exactly") {
  CheckReport r;
  r.suite = "demo";
  r.elapsed_seconds = 0.125;  // representable, so == is meaningful
  r.add("zeta", true);
  r.add("alpha", false, "counterexample: x=2", "only checked n<=3");
  r.add_entry({"mid", CheckStatus::Finding, "3 spaces disagree", ""});
  r.add_entry({"skip", CheckStatus::Skipped, "", "bound exceeded"});
  r.sort_checks();

  CheckReport back = report_from_json(report_to_json(r));
  CHECK(back == r);

  // text form mentions every check
  std::string text = report_to_text(r);
  for (const CheckEntry& c : r.checks)
    CHECK(text.find(c.name) != std::string::npos);
}

TEST_CASE("report JSON parser rejects bad input") {
  CHECK_THROWS_AS(report_from_json("not json"), ShapeMismatch);
  CHECK_THROWS_AS(report_from_json("{\"schema\":2,\"suite\":\"x\"}"),
                  ShapeMismatch);
  CHECK_THROWS_AS(report_from_json("[1,2,3]"), ShapeMismatch);
}

TEST_CASE("suites come back sorted and clean at small bounds") {
  for (const CheckReport& r :
       {stone_suite(2), contact_suite(2), oracle_suite(), extension_suite()}) {
    INFO(r.suite);
    CHECK(!r.checks.empty());
    CHECK(!r.any_fail());
    CHECK(r.elapsed_seconds >= 0.0);
    for (size_t i = 1; i < r.checks.size(); ++i)
      CHECK(r.checks[i - 1].name <= r.checks[i].name);
    // round-trip the real thing too
    CHECK(report_from_json(report_to_json(r)) == r);
  }
}

TEST_CASE("topology suite at two points is fast and clean") {
  CheckReport r = topology_suite(2);
  CHECK(!r.any_fail());
  CheckReport full = topology_suite(4);
  CHECK(!full.any_fail());
}

TEST_CASE("fedbridge suite clean at small bounds") {
  CheckReport r = fedbridge_suite(3);
  CHECK(!r.any_fail());
}

TEST_CASE("all_suites honours explicit bounds") {
  std::vector<CheckReport> rs = all_suites(2, 2);
  CHECK(rs.size() == 6);
  for (const CheckReport& r : rs) CHECK(!r.any_fail());
}
