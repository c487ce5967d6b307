// finduality command line front end.
//
//   finduality suite all|stone|topology|contact|extension|fedbridge
//              [--max-atoms N] [--max-points N] [--json PATH]
//   finduality enumerate topologies --points N [--sample K] [--list]
//   finduality check contact --atoms N [--kernel "1-2,2-3"]
//   finduality check extension --fixture syncat1|syncat2|topcat|FILE
//   finduality report --json PATH [--max-atoms N] [--max-points N]
//
// Exit status: 0 all checks pass, 1 some check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "finduality/category.hpp"
#include "finduality/contact.hpp"
#include "finduality/covering.hpp"
#include "finduality/errors.hpp"
#include "finduality/extension.hpp"
#include "finduality/report.hpp"
#include "finduality/suites.hpp"
#include "finduality/topology.hpp"

namespace {

using namespace finduality;

std::vector<CheckReport> run_suites(const std::string& which, int max_atoms,
                                    int max_points) {
  if (which == "all") return all_suites(max_atoms, max_points);
  if (which == "stone") return {stone_suite(max_atoms < 0 ? 3 : max_atoms)};
  if (which == "topology")
    return {topology_suite(max_points < 0 ? 4 : max_points)};
  if (which == "contact") return {contact_suite(max_atoms < 0 ? 4 : max_atoms)};
  if (which == "extension") return {extension_suite()};
  if (which == "fedbridge")
    return {fedbridge_suite(max_atoms < 0 ? 4 : max_atoms)};
  throw ShapeMismatch("unknown suite '" + which + "'");
}

void write_reports_json(const std::vector<CheckReport>& reports,
                        const std::string& path) {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["reports"] = nlohmann::json::array();
  for (const CheckReport& r : reports)
    doc["reports"].push_back(nlohmann::json::parse(report_to_json(r)));
  std::ofstream out(path);
  if (!out) throw ShapeMismatch("cannot open '" + path + "' for writing");
  out << doc.dump(2) << "\n";
}

// "1-2,2-3" with 1-based atom indices; the reflexive diagonal is implied.
std::vector<std::uint32_t> parse_kernel(int n_atoms, const std::string& text) {
  std::vector<std::uint32_t> kernel(n_atoms);
  for (int i = 0; i < n_atoms; ++i) kernel[i] = 1u << i;
  std::stringstream ss(text);
  std::string pair;
  while (std::getline(ss, pair, ',')) {
    if (pair.empty()) continue;
    auto dash = pair.find('-');
    if (dash == std::string::npos)
      throw ShapeMismatch("kernel pair '" + pair + "' is not of the form i-j");
    int i = 0, j = 0;
    try {
      i = std::stoi(pair.substr(0, dash));
      j = std::stoi(pair.substr(dash + 1));
    } catch (const std::exception&) {
      throw ShapeMismatch("kernel pair '" + pair + "' is not numeric");
    }
    if (i < 1 || i > n_atoms || j < 1 || j > n_atoms)
      throw ShapeMismatch("kernel pair '" + pair + "' is out of range 1.." +
                          std::to_string(n_atoms));
    kernel[i - 1] |= 1u << (j - 1);
    kernel[j - 1] |= 1u << (i - 1);
  }
  return kernel;
}

std::string points_of(PointSet m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; m >> i; ++i) {
    if (!(m >> i & 1)) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

int cmd_suite(const std::string& which, int max_atoms, int max_points,
              const std::string& json_path) {
  std::vector<CheckReport> reports = run_suites(which, max_atoms, max_points);
  bool failed = false;
  for (const CheckReport& r : reports) {
    std::cout << report_to_text(r);
    failed = failed || r.any_fail();
  }
  if (!json_path.empty()) write_reports_json(reports, json_path);
  return failed ? 1 : 0;
}

int cmd_enumerate(int points, std::optional<int> sample, bool list) {
  std::vector<FinTopSpace> spaces = enumerate_topologies(points, sample);
  std::cout << spaces.size() << " labeled topologies on " << points
            << " points" << (sample ? " (sampled)" : "") << "\n";
  if (list) {
    for (const FinTopSpace& x : spaces) {
      std::cout << " ";
      for (PointSet u : x.opens()) std::cout << " " << points_of(u);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_check_contact(int atoms, const std::string& kernel_text) {
  FinBoolAlg alg(atoms);
  ContactRelation c = kernel_to_contact(alg, parse_kernel(atoms, kernel_text));
  ContactAxioms ax = check_axioms(alg, c.table());
  auto flag = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "contact relation on the " << atoms << "-atom algebra\n"
            << "  C1-C4 (contact algebra):  " << flag(ax.is_ca) << "\n"
            << "  C5 (normality):           " << flag(ax.c5) << "\n"
            << "  C6 (extensionality):      " << flag(ax.c6) << "\n"
            << "  NCA:                      " << flag(ax.is_nca) << "\n"
            << "  << axioms + round trip:   "
            << flag(ax.ll1 && ax.ll2 && ax.ll3 && ax.ll4 && ax.ll5 && ax.ll6 &&
                    ax.ll7 && ax.ll_roundtrip)
            << "\n";
  if (ax.is_ca && atoms <= 4) {  // cluster search is 2^(2^n)-ish beyond that
    std::vector<Cluster> cls = clusters(c);
    std::cout << "  clusters:                 " << cls.size() << "\n";
    std::cout << "  rho_s:                    " << flag(c == rho_s(alg))
              << "\n";
  }
  return ax.is_ca ? 0 : 1;
}

int cmd_check_extension(const std::string& which) {
  Fixture fx;
  if (which == "syncat1" || which == "syncat2" || which == "topcat") {
    fx = builtin_fixture(which);
  } else {
    std::ifstream in(which);
    if (!in) throw ShapeMismatch("cannot read fixture file '" + which + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    fx = parse_fixture(buf.str());
  }

  FullSubcat sub = full_subcategory(fx.host, fx.sub_objects);
  CoveringReport cov =
      check_covering_class(fx.host, sub, fx.covering, fx.chosen_pi);
  auto flag = [](bool b) { return b ? "yes" : "NO"; };
  std::cout << "fixture " << fx.name << "\n"
            << "  P1 " << flag(cov.p1) << "  P2 " << flag(cov.p2) << "  P2' "
            << flag(cov.p2_prime) << "  P3 " << flag(cov.p3) << "  P4 "
            << flag(cov.p4) << "  P4' " << flag(cov.p4_prime) << "  P4* "
            << flag(cov.p4_star) << "  P5 " << flag(cov.p5) << "  P5* "
            << flag(cov.p5_star) << "\n";
  if (!cov.is_covering()) {
    std::cout << "  not a covering class: " << cov.witness << "\n";
    return 1;
  }
  if (!cov.p4_star) {
    std::cout << "  covering class is not rigid; extension not built\n";
    return 1;
  }
  ExtensionPack pack = extension_from_fixture(fx);
  bool failed = false;
  for (const NamedCheck& c : verify_extension(pack)) {
    std::cout << "  [" << (c.ok ? "pass" : "fail") << "] " << c.name;
    if (!c.ok && !c.detail.empty()) std::cout << "  -- " << c.detail;
    std::cout << "\n";
    failed = failed || !c.ok;
  }
  return failed ? 1 : 0;
}

int cmd_report(const std::string& path, int max_atoms, int max_points) {
  std::vector<CheckReport> reports = all_suites(max_atoms, max_points);
  write_reports_json(reports, path);
  bool failed = false;
  for (const CheckReport& r : reports) {
    std::cout << r.suite << ": " << r.count(CheckStatus::Pass) << " pass, "
              << r.count(CheckStatus::Fail) << " fail ("
              << r.elapsed_seconds << "s)\n";
    failed = failed || r.any_fail();
  }
  std::cout << "wrote " << path << "\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exhaustive finite checks for Stone duality, contact algebras "
               "and the duality extension"};
  app.require_subcommand(1);

  int max_atoms = -1, max_points = -1;
  std::string suite_name, json_path;
  CLI::App* suite = app.add_subcommand("suite", "run a verification suite");
  suite->add_option("name", suite_name, "which suite")
      ->required()
      ->check(CLI::IsMember({"all", "stone", "topology", "contact",
                             "extension", "fedbridge"}));
  suite->add_option("--max-atoms", max_atoms, "atom bound for algebra sweeps");
  suite->add_option("--max-points", max_points,
                    "point bound for topology sweeps");
  suite->add_option("--json", json_path, "also write a JSON report");

  int points = 0;
  std::optional<int> sample;
  bool list = false;
  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate objects");
  CLI::App* topologies =
      enumerate->add_subcommand("topologies", "labeled topologies on n points");
  topologies->add_option("--points", points, "number of points")
      ->required()
      ->check(CLI::Range(0, 10));
  topologies->add_option("--sample", sample,
                         "random sample size (required for > 4 points)");
  topologies->add_flag("--list", list, "print each topology");
  enumerate->require_subcommand(1);

  int atoms = 0;
  std::string kernel_text, fixture_name;
  CLI::App* check = app.add_subcommand("check", "check a single structure");
  CLI::App* ccontact =
      check->add_subcommand("contact", "axioms of one contact relation");
  ccontact->add_option("--atoms", atoms, "number of atoms")
      ->required()
      ->check(CLI::Range(1, 6));
  ccontact->add_option("--kernel", kernel_text,
                       "extra atom contacts, e.g. \"1-2,2-3\" (1-based)");
  CLI::App* cext = check->add_subcommand(
      "extension", "covering-class flags and extension checks for a fixture");
  cext->add_option("--fixture", fixture_name,
                   "syncat1 | syncat2 | topcat | path to a fixture file")
      ->required();
  check->require_subcommand(1);

  std::string report_path;
  CLI::App* report =
      app.add_subcommand("report", "run every suite and write a JSON report");
  report->add_option("--json", report_path, "output path")->required();
  report->add_option("--max-atoms", max_atoms, "atom bound");
  report->add_option("--max-points", max_points, "point bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(suite))
      return cmd_suite(suite_name, max_atoms, max_points, json_path);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(points, sample, list);
    if (app.got_subcommand(check)) {
      if (check->got_subcommand(ccontact))
        return cmd_check_contact(atoms, kernel_text);
      return cmd_check_extension(fixture_name);
    }
    return cmd_report(report_path, max_atoms, max_points);
  } catch (const finduality::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
