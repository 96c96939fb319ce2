// idealfam: command-line workbench for set families on small ground sets.
// Subcommands: check, minor, enumerate, search, replay, examples.
// Exit status: 0 = success / property holds, 1 = property violated or an
// identity failed, 2 = usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "idealfam/catalog.hpp"
#include "idealfam/enumerate.hpp"
#include "idealfam/family.hpp"
#include "idealfam/ideal.hpp"
#include "idealfam/io.hpp"
#include "idealfam/minors.hpp"
#include "idealfam/replay.hpp"

namespace fam = idealfam;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

fam::SetFamily load_family(const std::string& path) {
  if (path.empty() || path == "-") return fam::read_family(std::cin);
  return fam::read_family_file(path);
}

json report_to_json(const fam::FamilyReport& r) {
  return json{{"n", r.n},
              {"num_edges", r.num_edges},
              {"tsh", r.tsh},
              {"nds", r.nds},
              {"degrees", r.degrees},
              {"rare_vertices", r.rare_vertices},
              {"is_intersection_closed", r.is_intersection_closed},
              {"is_ideal", r.is_ideal}};
}

void print_int_list(std::ostream& out, const auto& values) {
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
}

int cmd_check(const std::string& path, bool as_json) {
  const fam::SetFamily family = load_family(path);
  const fam::FamilyReport report = fam::build_report(family);
  if (as_json) {
    std::cout << report_to_json(report).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "n: " << report.n << "\n";
  std::cout << "edges: " << report.num_edges << "\n";
  std::cout << "tsh: " << report.tsh << "\n";
  std::cout << "nds: " << report.nds << "\n";
  std::cout << "degrees: ";
  print_int_list(std::cout, report.degrees);
  std::cout << "\n";
  std::cout << "rare-vertices: ";
  print_int_list(std::cout, report.rare_vertices);
  std::cout << "\n";
  std::cout << "intersection-closed: " << (report.is_intersection_closed ? "yes" : "no") << "\n";
  if (report.is_ideal) {
    std::cout << "ideal: yes\n";
  } else {
    std::cout << "ideal: no (" << fam::find_ideal_violation(family)->message() << ")\n";
  }
  return kExitOk;
}

json identity_report_json(const fam::DecompositionReport& report, int n) {
  json checks = json::array();
  for (const fam::IdentityCheck& c : report.checks) {
    checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds()}});
  }
  return json{{"n", n},
              {"vertex", report.vertex},
              {"identities", checks},
              {"all_hold", report.all_hold()}};
}

int cmd_minor(const std::string& op_name, int vertex, bool with_report,
              const std::string& path) {
  const auto kind = fam::parse_minor_kind(op_name);
  if (!kind) {
    std::cerr << "error: unknown minor operator \"" << op_name << "\" (use del|delp|con|trace)\n";
    return kExitUsage;
  }
  const fam::SetFamily family = load_family(path);

  fam::SetFamily result = [&] {
    switch (*kind) {
      case fam::MinorKind::kDeletion:
        return fam::deletion(family, vertex);
      case fam::MinorKind::kIdealDeletion:
        return fam::ideal_deletion(fam::IdealFamily::require(family), vertex).family();
      case fam::MinorKind::kContraction:
        return fam::contraction(family, vertex);
      case fam::MinorKind::kTrace:
        return fam::trace(family, vertex);
    }
    throw std::logic_error("unhandled minor kind");
  }();

  fam::write_family(std::cout, result);
  if (with_report) {
    const auto ideal = fam::IdealFamily::require(family);
    const fam::DecompositionReport report = fam::check_decomposition_identities(ideal, vertex);
    std::cout << identity_report_json(report, family.ground_size()).dump(2) << "\n";
    if (!report.all_hold()) return kExitViolation;
  }
  return kExitOk;
}

int cmd_enumerate(int n, bool count_only, bool verify_nds, bool verify_injection,
                  bool verify_identities, bool up_to_iso, bool deep, bool as_json) {
  if (n < 1 || n > fam::kMaxEnumerationGround) {
    std::cerr << "error: --n must be in [1, " << fam::kMaxEnumerationGround << "]\n";
    return kExitUsage;
  }
  if (n == fam::kMaxEnumerationGround && !deep) {
    std::cerr << "error: n=6 visits 7.8M families; pass --deep to confirm\n";
    return kExitUsage;
  }
  (void)count_only;  // nds stats are O(1) per family, so they are always kept
  (void)verify_nds;

  fam::VerifyOptions options;
  options.check_injection = verify_injection;
  options.check_identities = verify_identities;
  options.up_to_iso = up_to_iso;
  if (deep && n == fam::kMaxEnumerationGround) {
    options.progress = [](std::uint64_t visited) {
      std::cerr << "  ... " << visited << " families visited\n";
    };
  }

  const fam::VerificationReport report = fam::verify_ideal_families(n, options);
  const bool failed = report.stats.violations > 0 || report.injection_failures > 0 ||
                      report.identity_failures > 0;

  if (as_json) {
    json out{{"n", report.stats.n},
             {"families_visited", report.stats.families_visited},
             {"nds_max", report.stats.nds_max},
             {"violations", report.stats.violations},
             {"wall_time_ms", report.stats.wall_time.count()}};
    if (verify_injection) out["injection_failures"] = report.injection_failures;
    if (verify_identities) out["identity_failures"] = report.identity_failures;
    if (up_to_iso) out["families_up_to_iso"] = report.families_up_to_iso;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n: " << report.stats.n << "\n";
    std::cout << "families: " << report.stats.families_visited << "\n";
    std::cout << "nds-max: " << report.stats.nds_max << "\n";
    std::cout << "violations: " << report.stats.violations << "\n";
    if (verify_injection) std::cout << "injection-failures: " << report.injection_failures << "\n";
    if (verify_identities) std::cout << "identity-failures: " << report.identity_failures << "\n";
    if (up_to_iso) std::cout << "families-up-to-iso: " << report.families_up_to_iso << "\n";
    std::cout << "wall-time-ms: " << report.stats.wall_time.count() << "\n";
  }
  return failed ? kExitViolation : kExitOk;
}

int cmd_search(int n, bool require_empty, bool require_ground, const std::string& emit_dir,
               bool as_json, std::uint64_t samples, std::uint64_t seed) {
  fam::SearchOptions options;
  options.n = n;
  options.require_empty = require_empty;
  options.require_ground = require_ground;
  options.samples = samples;
  options.seed = seed;

  if (!emit_dir.empty()) std::filesystem::create_directories(emit_dir);

  std::vector<std::pair<fam::SetFamily, std::int64_t>> found;
  const fam::SearchStats stats = fam::search_intersection_closed_violations(
      options, [&](const fam::SetFamily& family, std::int64_t value) {
        found.emplace_back(family, value);
      });

  std::size_t index = 0;
  for (const auto& [family, value] : found) {
    if (!emit_dir.empty()) {
      char name[32];
      std::snprintf(name, sizeof name, "family_%04zu.txt", index);
      std::ofstream out(std::filesystem::path(emit_dir) / name);
      out << "# nds=" << value << "\n";
      fam::write_family(out, family);
    }
    ++index;
  }

  if (as_json) {
    json families = json::array();
    for (const auto& [family, value] : found) {
      families.push_back({{"nds", value}, {"edges", fam::edge_bit_strings(family)}});
    }
    json out{{"n", n},
             {"exhaustive", stats.exhaustive},
             {"families_checked", stats.families_checked},
             {"found", stats.found},
             {"families", families}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [family, value] : found) {
      std::cout << "# nds=" << value << "\n";
      fam::write_family(std::cout, family);
      std::cout << "\n";
    }
    std::cout << "# families-checked=" << stats.families_checked << " found=" << stats.found
              << (stats.exhaustive ? " (exhaustive)" : " (sampled, not exhaustive)") << "\n";
  }
  return kExitOk;
}

json certificate_to_json(const fam::InductionCertificate& cert) {
  json node{{"case", std::string(fam::case_tag_name(cert.tag))},
            {"n", cert.family.family().ground_size()},
            {"edges", cert.family.family().edge_count()},
            {"vertex", cert.vertex},
            {"nds", cert.nds_value},
            {"identity_lhs", cert.identity_lhs},
            {"identity_rhs", cert.identity_rhs},
            {"holds", cert.identity_lhs == cert.identity_rhs}};
  if (!cert.children.empty()) {
    json children;
    children["deletion"] = certificate_to_json(cert.children[0]);
    if (cert.children.size() > 1) {
      children["contraction"] = certificate_to_json(cert.children[1]);
    }
    node["children"] = children;
  }
  return node;
}

void print_certificate(std::ostream& out, const fam::InductionCertificate& cert, int indent,
                       const char* label) {
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ');
  if (label) out << label << ": ";
  out << fam::case_tag_name(cert.tag) << " n=" << cert.family.family().ground_size()
      << " edges=" << cert.family.family().edge_count() << " v=" << cert.vertex
      << " nds=" << cert.nds_value << " [" << cert.identity_lhs << " == " << cert.identity_rhs
      << (cert.identity_lhs == cert.identity_rhs ? "]" : "] MISMATCH") << "\n";
  if (!cert.children.empty()) {
    print_certificate(out, cert.children[0], indent + 1, "deletion");
    if (cert.children.size() > 1) {
      print_certificate(out, cert.children[1], indent + 1, "contraction");
    }
  }
}

int cmd_replay(const std::string& path, bool as_json) {
  const fam::SetFamily family = load_family(path);
  const fam::IdealFamily ideal = fam::IdealFamily::require(family);
  const fam::InductionCertificate cert = fam::replay_induction(ideal);
  if (as_json) {
    std::cout << certificate_to_json(cert).dump(2) << "\n";
  } else {
    print_certificate(std::cout, cert, 0, nullptr);
  }
  return cert.all_identities_hold() ? kExitOk : kExitViolation;
}

int cmd_examples(const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto write = [&](const char* name, const fam::SetFamily& family) {
    const auto path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path.string());
    fam::write_family(out, family);
    std::cout << "wrote " << path.string() << "\n";
  };
  write("powerset_n2.txt", fam::power_set_family(2));
  write("ideal_n3.txt", fam::example_ideal_family_3().family());
  write("degree_one_n4.txt", fam::degree_one_family(4, 3).family());
  write("positive_nds_n3.txt", fam::example_positive_nds_family_3());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"idealfam: a workbench for set families on small ground sets — degrees,\n"
               "normalized degree sum, minors, ideal-family enumeration, counterexample\n"
               "search, and numeric replay of the average-rarity induction"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "report degrees, tsh, nds, rarity and ideality");
  std::string check_file;
  bool check_json = false;
  check->add_option("file", check_file, "family file ('-' for stdin)")->required();
  check->add_flag("--json", check_json, "emit the JSON report");

  // minor
  auto* minor = app.add_subcommand("minor", "apply a minor operator and print the result");
  std::string minor_op;
  int minor_vertex = 0;
  bool minor_report = false;
  std::string minor_in;
  std::string minor_file;
  minor->add_option("--op", minor_op, "del | delp | con | trace")->required();
  minor->add_option("--vertex", minor_vertex, "vertex label to operate at")->required();
  minor->add_flag("--report", minor_report, "append the JSON decomposition-identity report");
  minor->add_option("--in", minor_in, "family file (default: stdin)");
  minor->add_option("file", minor_file, "family file (default: stdin)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "enumerate all ideal families on n vertices");
  int enum_n = 0;
  bool enum_count_only = false, enum_nds = false, enum_injection = false;
  bool enum_identities = false, enum_iso = false, enum_deep = false, enum_json = false;
  enumerate->add_option("--n", enum_n, "ground-set size, 1..6")->required();
  enumerate->add_flag("--count-only", enum_count_only, "only count the families");
  enumerate->add_flag("--verify-nds", enum_nds, "confirm nds <= 0 for every family");
  enumerate->add_flag("--verify-injection", enum_injection,
                      "verify the rare-vertex injection certificate per family");
  enumerate->add_flag("--verify-identities", enum_identities,
                      "verify the decomposition identities at every vertex");
  enumerate->add_flag("--up-to-iso", enum_iso, "also count families up to vertex relabeling");
  enumerate->add_flag("--deep", enum_deep, "allow the n=6 run (millions of families)");
  enumerate->add_flag("--json", enum_json, "emit JSON stats");

  // search
  auto* search = app.add_subcommand(
      "search", "search intersection-closed families for positive normalized degree sum");
  int search_n = 0;
  bool search_empty = false, search_ground = false, search_json = false;
  std::string search_emit;
  std::uint64_t search_samples = 50'000;
  std::uint64_t search_seed = 1;
  search->add_option("--n", search_n, "ground-set size, 1..5 (5 is sampled)")->required();
  search->add_flag("--require-empty", search_empty, "only families containing the empty set");
  search->add_flag("--require-ground", search_ground, "only families containing the ground set");
  search->add_option("--emit-families", search_emit, "write each hit into this directory");
  search->add_option("--samples", search_samples, "closure samples at n=5 (default 50000)");
  search->add_option("--seed", search_seed, "sampling seed at n=5 (default 1)");
  search->add_flag("--json", search_json, "emit JSON results");

  // replay
  auto* replay = app.add_subcommand("replay", "replay the average-rarity induction on a family");
  std::string replay_file;
  bool replay_json = false;
  replay->add_option("file", replay_file, "family file ('-' for stdin)")->required();
  replay->add_flag("--json", replay_json, "emit the certificate tree as JSON");

  // examples
  auto* examples = app.add_subcommand("examples", "write the stock example families as files");
  std::string examples_out = ".";
  examples->add_option("--out", examples_out, "output directory (default: current)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(check_file, check_json);
    if (app.got_subcommand(minor)) {
      const std::string input = !minor_file.empty() ? minor_file : minor_in;
      return cmd_minor(minor_op, minor_vertex, minor_report, input);
    }
    if (app.got_subcommand(enumerate)) {
      return cmd_enumerate(enum_n, enum_count_only, enum_nds, enum_injection, enum_identities,
                           enum_iso, enum_deep, enum_json);
    }
    if (app.got_subcommand(search)) {
      return cmd_search(search_n, search_empty, search_ground, search_emit, search_json,
                        search_samples, search_seed);
    }
    if (app.got_subcommand(replay)) return cmd_replay(replay_file, replay_json);
    if (app.got_subcommand(examples)) return cmd_examples(examples_out);
  } catch (const fam::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
