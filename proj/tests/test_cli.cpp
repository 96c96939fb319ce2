#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "idealfam/catalog.hpp"
#include "idealfam/io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

// Runs the built binary with stdout captured; stderr is discarded.
CliResult run_cli(const std::string& args) {
  const std::string command = std::string(IDEALFAM_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t read = 0;
  while ((read = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, read);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "idealfam_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& contents) {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << contents;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check reports the seven-edge family") {
    const auto path = write_file("seven.txt",
                                 idealfam::family_to_string(
                                     idealfam::example_ideal_family_3().family()));
    const CliResult r = run_cli("check --json " + path.string());
    CHECK(r.status == 0);
    const json report = json::parse(r.out);
    CHECK(report["n"] == 3);
    CHECK(report["num_edges"] == 7);
    CHECK(report["tsh"] == 10);
    CHECK(report["nds"] == -1);
    CHECK(report["degrees"] == json::array({4, 3, 3}));
    CHECK(report["rare_vertices"] == json::array({1, 2}));
    CHECK(report["is_intersection_closed"] == true);
    CHECK(report["is_ideal"] == true);
  }

  TEST_CASE("check reports the positive-nds chain family") {
    const auto path = write_file("chain.txt",
                                 idealfam::family_to_string(
                                     idealfam::example_positive_nds_family_3()));
    const CliResult r = run_cli("check --json " + path.string());
    CHECK(r.status == 0);
    const json report = json::parse(r.out);
    CHECK(report["nds"] == 1);
    CHECK(report["is_ideal"] == false);
    CHECK(report["rare_vertices"] == json::array({1, 2}));
  }

  TEST_CASE("examples round-trip byte-identically") {
    const fs::path dir = scratch_dir() / "examples_out";
    const CliResult r = run_cli("examples --out " + dir.string());
    CHECK(r.status == 0);
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
      ++seen;
      std::ifstream in(entry.path());
      std::stringstream buffer;
      buffer << in.rdbuf();
      const std::string original = buffer.str();
      std::istringstream parse_in(original);
      const idealfam::SetFamily parsed = idealfam::read_family(parse_in);
      CHECK(idealfam::family_to_string(parsed) == original);
    }
    CHECK(seen == 4);
  }

  TEST_CASE("minor del matches the library") {
    const auto path = write_file("seven2.txt",
                                 idealfam::family_to_string(
                                     idealfam::example_ideal_family_3().family()));
    const CliResult r = run_cli("minor --op del --vertex 2 " + path.string());
    CHECK(r.status == 0);
    CHECK(r.out == "n=2\n00\n10\n01\n11\n");
  }

  TEST_CASE("minor report appends identity JSON") {
    const auto path = write_file("seven3.txt",
                                 idealfam::family_to_string(
                                     idealfam::example_ideal_family_3().family()));
    const CliResult r = run_cli("minor --op con --vertex 2 --report " + path.string());
    CHECK(r.status == 0);
    const auto brace = r.out.find('{');
    REQUIRE(brace != std::string::npos);
    CHECK(r.out.substr(0, brace) == "n=2\n00\n10\n11\n");
    const json report = json::parse(r.out.substr(brace));
    CHECK(report["all_hold"] == true);
    CHECK(report["vertex"] == 2);
    CHECK(report["identities"].size() == 5);
  }

  TEST_CASE("enumerate n=5 with all verifications exits 0") {
    const CliResult r = run_cli("enumerate --n 5 --verify-nds --verify-injection "
                                "--verify-identities --json");
    CHECK(r.status == 0);
    const json stats = json::parse(r.out);
    CHECK(stats["families_visited"] == 7579);
    CHECK(stats["violations"] == 0);
    CHECK(stats["nds_max"] == 0);
    CHECK(stats["injection_failures"] == 0);
    CHECK(stats["identity_failures"] == 0);
  }

  TEST_CASE("enumerate rejects n=6 without --deep") {
    CHECK(run_cli("enumerate --n 6").status == 2);
    CHECK(run_cli("enumerate --n 7 --deep").status == 2);
    CHECK(run_cli("enumerate --n 0").status == 2);
  }

  TEST_CASE("search finds the chain family at n=3") {
    const CliResult r = run_cli("search --n 3 --require-empty --require-ground --json");
    CHECK(r.status == 0);
    const json out = json::parse(r.out);
    CHECK(out["exhaustive"] == true);
    CHECK(out["found"].get<int>() >= 1);
    bool chain_present = false;
    for (const auto& fam : out["families"]) {
      CHECK(fam["nds"].get<int>() > 0);
      if (fam["edges"] == json::array({"000", "100", "110", "101", "111"})) {
        chain_present = true;
      }
    }
    CHECK(chain_present);
  }

  TEST_CASE("replay prints a certificate and exits 0 on an ideal family") {
    const auto path = write_file("seven4.txt",
                                 idealfam::family_to_string(
                                     idealfam::example_ideal_family_3().family()));
    const CliResult r = run_cli("replay --json " + path.string());
    CHECK(r.status == 0);
    const json cert = json::parse(r.out);
    CHECK(cert["case"] == "DegGe2WithUV");
    CHECK(cert["holds"] == true);
    CHECK(cert["children"].contains("deletion"));
    CHECK(cert["children"].contains("contraction"));
  }

  TEST_CASE("replay exits 2 on a non-ideal family") {
    const auto path = write_file("chain2.txt",
                                 idealfam::family_to_string(
                                     idealfam::example_positive_nds_family_3()));
    CHECK(run_cli("replay " + path.string()).status == 2);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("check /nonexistent/family.txt").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("enumerate --n 3 --unknown-flag").status == 2);
    const auto bad = write_file("bad.txt", "n=3\n10\n");
    CHECK(run_cli("check " + bad.string()).status == 2);
  }
}
