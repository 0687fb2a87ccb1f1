// End-to-end runs of the command-line tool; the binary path arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

using nlohmann::json;

namespace {

std::string g_cli;
std::filesystem::path g_dir;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int rc = pclose(p);
  return {WEXITSTATUS(rc), out};
}

json report_of(const RunResult& r) { return json::parse(r.out)["report"]; }

std::string path(const std::string& name) { return (g_dir / name).string(); }

}  // namespace

TEST_CASE("construct emits a bare family artifact") {
  auto r = run("construct --monomial q=3 t=2 s=1 r=2 --out " + path("fam.json"));
  CHECK(r.exit_code == 0);
  // stdout carries the wrapped report, the file carries the artifact
  CHECK(json::parse(r.out)["config"]["subcommand"] == "construct");
  std::ifstream f(path("fam.json"));
  REQUIRE(f.good());
  const json doc = json::parse(f);
  CHECK(doc["subspaces"].size() == 2);
  CHECK(doc["params"]["kind"] == "monomial");
}

TEST_CASE("verify reports verdicts with exit code zero") {
  auto r = run("verify --multi-sidon " + path("fam.json"));
  CHECK(r.exit_code == 0);
  CHECK(report_of(r)["result"] == true);
  auto r2 = run("verify --poly-criterion " + path("fam.json"));
  CHECK(r2.exit_code == 0);
  CHECK(report_of(r2)["result"] == true);

  // a failing verdict still exits 0
  auto rc = run("construct --orbit-code q=5 t=2 s=1 --append-subfield --out " + path("aug.json"));
  REQUIRE(rc.exit_code == 0);
  auto r3 = run("verify --multi-sidon --emit-witness " + path("aug.json"));
  CHECK(r3.exit_code == 0);
  CHECK(report_of(r3)["result"] == false);
  CHECK(report_of(r3).contains("witness"));
}

TEST_CASE("spectrum, distance, equivalence, simulation") {
  auto r = run("spectrum " + path("fam.json") + " --heavy --hyperplane");
  CHECK(r.exit_code == 0);
  CHECK(report_of(r)["heavy"]["spectrum"]["size"] == 34);
  CHECK(report_of(r)["hyperplane"]["total"] == 82);

  auto d = run("distance --family " + path("fam.json") + " --emit-code " + path("code.json"));
  CHECK(d.exit_code == 0);
  CHECK(report_of(d)["size"] == 80);
  CHECK(report_of(d)["min_distance"] == 2);

  auto e = run("equiv " + path("fam.json") + " " + path("fam.json") + " --mode monomial");
  CHECK(e.exit_code == 0);
  CHECK(report_of(e)["result"] == "equivalent");
  auto e2 = run("equiv " + path("fam.json") + " " + path("code.json") + " --mode semilinear");
  CHECK(e2.exit_code == 0);
  CHECK(report_of(e2)["result"] == "equivalent");

  // a distance-4 code corrects one erased dimension
  auto c3 = run("construct --monomial q=3 t=3 s=1 r=1 --out " + path("fam3.json"));
  REQUIRE(c3.exit_code == 0);
  auto s = run("simulate --family " + path("fam3.json") + " --rho 1 --e 0 --trials 30 --seed 7");
  CHECK(s.exit_code == 0);
  CHECK(report_of(s)["successes"] == 30);
  CHECK(report_of(s)["wrong_unique_claims"] == 0);

  // byte-identical reports for identical invocations
  auto s2 = run("simulate --family " + path("fam3.json") + " --rho 1 --e 0 --trials 30 --seed 7");
  CHECK(s.out == s2.out);
}

TEST_CASE("suites run from the verify subcommand") {
  auto r = run("verify --suite projection --samples 6 --seed 2");
  CHECK(r.exit_code == 0);
  CHECK(report_of(r)["all_ok"] == 6);
}

TEST_CASE("formats and error exit codes") {
  auto t = run("spectrum " + path("fam.json") + " --format table");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("report.spectrum.size") != std::string::npos);
  auto c = run("spectrum " + path("fam.json") + " --format csv");
  CHECK(c.exit_code == 0);

  // unknown flag
  CHECK(run("verify --no-such-flag x.json").exit_code != 0);
  // malformed input file
  {
    std::ofstream bad(path("bad.json"));
    bad << "{not json";
  }
  CHECK(run("verify --multi-sidon " + path("bad.json")).exit_code == 2);
  // cap exceeded is a distinct exit code
  CHECK(run("spectrum " + path("fam.json") + " --cap 4").exit_code == 3);
  // missing seed for a randomized subcommand
  CHECK(run("simulate --code " + path("code.json") + " --rho 1 --trials 5").exit_code == 2);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli-binary>\n");
    return 2;
  }
  g_cli = argv[1];
  g_dir = std::filesystem::temp_directory_path() / "msidon_cli_test";
  std::filesystem::create_directories(g_dir);
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  const int rc = ctx.run();
  std::filesystem::remove_all(g_dir);
  return rc;
}
