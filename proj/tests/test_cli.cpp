// Drives the congmonoid binary end to end: exit codes, output formats,
// determinism across thread counts.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into a temp file (kept separate from
// stdout so format checks stay exact).
RunResult run_cli(const std::string& args, bool capture_stderr = false) {
  const std::string redirect = capture_stderr ? " 2>&1" : " 2>/dev/null";
  const std::string cmd = std::string(CONGMONOID_CLI_PATH) + " " + args + redirect;
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

size_t count_lines(const std::string& s) {
  size_t lines = 0;
  for (char c : s)
    if (c == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("im table output") {
  const auto r = run_cli("im --n 4");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 7);  // header + 6 rows
  CHECK(r.out.find("(1,0,1)") != std::string::npos);
  CHECK(r.out.find("counts") != std::string::npos);
}

TEST_CASE("im degree slice") {
  const auto r = run_cli("im --n 4 --degree 3");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 3);
  CHECK(r.out.find("(2,1,0)") != std::string::npos);
  CHECK(r.out.find("(0,1,2)") != std::string::npos);
  CHECK(r.out.find("(4,0,0)") == std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("im --n 1").exit_code == 2);
  CHECK(run_cli("im").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("im json round-trips") {
  const auto r = run_cli("im --n 4 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(j["count"] == 6);
  REQUIRE(j["elements"].size() == 6);
  // Solution schema: {"n": ..., "counts": [...]}
  const auto& first = j["elements"][0]["solution"];
  CHECK(first["n"] == 4);
  CHECK(first["counts"] == nlohmann::json::array({0, 2, 0}));
  CHECK(j["elements"][0]["degree"] == 2);
  CHECK(j["elements"][0]["multiplicity"] == 1);
  // parse back all six and compare against a fresh run
  const auto r2 = run_cli("im --n 4 --format json");
  CHECK(r2.out == r.out);
}

TEST_CASE("im csv output") {
  const auto r = run_cli("im --n 4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 7);
  CHECK(r.out.rfind("counts,degree,multiplicity,level,orbit_size\n", 0) == 0);
  CHECK(r.out.find("1 0 1,2,1,1,1") != std::string::npos);
}

TEST_CASE("enumerate") {
  const auto r = run_cli("enumerate --n 4 --degree 2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 3);  // header + M(2) = {(0,2,0),(1,0,1)}
}

TEST_CASE("gen layer and exit 4 below the threshold") {
  const auto ok = run_cli("gen --n 8 --degree 5");
  CHECK(ok.exit_code == 0);
  CHECK(count_lines(ok.out) == 4);  // header + p(3) rows

  const auto orbits = run_cli("gen --n 8 --degree 5 --orbits --format json");
  CHECK(orbits.exit_code == 0);
  const auto j = nlohmann::json::parse(orbits.out);
  CHECK(j["count"] == 3);
  size_t total = 0;
  for (const auto& orb : j["orbits"]) {
    CHECK(orb["size"] == 4);  // phi(8)
    CHECK(orb["level"] == 1);
    total += orb["elements"].size();
  }
  CHECK(total == 12);  // 3 * phi(8)

  const auto below = run_cli("gen --n 8 --degree 3");
  CHECK(below.exit_code == 4);

  const auto forced = run_cli("gen --n 8 --degree 3 --force", true);
  CHECK(forced.exit_code == 0);
  CHECK(forced.out.find("warning") != std::string::npos);
  const auto forced_quiet = run_cli("gen --n 8 --degree 3 --force --quiet", true);
  CHECK(forced_quiet.out.find("warning") == std::string::npos);
}

TEST_CASE("orbits subcommand") {
  const auto r = run_cli("orbits --n 4 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 4);
  CHECK(j["orbits"][0]["representative"]["counts"] == nlohmann::json::array({0, 0, 4}));
  CHECK(j["orbits"][0]["size"] == 2);
  CHECK(j["orbits"][0]["level"] == 1);
}

TEST_CASE("reduce") {
  const auto r = run_cli("reduce --mod 4 --weights 2,6 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["support"] == nlohmann::json::array({2}));
  CHECK(j["groups"][0]["variables"] == nlohmann::json::array({0, 1}));
  CHECK(j["generators"] ==
        nlohmann::json::array({{0, 2}, {1, 1}, {2, 0}}));

  const auto table = run_cli("reduce --mod 4 --weights 4,1");
  CHECK(table.exit_code == 0);
  CHECK(table.out.find("dropped") != std::string::npos);
  CHECK(table.out.find("(1,0)") != std::string::npos);
  CHECK(table.out.find("(0,4)") != std::string::npos);
}

TEST_CASE("verify") {
  const auto r = run_cli("verify --n 6 --check conjecture3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("proved-and-verified") != std::string::npos);

  const auto js = run_cli("verify --n 6 --check conjecture3 --format json");
  const auto j = nlohmann::json::parse(js.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["check_name"] == "conjecture3");
  CHECK(j[0]["status"] == "proved-and-verified");
  CHECK(j[0]["witnesses"].empty());

  CHECK(run_cli("verify --n 4").exit_code == 0);
  CHECK(run_cli("verify").exit_code == 2);
  CHECK(run_cli("verify --n 13 --check quadratic").exit_code == 3);
  CHECK(run_cli("verify --n 6 --check bogus").exit_code == 2);
}

TEST_CASE("summary table") {
  const auto r = run_cli("table --n-max 10 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 10);  // header + 9 rows
  CHECK(r.out.find("4,6,5,2,6,yes") != std::string::npos);  // the n=4 row, equality

  const auto t = run_cli("table --n-max 4");
  CHECK(t.out.find("yes") != std::string::npos);
  CHECK(t.out.find("no") != std::string::npos);  // n=2,3 miss the printed bound

  CHECK(run_cli("table --n-max 40").exit_code == 3);
}

TEST_CASE("limit flag exits 3") {
  CHECK(run_cli("im --n 10 --limit 10 --threads 1").exit_code == 3);
}

TEST_CASE("byte-identical output across thread counts") {
  const auto a = run_cli("im --n 9 --threads 1 --format json");
  const auto b = run_cli("im --n 9 --threads 4 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto c = run_cli("im --n 9 --threads 1 --format csv");
  const auto d = run_cli("im --n 9 --threads 3 --format csv");
  CHECK(c.out == d.out);
}

TEST_CASE("seed check") {
  const auto r = run_cli("--seed-check 6", true);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("matches") != std::string::npos);
}
