/*
 * Copyright 2026 The sympow authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Drives the installed binary through popen; the path comes in via the
// SYMPOW_BIN environment variable set by the test harness.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

std::string binary() {
  const char* p = std::getenv("SYMPOW_BIN");
  if (!p) throw std::runtime_error("SYMPOW_BIN is not set");
  return p;
}

struct RunResult {
  int code;
  std::string out;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  std::string cmd = "\"" + binary() + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

fs::path fresh_path(const std::string& name) {
  fs::path p = fs::temp_directory_path() / name;
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("exit codes by failure class", "[cli]") {
  CHECK(run("analyze --exponents 5,6,7,8").code == 0);
  auto redundant = run("analyze --exponents 3,4,5,6");
  CHECK(redundant.code == 2);
  CHECK(redundant.out.find("redundant generator 6") != std::string::npos);
  auto wrong_kind = run("witness --exponents 5,6,7,8 --kind 3k");
  CHECK(wrong_kind.code == 3);
  CHECK(wrong_kind.out.find("pfaffian") != std::string::npos);
  CHECK(run("analyze").code == 2);  // missing required option
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("analyze prints the equality table", "[cli]") {
  auto r = run("analyze --exponents 5,6,7,8 --n-max 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("P^(2)") != std::string::npos);
  CHECK(r.out.find("inequality_at(3)") != std::string::npos);
}

TEST_CASE("witness certificates print and verify", "[cli]") {
  auto r = run("witness --exponents 6,7,8,9");
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: pass") != std::string::npos);

  auto p = run("witness --exponents 5,6,7,8 --kind pfaffian");
  CHECK(p.code == 0);
  CHECK(p.out.find("z^2-y*w") != std::string::npos);
}

TEST_CASE("bound outputs are exact", "[cli]") {
  CHECK(run("bound --n 3 --d 4").out == "28/5 (= 5.6)\n");
  CHECK(run("bound --n 1 --d 7").out == "7\n");
  CHECK(run("bound --n 3 --d 4 --e 5").out == "e=5 < 28/5 => P^3 != P^(3)\n");
  CHECK(run("bound --n 2 --d 4 --e 5").out ==
        "e=5 >= 5: no forced inequality at n=2\n");
}

TEST_CASE("json report round-trips byte for byte", "[cli]") {
  fs::path out = fresh_path("sympow_cli_report.json");
  auto r = run("analyze --exponents 5,6,7,8 --n-max 3 --json " + out.string());
  REQUIRE(r.code == 0);
  std::string raw = slurp(out);
  auto j = nlohmann::ordered_json::parse(raw);
  CHECK(j.dump(2) + "\n" == raw);
  CHECK(j["spec"]["exponents"] == nlohmann::ordered_json({5, 6, 7, 8}));
  CHECK(j["multiplicity"] == 5);
  CHECK(j["verdict"] == "inequality_at(3)");
  CHECK(j["equality"][0]["equal"] == true);
  CHECK(j["equality"][1]["equal"] == false);
  fs::remove(out);
}

TEST_CASE("scan output does not depend on the worker count", "[cli]") {
  fs::path one = fresh_path("sympow_scan_p1.csv");
  fs::path many = fresh_path("sympow_scan_p8.csv");
  std::string common = "scan --family arith4 --a 4..8 --r 1..2 --n-max 3 ";
  REQUIRE(run(common + "--parallel 1 --output " + one.string()).code == 0);
  REQUIRE(run(common + "--parallel 8 --output " + many.string()).code == 0);
  CHECK(slurp(one) == slurp(many));
  CHECK(!slurp(one).empty());
  fs::remove(one);
  fs::remove(many);
}

TEST_CASE("scan resumes instead of recomputing", "[cli]") {
  fs::path out = fresh_path("sympow_scan_resume.csv");
  std::string base = "scan --family arith4 --r 1 --n-max 2 --output " +
                     out.string() + " --a ";
  auto first = run(base + "4..6");
  REQUIRE(first.code == 0);
  std::string after_first = slurp(out);

  auto again = run(base + "4..6");
  REQUIRE(again.code == 0);
  CHECK(again.out.find("0 new row(s)") != std::string::npos);
  CHECK(slurp(out) == after_first);

  auto extended = run(base + "4..8");
  REQUIRE(extended.code == 0);
  std::string after_extend = slurp(out);
  CHECK(after_extend.size() > after_first.size());
  CHECK(after_extend.compare(0, after_first.size(), after_first) == 0);

  auto lines = lines_of(after_extend);
  REQUIRE(lines.size() > 1);
  std::set<std::string> keys;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::string key = lines[i].substr(0, lines[i].find(','));
    INFO(lines[i]);
    CHECK(keys.insert(key).second);
  }
  fs::remove(out);
}

TEST_CASE("scan writes json rows on request", "[cli]") {
  fs::path out = fresh_path("sympow_scan_rows.jsonl");
  auto r = run("scan --family explicit --exponents 8,12,18,27 --format json "
               "--output " + out.string());
  REQUIRE(r.code == 0);
  auto lines = lines_of(slurp(out));
  REQUIRE(lines.size() == 1);
  auto j = nlohmann::ordered_json::parse(lines[0]);
  CHECK(j["exponents"] == nlohmann::ordered_json({8, 12, 18, 27}));
  CHECK(j["verdict"] == "all_equal_complete_intersection");
  CHECK(j["mu"] == 3);
  fs::remove(out);
}
