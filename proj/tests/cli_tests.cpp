/*
   Copyright 2026 The meadows authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.

   Exit-code and output contract of the command-line tool.
   Usage: cli_tests <path-to-cli> <data-dir>
*/

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_command(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

int failures = 0;

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "ok" : "FAIL") << " - " << what << "\n";
  if (!ok) ++failures;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_tests <cli> <data-dir>\n";
    return 1;
  }
  const std::string cli = argv[1];
  const std::string data = argv[2];

  {
    const auto r = run_command(cli + " meadow-build zn:6 --dot");
    expect(r.exit_code == 0, "meadow-build zn:6 --dot exits 0");
    expect(r.output.find("digraph") != std::string::npos, "DOT header present");
    expect(r.output.find("{a}") != std::string::npos, "bottom rendered as {a}");
    // the diamond: the top covers two vertices, both cover the bottom
    expect(r.output.find("v0 -> v1") != std::string::npos &&
               r.output.find("v0 -> v2") != std::string::npos &&
               r.output.find("v1 -> v3") != std::string::npos &&
               r.output.find("v2 -> v3") != std::string::npos,
           "diamond edges in DOT output");
  }
  {
    const auto r = run_command(cli + " meadow-decompose zn:12");
    expect(r.exit_code == 0, "meadow-decompose zn:12 exits 0");
    const auto doc = nlohmann::json::parse(r.output, nullptr, false);
    expect(!doc.is_discarded(), "decompose report is valid JSON");
    if (!doc.is_discarded()) {
      expect(doc["factor_count"] == 2, "two local factors for Z_12");
      expect(doc["isomorphism_verified"] == true, "isomorphism verified");
      expect(doc["factors"][0]["local"] == true && doc["factors"][1]["local"] == true,
             "both factors local");
    }
  }
  {
    const auto r = run_command(cli + " meadow-check custom-lattice " + data +
                               "/pi1pi1.json");
    expect(r.exit_code == 2, "non-common custom lattice exits 2");
    expect(r.output.find("(1,0)") != std::string::npos, "witness (1,0) printed");
    expect(r.output.find("FAIL") != std::string::npos, "failed check visible");
  }
  {
    const auto r = run_command(cli + " meadow-check zn:6");
    expect(r.exit_code == 0, "meadow-check zn:6 exits 0");
    expect(r.output.find("all axioms hold") != std::string::npos,
           "meadow-check success message");
  }
  {
    const auto r = run_command(cli + " meadow-check custom-lattice " + data +
                               "/pi1pi1.json --json");
    expect(r.exit_code == 2, "JSON meadow-check still exits 2 on failure");
    const auto doc = nlohmann::json::parse(r.output, nullptr, false);
    expect(!doc.is_discarded() && doc["is_common"] == false &&
               doc["pre_meadow"]["all_passed"] == true,
           "JSON check report separates pre-meadow from commonality");
  }
  {
    const auto r = run_command(cli + " ring-info zn:6");
    expect(r.exit_code == 0, "ring-info exits 0");
    expect(r.output.find("units (2): 1 5") != std::string::npos, "units of Z_6");
  }
  {
    const auto r = run_command(cli + " ideals zn:6 --json");
    const auto doc = nlohmann::json::parse(r.output, nullptr, false);
    expect(!doc.is_discarded() && doc["count"] == 4, "ideals zn:6 --json count 4");
    expect(doc["schema"] == 1, "schema field present");
  }
  {
    const auto r = run_command(cli + " meadow-product zn:4 zn:2");
    expect(r.exit_code == 0, "meadow-product exits 0");
    expect(r.output.find("common: yes") != std::string::npos, "product is common");
  }
  {
    expect(run_command(cli + " ring-info zn:0").exit_code == 1, "bad spec exits 1");
    expect(run_command(cli + " ring-info ga:base=zn:5,group=[12]").exit_code == 1,
           "cap exceeded exits 1");
    expect(run_command(cli + " no-such-verb").exit_code == 64, "unknown verb exits 64");
    expect(run_command(cli + " ring-info zn:6 --wat").exit_code == 64,
           "unknown flag exits 64");
    expect(run_command(cli + " custom-lattice /nonexistent.json").exit_code == 1,
           "missing file exits 1");
  }
  {
    // the cap flag reaches the constructions: lowering it refuses a ring
    // the default admits
    const auto refused = run_command(cli + " ideals zn:100 --cap 50");
    const auto allowed = run_command(cli + " ideals zn:100");
    expect(refused.exit_code == 1 && allowed.exit_code == 0,
           "--cap bounds the carrier size");
  }

  std::cout << (failures == 0 ? "all CLI checks passed\n" : "CLI checks FAILED\n");
  return failures;
}
