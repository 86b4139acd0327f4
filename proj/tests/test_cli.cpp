/* Copyright 2026 The boolnorm Authors
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
 *
 */

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = BOOLNORM_CLI_PATH;
const std::string kData = BOOLNORM_TEST_DATA;

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("boolnorm_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

// Runs the CLI with `args`, stdout to `out` (inside the scratch dir), and
// returns the exit status.
int run(const std::string& args, const std::string& out = "stdout.txt") {
  const std::string cmd = kCli + " " + args + " > " + (scratch() / out).string() + " 2> " +
                          (scratch() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& name) {
  std::ifstream in(scratch() / name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const std::string& name) { return kData + "/" + name; }

}  // namespace

TEST_CASE("reduce") {
  CHECK(run("reduce --norm " + data("norm_a.json") + " --rank 2") == 0);
  CHECK(nlohmann::json::parse(slurp("stdout.txt"))["basis"].dump() == "[[1],[1,2]]");
  CHECK(run("reduce --norm " + data("weighted5.json")) == 0);
  CHECK(nlohmann::json::parse(slurp("stdout.txt"))["basis"].dump() == "[[1],[2],[3],[4],[5]]");
  CHECK(run("reduce --norm " + data("negative_weight.json")) == 2);
  CHECK(run("reduce --norm " + data("missing.json")) == 2);
  CHECK(run("reduce --norm " + data("norm_a.json") + " --rank 3") == 2);
  CHECK(run("reduce") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("axiom failures stop reduce unless skipped") {
  CHECK(run("reduce --norm " + data("triangle_failure.json")) == 2);
  CHECK(slurp("stderr.txt").find("norm axioms") != std::string::npos);
  CHECK(run("reduce --norm " + data("triangle_failure.json") + " --skip-axioms") == 0);
}

TEST_CASE("verify") {
  CHECK(run("verify --norm " + data("norm_a.json") + " --checks all") == 0);
  const auto report = nlohmann::json::parse(slurp("stdout.txt"));
  CHECK(report["pass"] == true);
  CHECK(report["reports"].size() == 5);

  CHECK(run("verify --norm " + data("failing_table.json") + " --basis " + data("unreduced_basis.json")) == 1);
  const auto bad = nlohmann::json::parse(slurp("stdout.txt"));
  CHECK(bad["reports"][0]["lemma"] == "L0iii");
  CHECK(bad["reports"][0]["violations"][0]["witness"].dump() == "[[1,2]]");
  CHECK(bad["reports"][1]["violations"][0]["k"] == 0);

  CHECK(run("verify --norm " + data("norm_a.json") + " --checks L9") == 2);
  CHECK(run("verify --norm " + data("norm_a.json") + " --out " + (scratch() / "v.json").string()) == 0);
  CHECK(slurp("stdout.txt").empty());
  CHECK(nlohmann::json::parse(slurp("v.json"))["pass"] == true);
}

TEST_CASE("rebase") {
  CHECK(run("rebase --norm " + data("weighted4.json") + " --seq " + data("sequence_rank4.json")) == 0);
  const auto report = nlohmann::json::parse(slurp("stdout.txt"));
  CHECK(report["independent"] == true);
  CHECK(report["rank"] == 4);
  CHECK(run("rebase --norm " + data("weighted4.json") + " --seq " + data("sequence_unusable.json")) == 2);
  CHECK(run("rebase --norm " + data("weighted4.json") + " --seq " + data("sequence_duplicates.json")) == 0);
  const auto dup = nlohmann::json::parse(slurp("stdout.txt"));
  CHECK_FALSE(dup["normalization"]["dropped_duplicates"].empty());
  CHECK(run("rebase --norm " + data("weighted4.json")) == 2);
}

TEST_CASE("campaign") {
  CHECK(run("campaign --family closure --rank 8 --trials 100 --seed 1", "c1.csv") == 0);
  CHECK(run("campaign --family closure --rank 8 --trials 100 --seed 1 --threads 4", "c2.csv") == 0);
  const std::string csv = slurp("c1.csv");
  CHECK(csv == slurp("c2.csv"));
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 101);
  CHECK(csv.find(",0\n") == std::string::npos);
  CHECK(run("campaign --trials 0") == 2);
  CHECK(run("campaign --family gaussian --trials 1") == 2);
  CHECK(run("campaign --checks L1,bogus --trials 1") == 2);
  CHECK(run("campaign --norm " + data("triangle_failure.json") + " --checks L0iii --trials 1") == 1);
}
