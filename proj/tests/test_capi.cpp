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

#include <string>

#include "boolnorm/boolnorm.h"
#include "doctest.h"

namespace {

const char* kNormA = R"({"kind":"closure","base":{"1":1,"2":3,"1,2":2}})";

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  bn_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("norm handles") {
  bn_norm* n = nullptr;
  REQUIRE(bn_norm_from_json(kNormA, &n) == BN_OK);
  CHECK(bn_norm_rank(n) == 2);
  const uint32_t both[] = {1, 2};
  double v = 0.0;
  CHECK(bn_norm_eval(n, both, 2, &v) == BN_OK);
  CHECK(v == 2.0);
  const uint32_t three[] = {3};
  CHECK(bn_norm_eval(n, three, 1, &v) == BN_ERR_INDEX_OUT_OF_RANK);
  CHECK(std::string(bn_last_error()).find("outside rank") != std::string::npos);
  int pass = 0;
  char* report = nullptr;
  CHECK(bn_norm_check_axioms(n, 0, &pass, &report) == BN_OK);
  CHECK(pass == 1);
  CHECK(take(report).find("\"pass\":true") != std::string::npos);
  bn_norm_free(n);

  bn_norm* bad = nullptr;
  CHECK(bn_norm_from_json("{", &bad) == BN_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(bn_norm_from_json(R"({"kind":"weighted","weights":[-1]})", &bad) == BN_ERR_INVALID_SPEC);
  CHECK(bn_norm_from_json(nullptr, &bad) == BN_ERR_INVALID_ARGUMENT);
  CHECK(std::string(bn_status_name(BN_ERR_INVALID_SPEC)) == "invalid-spec");
  CHECK(std::string(bn_status_name(BN_OK)) == "ok");
  CHECK(std::string(bn_version()).size() > 0);
}

TEST_CASE("reduce, express and verify") {
  bn_norm* n = nullptr;
  REQUIRE(bn_norm_from_json(kNormA, &n) == BN_OK);
  bn_basis* b = nullptr;
  char* stats = nullptr;
  REQUIRE(bn_reduce(n, 2, nullptr, &b, &stats) == BN_OK);
  CHECK(take(stats).find("\"basis\":[[1],[1,2]]") != std::string::npos);
  char* rows = nullptr;
  REQUIRE(bn_basis_to_json(b, &rows) == BN_OK);
  CHECK(take(rows) == "[[1],[1,2]]");
  CHECK(bn_basis_rank(b) == 2);

  const uint32_t two[] = {2};
  uint32_t coords[2] = {0, 0};
  size_t len = 0;
  CHECK(bn_express(b, two, 1, coords, &len) == BN_OK);
  CHECK(len == 2);
  CHECK(coords[0] == 1);
  CHECK(coords[1] == 2);

  int pass = 0;
  char* report = nullptr;
  CHECK(bn_verify(b, n, "all", &pass, &report) == BN_OK);
  CHECK(pass == 1);
  bn_string_free(report);
  CHECK(bn_verify(b, n, "L7", &pass, nullptr) == BN_ERR_INVALID_ARGUMENT);

  bn_search_options opts{1, 0, 1};
  bn_basis* none = nullptr;
  bn_norm* w = nullptr;
  REQUIRE(bn_norm_from_json(R"({"kind":"weighted","weights":[1,1,1,1]})", &w) == BN_OK);
  CHECK(bn_reduce(w, 4, &opts, &none, nullptr) == BN_ERR_SEARCH_BOUND_EXCEEDED);
  CHECK(none == nullptr);
  bn_norm_free(w);
  bn_basis_free(b);
  bn_norm_free(n);
}

TEST_CASE("negative control through the C interface") {
  bn_norm* n = nullptr;
  REQUIRE(bn_norm_from_json(R"({"kind":"table","values":{"1":4,"2":5,"1,2":2}})", &n) == BN_OK);
  bn_basis* b = nullptr;
  REQUIRE(bn_basis_from_json("[[1],[2]]", &b) == BN_OK);
  int pass = 1;
  char* report = nullptr;
  CHECK(bn_verify(b, n, "L0iii,L1", &pass, &report) == BN_OK);
  CHECK(pass == 0);
  const std::string text = take(report);
  CHECK(text.find("\"witness\":[[1,2]]") != std::string::npos);
  CHECK(text.find("\"k\":0") != std::string::npos);
  bn_basis_free(b);
  bn_norm_free(n);
  CHECK(bn_basis_from_json("[]", &b) == BN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("rebase and campaign") {
  bn_norm* n = nullptr;
  REQUIRE(bn_norm_from_json(R"({"kind":"weighted","weights":[1,1,1,1]})", &n) == BN_OK);
  bn_basis* b = nullptr;
  REQUIRE(bn_reduce(n, 4, nullptr, &b, nullptr) == BN_OK);
  int ok = 0;
  char* report = nullptr;
  CHECK(bn_rebase(b, n, "[[2],[1,2,3],[1,3,4]]", 0, &ok, &report) == BN_OK);
  CHECK(ok == 1);
  CHECK(take(report).find("\"rows\":[[1],[1,2],[1,3],[1,4]]") != std::string::npos);
  CHECK(bn_rebase(b, n, "[[1]]", 0, &ok, nullptr) == BN_ERR_UNUSABLE_SEQUENCE);
  bn_basis_free(b);
  bn_norm_free(n);

  bn_campaign_config config{};
  config.rank = 5;
  config.family = "weighted";
  config.checks = "all";
  config.trials = 4;
  config.seed = 3;
  config.threads = 2;
  int all = 0;
  char* csv = nullptr;
  char* summary = nullptr;
  CHECK(bn_campaign(&config, &all, &csv, &summary) == BN_OK);
  CHECK(all == 1);
  const std::string first = take(csv);
  CHECK(take(summary).find("\"pass_rate\":1.0") != std::string::npos);
  config.threads = 1;
  CHECK(bn_campaign(&config, &all, &csv, nullptr) == BN_OK);
  CHECK(take(csv) == first);
  config.trials = 0;
  CHECK(bn_campaign(&config, &all, nullptr, nullptr) == BN_ERR_INVALID_ARGUMENT);
  config.trials = 1;
  config.family = "nope";
  CHECK(bn_campaign(&config, &all, nullptr, nullptr) == BN_ERR_INVALID_ARGUMENT);
}
