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

#include <random>
#include <thread>

#include "boolnorm/norms.hpp"
#include "boolnorm/pipeline.hpp"
#include "doctest.h"
#include "support/errors.hpp"
#include "support/oracles.hpp"

using namespace boolnorm;

namespace {

NormOracle norm_a() {
  return closure_norm(BaseCostTable(2, {0.0, 1.0, 3.0, 2.0}));
}

}  // namespace

TEST_CASE("tolerant comparison") {
  CHECK(leq_tol(1.0, 1.0));
  CHECK(leq_tol(1.0 + 1e-12, 1.0));
  CHECK_FALSE(leq_tol(1.0 + 1e-6, 1.0));
  CHECK(leq_tol(0.0, 0.0));
  CHECK(leq_tol(-1.0, 0.0));
}

TEST_CASE("weighted norm") {
  const WeightSpec spec{{1.0, 2.0, 4.0}};
  CHECK(weighted_norm(spec, Element::from_indices({1, 3})) == 5.0);
  CHECK(weighted_norm(spec, kZero) == 0.0);
  const NormOracle n = NormOracle::weighted(spec);
  CHECK(n.rank() == 3);
  CHECK(n.kind() == "weighted");
  CHECK(n(Element::full(3)) == 7.0);
  CHECK_ERROR_CODE(n(Element::singleton(4)), ErrorCode::IndexOutOfRank);
  CHECK_ERROR_CODE(NormOracle::weighted(WeightSpec{{1.0, -1.0}}), ErrorCode::InvalidSpec);
  CHECK_ERROR_CODE(NormOracle::weighted(WeightSpec{{1.0, 0.0}}), ErrorCode::InvalidSpec);
  CHECK_ERROR_CODE(NormOracle::weighted(WeightSpec{{}}), ErrorCode::InvalidSpec);
}

TEST_CASE("metric validation") {
  CHECK_NOTHROW(MetricSpec{{{0, 1}, {1, 0}}}.validate());
  CHECK_ERROR_CODE((MetricSpec{{{0, 1}, {2, 0}}}.validate()), ErrorCode::InvalidSpec);
  CHECK_ERROR_CODE((MetricSpec{{{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}}.validate()), ErrorCode::InvalidSpec);
  CHECK_ERROR_CODE((MetricSpec{{{0, 0}, {0, 0}}}.validate()), ErrorCode::InvalidSpec);
  CHECK_ERROR_CODE((MetricSpec{{{1, 1}, {1, 0}}}.validate()), ErrorCode::InvalidSpec);
  CHECK_ERROR_CODE((MetricSpec{{{0}}}.validate()), ErrorCode::InvalidSpec);
}

TEST_CASE("graev norm on a small metric") {
  // points 0 (basepoint), 1, 2 with d(1,2) small: pairing 1 with 2 wins.
  const MetricSpec m{{{0, 5, 5}, {5, 0, 1}, {5, 1, 0}}};
  CHECK(graev_norm(m, Element::singleton(1)) == 5.0);
  CHECK(graev_norm(m, Element::from_indices({1, 2})) == 1.0);
  CHECK(graev_norm(m, kZero) == 0.0);
}

TEST_CASE("graev pairing search and subset program agree with enumeration") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 8; ++t) {
    const auto d = oracle::integer_metric(9, rng);
    const MetricSpec m{d};
    for (std::uint64_t bits = 1; bits < (1U << 9); bits += 7) {
      const Element g = Element::from_bits(bits);
      const auto letters = g.support();
      const double brute = oracle::graev_brute(d, g);
      CHECK(detail::graev_pairing_search(m, letters) == brute);
      CHECK(detail::graev_subset_dp(m, letters) == brute);
      CHECK(graev_norm(m, g) == brute);
    }
  }
}

TEST_CASE("closure norm matches the relaxation oracle and is maximal") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const std::size_t rank = 1 + rng() % 5;
    std::vector<double> base(std::size_t{1} << rank, 0.0);
    std::uniform_real_distribution<double> u(0.5, 10.0);
    for (std::size_t g = 1; g < base.size(); ++g) base[g] = u(rng);
    const NormOracle n = closure_norm(BaseCostTable(rank, base));
    const auto expected = oracle::closure_brute(rank, base);
    const auto table = n.tabulate();
    for (std::size_t g = 0; g < base.size(); ++g) {
      CHECK(table[g] == doctest::Approx(expected[g]).epsilon(1e-12));
      CHECK(leq_tol(table[g], base[g]));
    }
    CHECK(check_norm_axioms(n).pass);
    // Idempotence: closing the closure changes nothing.
    const NormOracle again = closure_norm(BaseCostTable(rank, table));
    for (std::size_t g = 0; g < base.size(); ++g) CHECK(again.tabulate()[g] == doctest::Approx(table[g]));
  }
}

TEST_CASE("closure of the two-generator example") {
  const NormOracle n = norm_a();
  CHECK(n.kind() == "closure");
  CHECK(n(Element::singleton(1)) == 1.0);
  CHECK(n(Element::singleton(2)) == 3.0);
  CHECK(n(Element::from_indices({1, 2})) == 2.0);
  CHECK_ERROR_CODE(closure_norm(BaseCostTable(15, std::vector<double>(std::size_t{1} << 15, 1.0))),
                   ErrorCode::RankTooLarge);
  CHECK_ERROR_CODE(BaseCostTable(2, {0.0, 1.0, -3.0, 2.0}), ErrorCode::InvalidSpec);
  CHECK_ERROR_CODE(BaseCostTable(2, {0.0, 1.0, 3.0}), ErrorCode::InvalidSpec);
}

TEST_CASE("axiom checker finds violations in raw tables") {
  const AxiomReport ok = check_norm_axioms(NormOracle::from_table(2, {0.0, 4.0, 5.0, 2.0}));
  CHECK(ok.pass);
  CHECK(ok.elements_checked == 4);
  CHECK(ok.pairs_checked == 16);

  const AxiomReport tri = check_norm_axioms(NormOracle::from_table(2, {0.0, 1.0, 1.0, 3.0}));
  CHECK_FALSE(tri.pass);
  REQUIRE(tri.triangle_violation.has_value());
  CHECK(tri.triangle_violation->first + tri.triangle_violation->second == Element::from_indices({1, 2}));
  CHECK(tri.lhs == 3.0);
  CHECK(tri.rhs == 2.0);

  const AxiomReport zero = check_norm_axioms(NormOracle::from_table(2, {0.5, 1.0, 1.0, 1.0}));
  CHECK_FALSE(zero.pass);
  CHECK_FALSE(zero.zero_ok);

  const AxiomReport nonpos = check_norm_axioms(NormOracle::from_table(2, {0.0, 1.0, 0.0, 1.0}));
  CHECK_FALSE(nonpos.pass);
  REQUIRE(nonpos.nonpositive.has_value());
  CHECK(*nonpos.nonpositive == Element::singleton(2));

  CHECK_ERROR_CODE(check_norm_axioms(NormOracle::from_table(2, {0.0, 1.0, 1.0, 1.0}), 3), ErrorCode::IndexOutOfRank);
}

TEST_CASE("random norms of every family satisfy the axioms") {
  std::mt19937_64 rng(1234);
  for (NormFamily f : {NormFamily::Weighted, NormFamily::Graev, NormFamily::Closure}) {
    for (int t = 0; t < 10; ++t) {
      const NormOracle n = random_norm(f, 6, rng);
      CHECK(check_norm_axioms(n).pass);
      CHECK(distance(n, Element::singleton(1), Element::singleton(1)) == 0.0);
      CHECK(distance(n, Element::singleton(1), Element::singleton(2)) == n(Element::from_indices({1, 2})));
    }
  }
}

TEST_CASE("memoized evaluation is consistent across threads") {
  std::mt19937_64 rng(8);
  const MetricSpec m{oracle::integer_metric(12, rng)};
  const NormOracle n = NormOracle::graev(m);
  std::vector<double> a(std::size_t{1} << 12);
  std::vector<double> b(a.size());
  std::thread t1([&] {
    for (std::size_t g = 0; g < a.size(); ++g) a[g] = n(Element::from_bits(g));
  });
  std::thread t2([&] {
    for (std::size_t g = a.size(); g-- > 0;) b[g] = n(Element::from_bits(g));
  });
  t1.join();
  t2.join();
  CHECK(a == b);
  for (std::size_t g = 0; g < a.size(); g += 37) CHECK(a[g] == graev_norm(m, Element::from_bits(g)));
}
