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

#include <cstdlib>
#include <random>

#include "boolnorm/pipeline.hpp"
#include "boolnorm/reduction.hpp"
#include "doctest.h"
#include "support/errors.hpp"
#include "support/oracles.hpp"

using namespace boolnorm;

namespace {

NormOracle norm_a() { return closure_norm(BaseCostTable(2, {0.0, 1.0, 3.0, 2.0})); }

}  // namespace

TEST_CASE("coset minimum examples") {
  const NormOracle n = norm_a();
  const CosetResult r = coset_search(n, {Element::singleton(2), {Element::singleton(1)}});
  CHECK(r.argmin == Element::from_indices({1, 2}));
  CHECK(r.norm == 2.0);
  CHECK(r.coset_size == 2);
  CHECK(r.candidates_evaluated == 2);

  CHECK(coset_argmin(n, {Element::singleton(2), {}}) == Element::singleton(2));

  const NormOracle w = NormOracle::weighted(WeightSpec{{0.5, 0.25, 3.0}});
  CHECK(coset_argmin(w, {Element::singleton(3), {Element::singleton(1), Element::singleton(2)}}) ==
        Element::singleton(3));
}

TEST_CASE("ties go to the lexicographically smaller support") {
  // Every nonzero element has norm 1 except {2}; coset {2} + span({1}).
  const NormOracle n = NormOracle::from_table(2, {0.0, 1.0, 1.0, 1.0});
  CHECK(coset_argmin(n, {Element::singleton(2), {Element::singleton(1)}}) == Element::from_indices({1, 2}));
  CHECK(better_candidate(1.0, Element::from_indices({1, 2}), 1.0, Element::singleton(2)));
  CHECK(better_candidate(0.5, Element::singleton(2), 1.0, Element::singleton(1)));
  CHECK_FALSE(better_candidate(1.0, Element::singleton(2), 1.0, Element::singleton(2)));
}

TEST_CASE("coset search errors") {
  const NormOracle n = NormOracle::weighted(WeightSpec{std::vector<double>(8, 1.0)});
  SearchOptions tight;
  tight.search_bound = 2;
  CHECK_ERROR_CODE(
      coset_search(n, {Element::singleton(4), {Element::singleton(1), Element::singleton(2), Element::singleton(3)}},
                   tight),
      ErrorCode::SearchBoundExceeded);
  CHECK_ERROR_CODE(coset_search(n, {Element::singleton(4),
                                    {Element::singleton(1), Element::singleton(2), Element::from_indices({1, 2})}}),
                   ErrorCode::DependentRows);
  CHECK_ERROR_CODE(reduce_basis(n, 4, tight), ErrorCode::SearchBoundExceeded);
  CHECK_ERROR_CODE(reduce_basis(n, 9), ErrorCode::IndexOutOfRank);
  CHECK_ERROR_CODE(reduce_basis(n, 0), ErrorCode::InvalidArgument);
}

TEST_CASE("reduced bases of the documented examples") {
  const Reduction r = reduce_basis(norm_a(), 2);
  CHECK(r.basis.row(1) == Element::singleton(1));
  CHECK(r.basis.row(2) == Element::from_indices({1, 2}));
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].norm == 1.0);
  CHECK(r.records[1].norm == 2.0);
  CHECK(r.records[1].coset_size == 2);

  std::mt19937_64 rng(2);
  for (std::size_t rank = 1; rank <= 6; ++rank) {
    const NormOracle w = random_norm(NormFamily::Weighted, rank, rng);
    CHECK(reduce_basis(w, rank).basis == TriangularBasis::identity(rank));
  }
  for (NormFamily f : {NormFamily::Weighted, NormFamily::Graev, NormFamily::Closure}) {
    const NormOracle n = random_norm(f, 5, rng);
    CHECK(reduce_basis(n, 1).basis.row(1) == Element::singleton(1));
  }
}

TEST_CASE("reduce_basis agrees with brute-force coset enumeration") {
  std::mt19937_64 rng(77);
  for (NormFamily f : {NormFamily::Weighted, NormFamily::Graev, NormFamily::Closure}) {
    for (int t = 0; t < 10; ++t) {
      const std::size_t rank = 2 + rng() % 7;
      const NormOracle n = random_norm(f, rank, rng);
      const auto expected = oracle::reduce_brute(n, rank);
      const Reduction r = reduce_basis(n, rank);
      CHECK(std::vector<Element>(r.basis.rows().begin(), r.basis.rows().end()) == expected);
      for (std::size_t k = 0; k < rank; ++k) {
        CHECK(r.records[k].index == k + 1);
        CHECK(r.records[k].coset_size == (std::uint64_t{1} << k));
        CHECK(r.records[k].norm == n(expected[k]));
      }
    }
  }
}

TEST_CASE("threads and pruning do not change the answer") {
  std::mt19937_64 rng(303);
  for (NormFamily f : {NormFamily::Weighted, NormFamily::Graev, NormFamily::Closure}) {
    for (int t = 0; t < 4; ++t) {
      const std::size_t rank = 6 + rng() % 5;
      const NormOracle n = random_norm(f, rank, rng);
      const Reduction base = reduce_basis(n, rank);
      for (unsigned threads : {1U, 2U, 3U, 8U}) {
        for (bool prune : {false, true}) {
          SearchOptions o;
          o.threads = threads;
          o.prune = prune;
          const Reduction r = reduce_basis(n, rank, o);
          CHECK(r.basis == base.basis);
          for (std::size_t k = 0; k < rank; ++k) {
            CHECK(r.records[k].norm == base.records[k].norm);
            CHECK(r.records[k].candidates_evaluated <= r.records[k].coset_size);
            if (!prune) CHECK(r.records[k].candidates_evaluated == r.records[k].coset_size);
          }
        }
      }
    }
  }
}

TEST_CASE("search bound from the environment") {
  ::setenv("BOOLNORM_SEARCH_BOUND", "3", 1);
  CHECK(SearchOptions::from_environment().search_bound == 3);
  ::setenv("BOOLNORM_SEARCH_BOUND", "zero", 1);
  CHECK_ERROR_CODE(SearchOptions::from_environment(), ErrorCode::InvalidArgument);
  ::unsetenv("BOOLNORM_SEARCH_BOUND");
  CHECK(SearchOptions::from_environment().search_bound == SearchOptions::kDefaultSearchBound);
}
