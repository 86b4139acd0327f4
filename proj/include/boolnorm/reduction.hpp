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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "boolnorm/basis.hpp"
#include "boolnorm/element.hpp"
#include "boolnorm/norms.hpp"

namespace boolnorm {

/// offset + span(span_rows); the rows must be linearly independent.
struct CosetSpec {
  Element offset;
  std::vector<Element> span_rows;
};

struct SearchOptions {
  static constexpr std::size_t kDefaultSearchBound = 24;

  /// Maximum number of span rows a coset may have.
  std::size_t search_bound = kDefaultSearchBound;
  /// Skip candidates whose triangle-inequality lower bound already loses.
  bool prune = false;
  /// Workers splitting each coset; 0 or 1 means serial.
  unsigned threads = 1;

  /// Defaults, with search_bound taken from BOOLNORM_SEARCH_BOUND when set.
  static SearchOptions from_environment();
};

struct CosetResult {
  Element argmin;
  double norm = 0.0;
  std::uint64_t coset_size = 0;
  /// Coset members whose norm was actually evaluated.
  std::uint64_t candidates_evaluated = 0;
};

/// Total order used to pick among coset members: smaller norm first, then
/// lexicographically smaller support.
bool better_candidate(double norm_a, Element a, double norm_b, Element b) noexcept;

/// Exact minimum-norm member of a coset under the better_candidate order.
/// Throws search-bound-exceeded when the span is too large. The answer does
/// not depend on `threads` or `prune`.
CosetResult coset_search(const NormOracle& norm, const CosetSpec& coset, const SearchOptions& options = {});

inline Element coset_argmin(const NormOracle& norm, const CosetSpec& coset, const SearchOptions& options = {}) {
  return coset_search(norm, coset, options).argmin;
}

struct RowRecord {
  std::size_t index = 0;
  Element support;
  double norm = 0.0;
  std::uint64_t coset_size = 0;
  std::uint64_t candidates_evaluated = 0;
};

struct Reduction {
  TriangularBasis basis;
  std::vector<RowRecord> records;
};

/// Greedy norm-minimizing basis: row 1 is {1}; row k+1 is the minimum-norm
/// member of e_{k+1} + span(row 1..row k).
Reduction reduce_basis(const NormOracle& norm, std::size_t rank, const SearchOptions& options = {});

}  // namespace boolnorm
