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

// Rebasing of a reduced basis along an approach sequence a_1, a_2, ...
//
// All elements here are in reduced-basis coordinates: index j stands for
// the reduced row e'_j. With f(i) = max(a_i) and the iterates f^0(1) = 1,
// f^{k+1}(1) = f(f^k(1)), the rebased rows are
//
//   e''_0 = e'_1,
//   e''_j = e'_j + a_{f^k(1)}   for f^k(1) <= j < f^{k+1}(1).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "boolnorm/basis.hpp"
#include "boolnorm/element.hpp"
#include "boolnorm/norms.hpp"

namespace boolnorm {

/// Terms a_1..a_m. Valid sequences have pairwise distinct nonzero terms of
/// odd length, strictly increasing f with f(1) >= 2, and a_1 = {f(1)}.
class ApproachSequence {
 public:
  ApproachSequence() = default;
  explicit ApproachSequence(std::vector<Element> terms) : terms_(std::move(terms)) {}

  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Element> terms() const noexcept { return terms_; }
  /// Term a_i, 1-based.
  Element term(std::size_t i) const { return terms_.at(i - 1); }
  /// f(i) = max(a_i), 1-based.
  std::size_t f(std::size_t i) const { return term(i).max_index(); }

  /// First violated invariant, or empty when the sequence is valid.
  std::string invariant_violation() const;
  bool valid() const { return invariant_violation().empty(); }

 private:
  std::vector<Element> terms_;
};

struct NormalizationLog {
  /// 1-based raw positions that received a parity letter, with the letter.
  std::vector<std::pair<std::size_t, std::size_t>> parity_fixed;
  /// 1-based raw positions dropped because f did not increase (or f < 2).
  std::vector<std::size_t> dropped_nonincreasing;
  /// 1-based raw positions dropped as repeats of a kept term.
  std::vector<std::size_t> dropped_duplicates;
  /// 1-based raw positions dropped as zero or unfixable.
  std::vector<std::size_t> dropped_invalid;
  /// Whether the first kept term was replaced by {f(1)}.
  bool first_replaced = false;
};

struct Normalized {
  ApproachSequence sequence;
  NormalizationLog log;
};

/// Repairs a raw sequence: odd lengths (adding the smallest-norm unused
/// reduced row, preferring indices below the current max), a strictly
/// increasing f with f >= 2, a_1 = {f(1)}, distinct terms. `reduced_rows`
/// are the reduced rows over the original generators; letter norms are
/// N(e'_j). Throws unusable-sequence when fewer than two terms survive.
Normalized normalize_sequence(std::span<const Element> raw, std::span<const Element> reduced_rows,
                              const NormOracle& norm);

/// [f^0(1), f^1(1), ..., f^K(1)]: applications continue while the needed
/// term exists and the next value stays within `rank`.
std::vector<std::size_t> f_iterates(const ApproachSequence& seq, std::size_t rank);

/// Rebased rows e''_0..e''_{f^K(1)-1} in reduced coordinates. Throws
/// sequence-too-short when no iterate can be applied.
GeneralBasis build_second_basis(std::size_t rank, const ApproachSequence& seq);

struct Independence {
  bool independent = false;
  std::size_t rank = 0;
};

Independence verify_independence(const GeneralBasis& basis);

/// Reduced-row index guaranteed to survive in the sum of the rebased rows
/// selected by `combo` (0-based rebased row indices), found by the block
/// case analysis alone. Throws invalid-index for an empty combo or an index
/// past the last rebased row.
std::size_t witness_nonvanishing(std::span<const std::size_t> combo, const ApproachSequence& seq,
                                 std::size_t rank);

/// Block of a rebased row: -1 for row 0, else r with f^r(1) <= row < f^{r+1}(1).
int block_of(std::size_t row, std::span<const std::size_t> iterates);

struct PairDistance {
  std::size_t i = 0;
  std::size_t j = 0;
  double distance = 0.0;
};

struct AnchorDistance {
  std::size_t block = 0;
  /// Term index f^block(1) of the anchoring term.
  std::size_t term = 0;
  /// Smallest distance from the anchoring term to a rebased row of another
  /// block.
  double min_distance = 0.0;
};

struct SeparationProfile {
  double min_pairwise = 0.0;
  std::vector<AnchorDistance> anchors;
  std::vector<PairDistance> pairwise;
};

/// Observational distances between rebased rows and anchoring terms, with
/// everything mapped to the original generators through `reduced_rows`.
SeparationProfile separation_profile(const GeneralBasis& basis, std::span<const Element> reduced_rows,
                                     const NormOracle& norm, const ApproachSequence& seq);

}  // namespace boolnorm
