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

// Exhaustive checkers for the quantitative inequalities behind the
// closed-discrete-basis argument. Every checker takes the basis rows over
// the original generators (row j at position j-1) and accepts any rows, so
// negative controls run the same code path as conformance runs. Coordinate
// sets S select rows; the element they name is the sum of those rows.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "boolnorm/element.hpp"
#include "boolnorm/norms.hpp"

namespace boolnorm {

/// Largest basis rank the exhaustive checkers accept.
inline constexpr std::size_t kVerifyRankBound = 16;

struct Violation {
  /// Coordinate sets witnessing the failure (one or two of them).
  std::vector<Element> witness;
  /// Exponent k for the geometric bound; -1 elsewhere.
  int k = -1;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct LemmaReport {
  std::string lemma;
  bool pass = true;
  std::uint64_t checked = 0;
  /// Largest lhs/rhs seen over all checked cases (0 when nothing checked).
  double worst_ratio = 0.0;
  std::vector<Violation> violations;

  /// Appends another report's counts and violations; keeps witnesses sorted.
  void merge(const LemmaReport& other);
};

/// "L0iii": |e'_{max S}| <= N(sum S) for every nonempty S.
LemmaReport check_monotone_tail(std::span<const Element> rows, const NormOracle& norm);

/// "L1": |e'_{i_{n-k}}| <= 2^k N(w) for every nonempty S = {i_1 < ... < i_n}
/// and every k in 0..n-1.
LemmaReport check_geometric_bound(std::span<const Element> rows, const NormOracle& norm);

/// min over k in S of |e'_k| / 2^{2|S|}. S must be nonempty.
double separation_epsilon(Element coords, std::span<const Element> rows, const NormOracle& norm);

/// "L2" at stratum n: distinct w, w' of reduced length n are at distance at
/// least epsilon(w).
LemmaReport check_discreteness(std::span<const Element> rows, const NormOracle& norm, std::size_t n);

/// "L3" at stratum n: every w' of reduced length below n is at distance at
/// least epsilon(w) from every w of reduced length n.
LemmaReport check_closedness(std::span<const Element> rows, const NormOracle& norm, std::size_t n);

/// "L4": |e'_{b}| <= N(e'_a + e'_b) for every a < b drawn from `indices`.
LemmaReport check_null_tail(std::span<const Element> rows, const NormOracle& norm,
                            std::span<const std::size_t> indices);

/// The per-stratum checks merged over n = 0..rank, and the null-tail check
/// over all indices 1..rank.
LemmaReport check_discreteness_all(std::span<const Element> rows, const NormOracle& norm);
LemmaReport check_closedness_all(std::span<const Element> rows, const NormOracle& norm);
LemmaReport check_null_tail_all(std::span<const Element> rows, const NormOracle& norm);

}  // namespace boolnorm
