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
#include <functional>
#include <vector>

#include "boolnorm/element.hpp"

namespace boolnorm {

/// The rank-n truncation: elements supported on generators 1..n.
struct Truncation {
  std::size_t rank = 0;

  bool contains(Element g) const noexcept { return g.within(rank); }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << rank; }
};

enum class StratumMode { Exactly, AtMost };

std::uint64_t binomial(std::size_t n, std::size_t k) noexcept;

/// Coordinate sets of reduced length k (or at most k) over rank coordinates.
/// Exactly: all k-subsets of {1..rank} in lexicographic order. AtMost: the
/// exact strata for m = 0..k concatenated. Throws k-exceeds-rank.
std::vector<Element> enumerate_stratum(const Truncation& ctx, std::size_t k, StratumMode mode);

/// Streaming form of enumerate_stratum.
void for_each_in_stratum(const Truncation& ctx, std::size_t k, StratumMode mode,
                         const std::function<void(Element)>& fn);

}  // namespace boolnorm
