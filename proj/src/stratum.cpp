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

#include "boolnorm/stratum.hpp"

#include <string>

#include "boolnorm/error.hpp"

namespace boolnorm {

namespace {

void for_each_exact(std::size_t rank, std::size_t k, const std::function<void(Element)>& fn) {
  // Lexicographic k-combinations of {1..rank}, held as an index array.
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    fn(Element::from_indices(idx));
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == rank - k + pos) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

void for_each_in_stratum(const Truncation& ctx, std::size_t k, StratumMode mode,
                         const std::function<void(Element)>& fn) {
  if (k > ctx.rank) {
    throw Error(ErrorCode::KExceedsRank, "k=" + std::to_string(k) + " > rank " + std::to_string(ctx.rank));
  }
  if (mode == StratumMode::Exactly) {
    for_each_exact(ctx.rank, k, fn);
    return;
  }
  for (std::size_t m = 0; m <= k; ++m) for_each_exact(ctx.rank, m, fn);
}

std::vector<Element> enumerate_stratum(const Truncation& ctx, std::size_t k, StratumMode mode) {
  std::vector<Element> out;
  for_each_in_stratum(ctx, k, mode, [&](Element g) { out.push_back(g); });
  return out;
}

}  // namespace boolnorm
