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

// Slow, obviously-correct reference computations used by the tests. None of
// these share code with the library beyond the Element type.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "boolnorm/element.hpp"

namespace oracle {

using boolnorm::Element;

/// Integer-valued random metric on points 0..rank: shortest paths over a
/// complete graph with integer edge weights in [1, 20].
inline std::vector<std::vector<double>> integer_metric(std::size_t rank, std::mt19937_64& rng) {
  const std::size_t n = rank + 1;
  std::uniform_int_distribution<int> w(1, 20);
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = w(rng);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

/// Graev value by enumeration: every subset T of the support is matched to
/// the basepoint, and the rest is perfectly matched in every possible way
/// (all permutations, read off in consecutive pairs).
inline double graev_brute(const std::vector<std::vector<double>>& d, Element g) {
  const std::vector<std::size_t> letters = g.support();
  const std::size_t m = letters.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t t = 0; t < (1U << m); ++t) {
    double base = 0.0;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < m; ++i) {
      if ((t >> i) & 1U) {
        base += d[0][letters[i]];
      } else {
        rest.push_back(letters[i]);
      }
    }
    if (rest.size() % 2 != 0) continue;
    std::sort(rest.begin(), rest.end());
    double inner = rest.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    if (!rest.empty()) {
      do {
        double c = 0.0;
        for (std::size_t i = 0; i < rest.size(); i += 2) c += d[rest[i]][rest[i + 1]];
        inner = std::min(inner, c);
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    best = std::min(best, base + inner);
  }
  return best;
}

/// Subadditive closure by repeated relaxation N(g) <- N(h) + N(g+h) until
/// nothing changes. `base` is indexed by element bits.
inline std::vector<double> closure_brute(std::size_t rank, const std::vector<double>& base) {
  const std::size_t size = std::size_t{1} << rank;
  std::vector<double> n = base;
  n[0] = 0.0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t g = 1; g < size; ++g) {
      for (std::size_t h = 1; h < size; ++h) {
        if (h == g) continue;
        const double c = n[h] + n[g ^ h];
        if (c < n[g]) {
          n[g] = c;
          changed = true;
        }
      }
    }
  }
  return n;
}

/// Lexicographic comparison of sorted supports, written out directly.
inline bool support_lex_less(Element a, Element b) {
  const auto sa = a.support();
  const auto sb = b.support();
  return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

/// Minimum of offset + span(rows) by listing every member; ties go to the
/// lexicographically smaller support.
template <typename Norm>
Element coset_min_brute(const Norm& norm, Element offset, const std::vector<Element>& rows) {
  Element best = offset;
  double best_norm = norm(offset);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rows.size()); ++mask) {
    Element c = offset;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((mask >> i) & 1U) c += rows[i];
    }
    const double v = norm(c);
    if (v < best_norm || (v == best_norm && support_lex_less(c, best))) {
      best = c;
      best_norm = v;
    }
  }
  return best;
}

/// Greedy basis built from coset_min_brute.
template <typename Norm>
std::vector<Element> reduce_brute(const Norm& norm, std::size_t rank) {
  std::vector<Element> rows;
  for (std::size_t k = 1; k <= rank; ++k) rows.push_back(coset_min_brute(norm, Element::singleton(k), rows));
  return rows;
}

/// Rank over F2 by elimination on a copy of the rows, one pivot bit at a
/// time from the top.
inline std::size_t rank_brute(std::vector<Element> rows) {
  std::size_t r = 0;
  for (std::size_t bit = 64; bit >= 1; --bit) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(),
                              [&](Element e) { return e.contains(bit); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(r), pivot);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].contains(bit)) rows[i] += rows[r];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
