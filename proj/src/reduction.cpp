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

#include "boolnorm/reduction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <future>
#include <string>

#include "boolnorm/error.hpp"

namespace boolnorm {

namespace {

struct Partial {
  Element argmin;
  double norm = 0.0;
  bool found = false;
  std::uint64_t evaluated = 0;
};

Element span_member(std::span<const Element> rows, std::uint64_t code) {
  Element p;
  for (std::size_t b = 0; code != 0; ++b, code >>= 1) {
    if ((code & 1U) != 0) p += rows[b];
  }
  return p;
}

// Walks Gray codes begin..end-1 of the span, so consecutive members differ
// by a single row.
Partial search_range(const NormOracle& norm, const CosetSpec& coset, bool prune, double offset_norm,
                     std::uint64_t begin, std::uint64_t end) {
  Partial best;
  if (begin >= end) return best;
  std::uint64_t gray = begin ^ (begin >> 1);
  Element p = span_member(coset.span_rows, gray);
  for (std::uint64_t t = begin;;) {
    const Element candidate = coset.offset + p;
    bool evaluate = true;
    if (prune && best.found) {
      // N(offset + p) >= |N(offset) - N(p)|; a strictly larger bound can
      // neither win nor tie.
      evaluate = std::abs(offset_norm - norm(p)) <= best.norm;
    }
    if (evaluate) {
      const double v = norm(candidate);
      ++best.evaluated;
      if (!best.found || better_candidate(v, candidate, best.norm, best.argmin)) {
        best.argmin = candidate;
        best.norm = v;
        best.found = true;
      }
    }
    if (++t == end) break;
    p += coset.span_rows[static_cast<std::size_t>(std::countr_zero(t))];
  }
  return best;
}

}  // namespace

SearchOptions SearchOptions::from_environment() {
  SearchOptions options;
  if (const char* env = std::getenv("BOOLNORM_SEARCH_BOUND"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0 || v > 62) {
      throw Error(ErrorCode::InvalidArgument, std::string("BOOLNORM_SEARCH_BOUND must be in 1..62, got '") + env + "'");
    }
    options.search_bound = v;
  }
  return options;
}

bool better_candidate(double norm_a, Element a, double norm_b, Element b) noexcept {
  if (norm_a != norm_b) return norm_a < norm_b;
  return lex_less(a, b);
}

CosetResult coset_search(const NormOracle& norm, const CosetSpec& coset, const SearchOptions& options) {
  const std::size_t dim = coset.span_rows.size();
  if (dim > options.search_bound || dim > 62) {
    throw Error(ErrorCode::SearchBoundExceeded, "coset span has " + std::to_string(dim) + " rows, bound is " +
                                                    std::to_string(options.search_bound));
  }
  if (gf2_rank(coset.span_rows) != dim) throw Error(ErrorCode::DependentRows, "coset span rows are dependent");

  const std::uint64_t size = std::uint64_t{1} << dim;
  const double offset_norm = options.prune ? norm(coset.offset) : 0.0;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(options.threads, 1U), size));

  std::vector<Partial> parts;
  if (workers == 1) {
    parts.push_back(search_range(norm, coset, options.prune, offset_norm, 0, size));
  } else {
    std::vector<std::future<Partial>> futures;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = size * w / workers;
      const std::uint64_t end = size * (w + 1) / workers;
      futures.push_back(std::async(std::launch::async, search_range, std::cref(norm), std::cref(coset),
                                   options.prune, offset_norm, begin, end));
    }
    for (auto& f : futures) parts.push_back(f.get());
  }

  CosetResult result;
  result.coset_size = size;
  bool found = false;
  for (const Partial& part : parts) {
    result.candidates_evaluated += part.evaluated;
    if (part.found && (!found || better_candidate(part.norm, part.argmin, result.norm, result.argmin))) {
      result.argmin = part.argmin;
      result.norm = part.norm;
      found = true;
    }
  }
  return result;
}

Reduction reduce_basis(const NormOracle& norm, std::size_t rank, const SearchOptions& options) {
  if (rank == 0) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  if (rank > norm.rank()) {
    throw Error(ErrorCode::IndexOutOfRank,
                "rank " + std::to_string(rank) + " exceeds norm rank " + std::to_string(norm.rank()));
  }
  if (rank - 1 > options.search_bound) {
    throw Error(ErrorCode::SearchBoundExceeded,
                "rank " + std::to_string(rank) + " needs cosets beyond bound " + std::to_string(options.search_bound));
  }
  std::vector<Element> rows;
  std::vector<RowRecord> records;
  rows.reserve(rank);
  for (std::size_t k = 1; k <= rank; ++k) {
    const CosetSpec coset{Element::singleton(k), rows};
    const CosetResult found = coset_search(norm, coset, options);
    rows.push_back(found.argmin);
    records.push_back({k, found.argmin, found.norm, found.coset_size, found.candidates_evaluated});
  }
  return {TriangularBasis(std::move(rows)), std::move(records)};
}

}  // namespace boolnorm
