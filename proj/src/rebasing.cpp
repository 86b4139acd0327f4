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

#include "boolnorm/rebasing.hpp"

#include <algorithm>
#include <limits>

#include "boolnorm/error.hpp"

namespace boolnorm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Unused reduced row with the smallest letter norm, searching indices in
// [lo, hi]; ties go to the smaller index. Returns 0 when none is free.
std::size_t cheapest_free_letter(Element term, std::size_t lo, std::size_t hi, std::span<const double> letter) {
  std::size_t best = 0;
  for (std::size_t j = lo; j <= hi; ++j) {
    if (term.contains(j)) continue;
    if (best == 0 || letter[j - 1] < letter[best - 1]) best = j;
  }
  return best;
}

}  // namespace

std::string ApproachSequence::invariant_violation() const {
  if (terms_.empty()) return "sequence is empty";
  for (std::size_t i = 1; i <= terms_.size(); ++i) {
    const Element a = terms_[i - 1];
    const std::string at = "term " + std::to_string(i);
    if (a.is_zero()) return at + " is zero";
    if (a.size() % 2 == 0) return at + " has even reduced length";
    for (std::size_t j = 1; j < i; ++j) {
      if (terms_[j - 1] == a) return at + " repeats term " + std::to_string(j);
    }
    if (i > 1 && f(i) <= f(i - 1)) return "f is not strictly increasing at " + at;
  }
  if (f(1) < 2) return "f(1) < 2";
  if (terms_[0] != Element::singleton(f(1))) return "first term is not the single letter f(1)";
  return {};
}

Normalized normalize_sequence(std::span<const Element> raw, std::span<const Element> reduced_rows,
                              const NormOracle& norm) {
  const std::size_t rank = reduced_rows.size();
  std::vector<double> letter(rank);
  for (std::size_t j = 0; j < rank; ++j) letter[j] = norm(reduced_rows[j]);

  Normalized out;
  NormalizationLog& log = out.log;
  std::vector<Element> kept;
  std::size_t last_f = 1;
  for (std::size_t pos = 1; pos <= raw.size(); ++pos) {
    Element a = raw[pos - 1];
    if (!a.within(rank)) {
      throw Error(ErrorCode::IndexOutOfRank,
                  "sequence term " + std::to_string(pos) + " = " + to_string(a) + " exceeds rank " + std::to_string(rank));
    }
    if (a.is_zero()) {
      log.dropped_invalid.push_back(pos);
      continue;
    }
    if (a.size() % 2 == 0) {
      const std::size_t top = a.max_index();
      std::size_t j = cheapest_free_letter(a, 1, top - 1, letter);
      if (j == 0) j = cheapest_free_letter(a, top + 1, rank, letter);
      if (j == 0) {
        log.dropped_invalid.push_back(pos);
        continue;
      }
      a += Element::singleton(j);
      log.parity_fixed.emplace_back(pos, j);
    }
    if (std::find(kept.begin(), kept.end(), a) != kept.end()) {
      log.dropped_duplicates.push_back(pos);
      continue;
    }
    const std::size_t f = a.max_index();
    if (f < 2 || f <= last_f) {
      log.dropped_nonincreasing.push_back(pos);
      continue;
    }
    kept.push_back(a);
    last_f = f;
  }
  if (kept.size() < 2) {
    throw Error(ErrorCode::UnusableSequence,
                std::to_string(kept.size()) + " usable term(s) remain after normalization, need at least 2");
  }
  const Element first = Element::singleton(kept.front().max_index());
  log.first_replaced = kept.front() != first;
  kept.front() = first;
  // Distinct maxima keep the terms distinct after the replacement.
  out.sequence = ApproachSequence(std::move(kept));
  return out;
}

std::vector<std::size_t> f_iterates(const ApproachSequence& seq, std::size_t rank) {
  std::vector<std::size_t> out{1};
  std::size_t cur = 1;
  while (cur <= seq.size()) {
    const std::size_t next = seq.f(cur);
    if (next > rank || next <= cur) break;
    out.push_back(next);
    cur = next;
  }
  return out;
}

GeneralBasis build_second_basis(std::size_t rank, const ApproachSequence& seq) {
  if (const std::string why = seq.invariant_violation(); !why.empty()) {
    throw Error(ErrorCode::InvalidArgument, "approach sequence is not normalized: " + why);
  }
  const std::vector<std::size_t> it = f_iterates(seq, rank);
  if (it.size() < 2) {
    throw Error(ErrorCode::SequenceTooShort, "f(1) = " + std::to_string(seq.f(1)) + " exceeds rank " +
                                                 std::to_string(rank));
  }
  std::vector<Element> rows;
  rows.reserve(it.back());
  rows.push_back(Element::singleton(1));
  for (std::size_t k = 0; k + 1 < it.size(); ++k) {
    const Element anchor = seq.term(it[k]);
    for (std::size_t j = it[k]; j < it[k + 1]; ++j) rows.push_back(Element::singleton(j) + anchor);
  }
  return GeneralBasis(std::move(rows));
}

Independence verify_independence(const GeneralBasis& basis) {
  const std::size_t r = gf2_rank(basis.rows());
  return {r == basis.size(), r};
}

int block_of(std::size_t row, std::span<const std::size_t> iterates) {
  if (row == 0) return -1;
  for (std::size_t r = 0; r + 1 < iterates.size(); ++r) {
    if (iterates[r] <= row && row < iterates[r + 1]) return static_cast<int>(r);
  }
  throw Error(ErrorCode::InvalidIndex, "rebased row " + std::to_string(row) + " does not exist");
}

std::size_t witness_nonvanishing(std::span<const std::size_t> combo, const ApproachSequence& seq,
                                 std::size_t rank) {
  if (combo.empty()) throw Error(ErrorCode::InvalidIndex, "combination is empty");
  const std::vector<std::size_t> it = f_iterates(seq, rank);
  std::vector<std::size_t> rows(combo.begin(), combo.end());
  std::sort(rows.begin(), rows.end());
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) {
    throw Error(ErrorCode::InvalidIndex, "combination repeats a row");
  }
  const std::size_t top = rows.back();
  const int m = block_of(top, it);
  if (m == -1) return 1;  // the combination is e''_0 = e'_1
  std::size_t in_top_block = 0;
  for (std::size_t row : rows) {
    if (block_of(row, it) == m) ++in_top_block;
  }
  // Even: the anchors of block m cancel and e'_top survives.
  // Odd: one anchor remains and contributes its maximum f^{m+1}(1).
  if (in_top_block % 2 == 0) return top;
  return it[static_cast<std::size_t>(m) + 1];
}

SeparationProfile separation_profile(const GeneralBasis& basis, std::span<const Element> reduced_rows,
                                     const NormOracle& norm, const ApproachSequence& seq) {
  std::vector<Element> gen;
  gen.reserve(basis.size());
  for (Element row : basis.rows()) gen.push_back(combine_rows(reduced_rows, row));

  SeparationProfile profile;
  profile.min_pairwise = kInf;
  for (std::size_t i = 0; i < gen.size(); ++i) {
    for (std::size_t j = i + 1; j < gen.size(); ++j) {
      const double d = distance(norm, gen[i], gen[j]);
      profile.pairwise.push_back({i, j, d});
      profile.min_pairwise = std::min(profile.min_pairwise, d);
    }
  }

  const std::vector<std::size_t> it = f_iterates(seq, reduced_rows.size());
  for (std::size_t k = 0; k + 1 < it.size() && it[k + 1] <= gen.size(); ++k) {
    const Element anchor = combine_rows(reduced_rows, seq.term(it[k]));
    AnchorDistance entry{k, it[k], kInf};
    for (std::size_t row = 0; row < gen.size(); ++row) {
      if (row >= it[k] && row < it[k + 1]) continue;
      entry.min_distance = std::min(entry.min_distance, distance(norm, anchor, gen[row]));
    }
    profile.anchors.push_back(entry);
  }
  return profile;
}

}  // namespace boolnorm
