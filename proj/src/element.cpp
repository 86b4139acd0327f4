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

#include "boolnorm/element.hpp"

#include "boolnorm/error.hpp"

namespace boolnorm {

namespace {

constexpr std::string_view kCodeNames[] = {
    "invalid-argument", "parse-error",   "invalid-spec",          "not-in-span",
    "dependent-rows",   "k-exceeds-rank", "index-out-of-rank",    "rank-too-large",
    "search-bound-exceeded", "unusable-sequence", "sequence-too-short", "invalid-index",
};

void check_index(std::size_t index) {
  if (index < 1 || index > kMaxIndex) {
    throw Error(ErrorCode::IndexOutOfRank, "generator index " + std::to_string(index) + " outside 1.." +
                                               std::to_string(kMaxIndex));
  }
}

}  // namespace

std::string_view error_code_name(ErrorCode code) noexcept {
  return kCodeNames[static_cast<std::size_t>(code)];
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

Element Element::from_indices(std::span<const std::size_t> indices) {
  Bits bits = 0;
  for (std::size_t i : indices) {
    check_index(i);
    const Bits bit = Bits{1} << (i - 1);
    if ((bits & bit) != 0) {
      throw Error(ErrorCode::InvalidArgument, "duplicate index " + std::to_string(i) + " in element");
    }
    bits |= bit;
  }
  return Element(bits);
}

Element Element::from_indices(std::initializer_list<std::size_t> indices) {
  return from_indices(std::span<const std::size_t>(indices.begin(), indices.size()));
}

Element Element::singleton(std::size_t index) {
  check_index(index);
  return Element(Bits{1} << (index - 1));
}

Element Element::full(std::size_t rank) {
  if (rank > kMaxIndex) throw Error(ErrorCode::RankTooLarge, "rank " + std::to_string(rank));
  return Element(rank == kMaxIndex ? ~Bits{0} : (Bits{1} << rank) - 1);
}

std::vector<std::size_t> Element::support() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each_index(*this, [&](std::size_t i) { out.push_back(i); });
  return out;
}

bool lex_less(Element a, Element b) noexcept {
  const Element::Bits diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // Both supports agree below the lowest differing index. The side holding
  // that index continues with it; the other side either continues with a
  // larger index (and loses) or has ended (and is a prefix, so wins).
  const Element::Bits low = diff & (~diff + 1);
  const Element::Bits above = ~(low | (low - 1));
  if ((a.bits() & low) != 0) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

std::string to_string(Element g) {
  std::string out = "{";
  bool first = true;
  for_each_index(g, [&](std::size_t i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  out += '}';
  return out;
}

Element reduce_word(const Word& word) {
  Element out;
  for (std::size_t letter : word.letters) out += Element::singleton(letter);
  return out;
}

}  // namespace boolnorm
