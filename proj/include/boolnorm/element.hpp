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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace boolnorm {

/// Largest generator index an element can carry.
inline constexpr std::size_t kMaxIndex = 64;

/// An element of a finite-rank Boolean group, stored as its support.
///
/// Index i (1-based) lives in bit i-1, so the representation is canonical:
/// two elements are equal iff their supports are equal. Addition is the
/// symmetric difference of supports. The same type is used for coordinate
/// sets over a basis (index j selects row j).
class Element {
 public:
  using Bits = std::uint64_t;

  constexpr Element() noexcept = default;

  static constexpr Element from_bits(Bits bits) noexcept { return Element(bits); }

  /// Builds an element from an index list. Indices must lie in 1..64 and be
  /// pairwise distinct; order does not matter.
  static Element from_indices(std::span<const std::size_t> indices);
  static Element from_indices(std::initializer_list<std::size_t> indices);

  static Element singleton(std::size_t index);

  /// All indices 1..rank.
  static Element full(std::size_t rank);

  constexpr Bits bits() const noexcept { return bits_; }
  constexpr bool is_zero() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr bool contains(std::size_t index) const noexcept {
    return index >= 1 && index <= kMaxIndex && ((bits_ >> (index - 1)) & 1U) != 0;
  }

  /// Largest index in the support, 0 for the zero element.
  constexpr std::size_t max_index() const noexcept {
    return kMaxIndex - static_cast<std::size_t>(std::countl_zero(bits_));
  }

  /// Smallest index in the support, 0 for the zero element.
  constexpr std::size_t min_index() const noexcept {
    return bits_ == 0 ? 0 : static_cast<std::size_t>(std::countr_zero(bits_)) + 1;
  }

  /// True when every index is at most `rank`.
  constexpr bool within(std::size_t rank) const noexcept { return max_index() <= rank; }

  /// Sorted support.
  std::vector<std::size_t> support() const;

  constexpr Element& operator+=(Element other) noexcept {
    bits_ ^= other.bits_;
    return *this;
  }

  friend constexpr Element operator+(Element a, Element b) noexcept { return Element(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(Element a, Element b) noexcept = default;

 private:
  constexpr explicit Element(Bits bits) noexcept : bits_(bits) {}

  Bits bits_ = 0;
};

inline constexpr Element kZero{};

/// Symmetric difference of supports.
constexpr Element add(Element g, Element h) noexcept { return g + h; }

constexpr std::size_t max_index(Element g) noexcept { return g.max_index(); }

/// Lexicographic order on sorted supports; a proper prefix sorts first.
bool lex_less(Element a, Element b) noexcept;

struct LexLess {
  bool operator()(Element a, Element b) const noexcept { return lex_less(a, b); }
};

/// "{1,3}" style rendering.
std::string to_string(Element g);

/// A written sum of letters; repeats are allowed.
struct Word {
  std::vector<std::size_t> letters;

  std::size_t length() const noexcept { return letters.size(); }
};

/// Cancels letters pairwise: the result holds the indices occurring an odd
/// number of times.
Element reduce_word(const Word& word);

/// Calls `fn` with each support index of `g`, ascending.
template <typename Fn>
constexpr void for_each_index(Element g, Fn&& fn) {
  for (Element::Bits bits = g.bits(); bits != 0; bits &= bits - 1) {
    fn(static_cast<std::size_t>(std::countr_zero(bits)) + 1);
  }
}

}  // namespace boolnorm
