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
#include <span>
#include <vector>

#include "boolnorm/element.hpp"

namespace boolnorm {

/// A basis b_1..b_n over the original generators with j in support(b_j) and
/// support(b_j) inside {1..j}. Unitriangularity is checked on construction,
/// which makes the rows a basis of the rank-n truncation.
class TriangularBasis {
 public:
  explicit TriangularBasis(std::vector<Element> rows);

  static TriangularBasis identity(std::size_t rank);

  std::size_t rank() const noexcept { return rows_.size(); }

  /// Row j, 1-based.
  Element row(std::size_t j) const { return rows_.at(j - 1); }

  std::span<const Element> rows() const noexcept { return rows_; }

  /// Sum of the rows selected by a coordinate set.
  Element combine(Element coords) const;

  friend bool operator==(const TriangularBasis&, const TriangularBasis&) = default;

 private:
  std::vector<Element> rows_;
};

/// An arbitrary list of rows, indexed from 0. Independence is not
/// structural; see gf2_rank.
class GeneralBasis {
 public:
  GeneralBasis() = default;
  explicit GeneralBasis(std::vector<Element> rows) : rows_(std::move(rows)) {}

  std::size_t size() const noexcept { return rows_.size(); }
  Element row(std::size_t i) const { return rows_.at(i); }
  std::span<const Element> rows() const noexcept { return rows_; }

  /// Sum of the rows at the given 0-based positions.
  Element combine(std::span<const std::size_t> coords) const;

  friend bool operator==(const GeneralBasis&, const GeneralBasis&) = default;

 private:
  std::vector<Element> rows_;
};

/// Sum of rows[i-1] over the indices i of `coords`, for any row list.
Element combine_rows(std::span<const Element> rows, Element coords);

/// Unique coordinate set (1-based row indices) whose rows sum to g.
/// Back-substitutes from the largest index down; throws not-in-span when g
/// uses an index beyond the basis rank.
Element express_in_basis(Element g, const TriangularBasis& basis);

/// Sorted 0-based row positions whose rows sum to g. Throws not-in-span when
/// elimination leaves a residue and dependent-rows when the rows are not
/// independent (the representation would not be unique).
std::vector<std::size_t> express_in_basis(Element g, const GeneralBasis& basis);

std::size_t reduced_length(Element g, const TriangularBasis& basis);
std::size_t reduced_length(Element g, const GeneralBasis& basis);

/// Rank over F2 of a list of rows.
std::size_t gf2_rank(std::span<const Element> rows);

}  // namespace boolnorm
