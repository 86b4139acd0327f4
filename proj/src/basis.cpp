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

#include "boolnorm/basis.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "boolnorm/error.hpp"

namespace boolnorm {

namespace {

// Reduced echelon form keyed by pivot (highest set bit). Each stored row
// remembers which input rows it was assembled from.
struct Echelon {
  std::array<Element::Bits, kMaxIndex> row{};
  std::array<std::vector<bool>, kMaxIndex> origin{};
  std::array<bool, kMaxIndex> used{};
  std::size_t rank = 0;
  bool dependent = false;

  explicit Echelon(std::span<const Element> rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Element::Bits bits = rows[i].bits();
      std::vector<bool> from(rows.size(), false);
      from[i] = true;
      while (bits != 0) {
        const std::size_t pivot = static_cast<std::size_t>(63 - std::countl_zero(bits));
        if (!used[pivot]) {
          used[pivot] = true;
          row[pivot] = bits;
          origin[pivot] = std::move(from);
          ++rank;
          break;
        }
        bits ^= row[pivot];
        for (std::size_t k = 0; k < from.size(); ++k) from[k] = from[k] != origin[pivot][k];
      }
      if (bits == 0) dependent = true;
    }
  }
};

}  // namespace

TriangularBasis::TriangularBasis(std::vector<Element> rows) : rows_(std::move(rows)) {
  if (rows_.size() > kMaxIndex) {
    throw Error(ErrorCode::RankTooLarge, "basis rank " + std::to_string(rows_.size()));
  }
  for (std::size_t j = 1; j <= rows_.size(); ++j) {
    const Element r = rows_[j - 1];
    if (r.max_index() != j) {
      throw Error(ErrorCode::InvalidArgument,
                  "row " + std::to_string(j) + " = " + to_string(r) + " is not unitriangular");
    }
  }
}

TriangularBasis TriangularBasis::identity(std::size_t rank) {
  std::vector<Element> rows;
  rows.reserve(rank);
  for (std::size_t j = 1; j <= rank; ++j) rows.push_back(Element::singleton(j));
  return TriangularBasis(std::move(rows));
}

Element TriangularBasis::combine(Element coords) const { return combine_rows(rows_, coords); }

Element combine_rows(std::span<const Element> rows, Element coords) {
  if (!coords.within(rows.size())) {
    throw Error(ErrorCode::InvalidIndex, "coordinate set " + to_string(coords) + " exceeds " +
                                             std::to_string(rows.size()) + " rows");
  }
  Element out;
  for_each_index(coords, [&](std::size_t i) { out += rows[i - 1]; });
  return out;
}

Element GeneralBasis::combine(std::span<const std::size_t> coords) const {
  Element out;
  for (std::size_t i : coords) {
    if (i >= rows_.size()) throw Error(ErrorCode::InvalidIndex, "row position " + std::to_string(i));
    out += rows_[i];
  }
  return out;
}

Element express_in_basis(Element g, const TriangularBasis& basis) {
  if (!g.within(basis.rank())) {
    throw Error(ErrorCode::NotInSpan,
                to_string(g) + " is outside the span of a rank-" + std::to_string(basis.rank()) + " basis");
  }
  Element coords;
  Element rest = g;
  while (!rest.is_zero()) {
    const std::size_t j = rest.max_index();
    coords += Element::singleton(j);
    rest += basis.row(j);
  }
  return coords;
}

std::vector<std::size_t> express_in_basis(Element g, const GeneralBasis& basis) {
  const Echelon ech(basis.rows());
  if (ech.dependent) throw Error(ErrorCode::DependentRows, "rows are linearly dependent");
  Element::Bits bits = g.bits();
  std::vector<bool> from(basis.size(), false);
  while (bits != 0) {
    const std::size_t pivot = static_cast<std::size_t>(63 - std::countl_zero(bits));
    if (!ech.used[pivot]) {
      throw Error(ErrorCode::NotInSpan, to_string(g) + " is outside the span of the rows");
    }
    bits ^= ech.row[pivot];
    for (std::size_t k = 0; k < from.size(); ++k) from[k] = from[k] != ech.origin[pivot][k];
  }
  std::vector<std::size_t> coords;
  for (std::size_t k = 0; k < from.size(); ++k) {
    if (from[k]) coords.push_back(k);
  }
  return coords;
}

std::size_t reduced_length(Element g, const TriangularBasis& basis) { return express_in_basis(g, basis).size(); }

std::size_t reduced_length(Element g, const GeneralBasis& basis) { return express_in_basis(g, basis).size(); }

std::size_t gf2_rank(std::span<const Element> rows) {
  std::array<Element::Bits, kMaxIndex> pivots{};
  std::size_t rank = 0;
  for (Element r : rows) {
    Element::Bits bits = r.bits();
    while (bits != 0) {
      const auto top = static_cast<std::size_t>(63 - std::countl_zero(bits));
      if (pivots[top] == 0) {
        pivots[top] = bits;
        ++rank;
        break;
      }
      bits ^= pivots[top];
    }
  }
  return rank;
}

}  // namespace boolnorm
