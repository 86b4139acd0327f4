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

#include "boolnorm/verification.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "boolnorm/error.hpp"
#include "boolnorm/stratum.hpp"

namespace boolnorm {

namespace {

// Element and norm for every coordinate set of the basis.
class CoordinateTable {
 public:
  CoordinateTable(std::span<const Element> rows, const NormOracle& norm) : rows_(rows) {
    if (rows.size() > kVerifyRankBound) {
      throw Error(ErrorCode::RankTooLarge, "exhaustive verification at rank " + std::to_string(rows.size()));
    }
    const std::size_t size = std::size_t{1} << rows.size();
    element_.resize(size);
    value_.resize(size);
    for (std::size_t s = 1; s < size; ++s) {
      const auto low = static_cast<std::size_t>(std::countr_zero(s));
      element_[s] = element_[s & (s - 1)] + rows[low];
    }
    for (std::size_t s = 0; s < size; ++s) value_[s] = norm(element_[s]);
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  Element element(Element coords) const { return element_[coords.bits()]; }
  double norm_of(Element coords) const { return value_[coords.bits()]; }
  /// Norm of row j (1-based).
  double letter(std::size_t j) const { return value_[std::size_t{1} << (j - 1)]; }

 private:
  std::span<const Element> rows_;
  std::vector<Element> element_;
  std::vector<double> value_;
};

double ratio(double lhs, double rhs) {
  if (rhs > 0.0) return lhs / rhs;
  return lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

void record(LemmaReport& report, double lhs, double rhs, std::vector<Element> witness, int k = -1) {
  ++report.checked;
  report.worst_ratio = std::max(report.worst_ratio, ratio(lhs, rhs));
  if (!leq_tol(lhs, rhs)) {
    report.pass = false;
    report.violations.push_back({std::move(witness), k, lhs, rhs});
  }
}

double epsilon_from(Element coords, const CoordinateTable& table) {
  double smallest = std::numeric_limits<double>::infinity();
  for_each_index(coords, [&](std::size_t j) { smallest = std::min(smallest, table.letter(j)); });
  return std::ldexp(smallest, -2 * static_cast<int>(coords.size()));
}

bool witness_less(const Violation& a, const Violation& b) {
  const std::size_t n = std::min(a.witness.size(), b.witness.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.witness[i] != b.witness[i]) return lex_less(a.witness[i], b.witness[i]);
  }
  if (a.witness.size() != b.witness.size()) return a.witness.size() < b.witness.size();
  return a.k < b.k;
}

// The element named by w + v is the sum of both row selections, so the
// distance d(w, v) = N(w + v) is a table lookup on the symmetric difference.
LemmaReport stratum_check(const CoordinateTable& table, std::size_t n, bool closedness) {
  LemmaReport report;
  report.lemma = closedness ? "L3" : "L2";
  const Truncation ctx{table.rank()};
  if (n > ctx.rank) {
    throw Error(ErrorCode::KExceedsRank, "stratum " + std::to_string(n) + " > rank " + std::to_string(ctx.rank));
  }
  if (n == 0) return report;
  const std::vector<Element> stratum = enumerate_stratum(ctx, n, StratumMode::Exactly);
  const std::vector<Element> others = closedness ? enumerate_stratum(ctx, n - 1, StratumMode::AtMost) : stratum;
  for (Element w : stratum) {
    const double eps = epsilon_from(w, table);
    for (Element v : others) {
      if (v == w) continue;
      record(report, eps, table.norm_of(w + v), {w, v});
    }
  }
  return report;
}

void sort_violations(LemmaReport& report) {
  std::stable_sort(report.violations.begin(), report.violations.end(), witness_less);
}

}  // namespace

void LemmaReport::merge(const LemmaReport& other) {
  if (lemma.empty()) lemma = other.lemma;
  pass = pass && other.pass;
  checked += other.checked;
  worst_ratio = std::max(worst_ratio, other.worst_ratio);
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  sort_violations(*this);
}

LemmaReport check_monotone_tail(std::span<const Element> rows, const NormOracle& norm) {
  const CoordinateTable table(rows, norm);
  LemmaReport report;
  report.lemma = "L0iii";
  const std::size_t size = std::size_t{1} << rows.size();
  for (std::size_t s = 1; s < size; ++s) {
    const Element coords = Element::from_bits(s);
    record(report, table.letter(coords.max_index()), table.norm_of(coords), {coords});
  }
  sort_violations(report);
  return report;
}

LemmaReport check_geometric_bound(std::span<const Element> rows, const NormOracle& norm) {
  const CoordinateTable table(rows, norm);
  LemmaReport report;
  report.lemma = "L1";
  const std::size_t size = std::size_t{1} << rows.size();
  for (std::size_t s = 1; s < size; ++s) {
    const Element coords = Element::from_bits(s);
    const std::vector<std::size_t> idx = coords.support();
    const double w = table.norm_of(coords);
    const std::size_t n = idx.size();
    for (std::size_t k = 0; k < n; ++k) {
      record(report, table.letter(idx[n - 1 - k]), std::ldexp(w, static_cast<int>(k)), {coords},
             static_cast<int>(k));
    }
  }
  sort_violations(report);
  return report;
}

double separation_epsilon(Element coords, std::span<const Element> rows, const NormOracle& norm) {
  if (coords.is_zero()) throw Error(ErrorCode::InvalidArgument, "separation radius needs a nonempty word");
  if (!coords.within(rows.size())) {
    throw Error(ErrorCode::InvalidIndex, to_string(coords) + " exceeds " + std::to_string(rows.size()) + " rows");
  }
  double smallest = std::numeric_limits<double>::infinity();
  for_each_index(coords, [&](std::size_t j) { smallest = std::min(smallest, norm(rows[j - 1])); });
  return std::ldexp(smallest, -2 * static_cast<int>(coords.size()));
}

LemmaReport check_discreteness(std::span<const Element> rows, const NormOracle& norm, std::size_t n) {
  LemmaReport report = stratum_check(CoordinateTable(rows, norm), n, false);
  sort_violations(report);
  return report;
}

LemmaReport check_closedness(std::span<const Element> rows, const NormOracle& norm, std::size_t n) {
  LemmaReport report = stratum_check(CoordinateTable(rows, norm), n, true);
  sort_violations(report);
  return report;
}

LemmaReport check_null_tail(std::span<const Element> rows, const NormOracle& norm,
                            std::span<const std::size_t> indices) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || indices[i] > rows.size() || (i > 0 && indices[i] <= indices[i - 1])) {
      throw Error(ErrorCode::InvalidIndex, "null-tail indices must be strictly increasing within 1.." +
                                               std::to_string(rows.size()));
    }
  }
  LemmaReport report;
  report.lemma = "L4";
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      const Element lo = rows[indices[a] - 1];
      const Element hi = rows[indices[b] - 1];
      record(report, norm(hi), norm(lo + hi), {Element::from_indices({indices[a], indices[b]})});
    }
  }
  sort_violations(report);
  return report;
}

LemmaReport check_discreteness_all(std::span<const Element> rows, const NormOracle& norm) {
  const CoordinateTable table(rows, norm);
  LemmaReport report;
  report.lemma = "L2";
  for (std::size_t n = 0; n <= rows.size(); ++n) report.merge(stratum_check(table, n, false));
  return report;
}

LemmaReport check_closedness_all(std::span<const Element> rows, const NormOracle& norm) {
  const CoordinateTable table(rows, norm);
  LemmaReport report;
  report.lemma = "L3";
  for (std::size_t n = 0; n <= rows.size(); ++n) report.merge(stratum_check(table, n, true));
  return report;
}

LemmaReport check_null_tail_all(std::span<const Element> rows, const NormOracle& norm) {
  std::vector<std::size_t> all(rows.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j + 1;
  return check_null_tail(rows, norm, all);
}

}  // namespace boolnorm
