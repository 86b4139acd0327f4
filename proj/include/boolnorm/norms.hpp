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
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "boolnorm/element.hpp"

namespace boolnorm {

/// Relative tolerance used by every floating-point comparison in checks.
inline constexpr double kRelTol = 1e-9;

/// lhs <= rhs up to kRelTol relative to the larger magnitude.
bool leq_tol(double lhs, double rhs) noexcept;

/// Largest rank for exhaustive table work (closure norms, axiom checks).
inline constexpr std::size_t kExhaustiveRankBound = 14;

/// Positive weights w_1..w_n; the norm of g is the sum of w_i over its support.
struct WeightSpec {
  std::vector<double> weights;

  std::size_t rank() const noexcept { return weights.size(); }
  /// Throws invalid-spec unless every weight is finite and positive.
  void validate() const;
};

/// A finite metric on points 0..n. Point 0 is the basepoint (the zero
/// element), point i stands for generator i.
struct MetricSpec {
  std::vector<std::vector<double>> dist;

  std::size_t rank() const noexcept { return dist.empty() ? 0 : dist.size() - 1; }
  /// Throws invalid-spec unless dist is a square, symmetric, zero-diagonal
  /// matrix with positive off-diagonal entries obeying the triangle
  /// inequality (within kRelTol).
  void validate() const;
};

/// Positive seed costs for every nonzero element of a truncation.
class BaseCostTable {
 public:
  /// `costs` has 2^rank entries indexed by element bits; entry 0 is ignored.
  BaseCostTable(std::size_t rank, std::vector<double> costs);

  std::size_t rank() const noexcept { return rank_; }
  double cost(Element g) const;
  const std::vector<double>& costs() const noexcept { return costs_; }

 private:
  std::size_t rank_;
  std::vector<double> costs_;
};

double weighted_norm(const WeightSpec& spec, Element g);

/// Minimum-cost pairing of the support of g, where each letter pairs either
/// with another letter or with the basepoint. Exhaustive for supports of up
/// to 10 letters, bitmask dynamic program above.
double graev_norm(const MetricSpec& metric, Element g);

namespace detail {
double graev_pairing_search(const MetricSpec& metric, std::span<const std::size_t> letters);
double graev_subset_dp(const MetricSpec& metric, std::span<const std::size_t> letters);
}  // namespace detail

/// An immutable, thread-safe norm on a rank-n truncation.
///
/// Computed families (weighted, graev) are memoized per element up to
/// kMemoRankBound; the fill is idempotent so concurrent evaluation is safe.
class NormOracle {
 public:
  static constexpr std::size_t kMemoRankBound = 20;

  static NormOracle weighted(WeightSpec spec);
  static NormOracle graev(MetricSpec metric);
  /// A raw value table with 2^rank entries, used verbatim (no validation of
  /// the norm axioms; see check_norm_axioms).
  static NormOracle from_table(std::size_t rank, std::vector<double> values, std::string_view kind = "table");

  std::size_t rank() const noexcept;
  std::string_view kind() const noexcept;

  /// Throws index-out-of-rank when g is not in the truncation.
  double operator()(Element g) const;

  /// Values for all 2^rank elements, indexed by element bits.
  std::vector<double> tabulate() const;

  class Model;

 private:
  struct Memo;

  NormOracle(std::shared_ptr<const Model> model);

  std::shared_ptr<const Model> model_;
  std::shared_ptr<Memo> memo_;
};

/// The largest norm bounded above by `base`: N(g) is the minimum over
/// decompositions g = h_1 + ... + h_k of the summed base costs. Computed by
/// label setting over the element table. Throws rank-too-large above
/// `max_rank`.
NormOracle closure_norm(const BaseCostTable& base, std::size_t max_rank = kExhaustiveRankBound);

struct AxiomReport {
  bool pass = true;
  bool zero_ok = true;
  /// First nonzero element whose value is not positive.
  std::optional<Element> nonpositive;
  /// First ordered pair with N(g+h) > N(g) + N(h).
  std::optional<std::pair<Element, Element>> triangle_violation;
  double lhs = 0.0;
  double rhs = 0.0;
  std::uint64_t elements_checked = 0;
  std::uint64_t pairs_checked = 0;
};

/// Exhaustive check of the norm axioms on the rank-`rank` truncation
/// (defaults to the norm's own rank). Violations are report content.
AxiomReport check_norm_axioms(const NormOracle& norm, std::optional<std::size_t> rank = std::nullopt);

/// d(g, h) = N(g + h).
double distance(const NormOracle& norm, Element g, Element h);

}  // namespace boolnorm
