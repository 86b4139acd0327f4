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

// Batch pipelines behind the command-line front end: verify a basis,
// rebase it along a sequence, and run seeded randomized campaigns.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolnorm/json_io.hpp"
#include "boolnorm/norms.hpp"
#include "boolnorm/rebasing.hpp"
#include "boolnorm/verification.hpp"

namespace boolnorm {

enum class Check { MonotoneTail, GeometricBound, Discreteness, Closedness, NullTail, Rebase };

/// "L0iii", "L1", "L2", "L3", "L4", "rebase".
std::string_view check_name(Check check) noexcept;

/// Comma-separated check names (surrounding spaces ignored); "all" selects
/// every check. Throws invalid-argument on unknown names or an empty list.
std::vector<Check> parse_checks(std::string_view list);

/// Runs the inequality checks in `checks` (Rebase is ignored here).
std::vector<LemmaReport> run_checks(std::span<const Element> rows, const NormOracle& norm,
                                    std::span<const Check> checks);

Json verify_report_json(std::span<const LemmaReport> reports, std::size_t rank);

struct RebaseReport {
  Normalized normalized;
  std::vector<std::size_t> iterates;
  GeneralBasis basis;
  Independence independence;
  std::uint64_t witnesses_checked = 0;
  std::uint64_t witness_failures = 0;
  bool witnesses_exhaustive = false;
  SeparationProfile separation;

  bool ok() const noexcept {
    return independence.independent && independence.rank == iterates.back() && witness_failures == 0;
  }
};

/// Rows above this count switch witness checking from exhaustive to a
/// seeded sample of kWitnessSamples combinations.
inline constexpr std::size_t kExhaustiveWitnessRows = 16;
inline constexpr std::uint64_t kWitnessSamples = 10000;

/// Normalizes `raw`, builds the rebased rows, certifies independence by
/// elimination and cross-checks the block witness on every (or a sampled)
/// combination against the actual sum.
RebaseReport run_rebase(std::span<const Element> reduced_rows, const NormOracle& norm,
                        std::span<const Element> raw, std::uint64_t seed);

Json to_json(const RebaseReport& report);

enum class NormFamily { Weighted, Graev, Closure };

std::string_view family_name(NormFamily family) noexcept;
/// Throws invalid-argument for unknown names.
NormFamily parse_family(std::string_view name);

/// Random instances. Weights and base costs are log-uniform in [0.1, 10];
/// metrics are shortest-path closures of log-uniform edge weights.
WeightSpec random_weights(std::size_t rank, std::mt19937_64& rng);
MetricSpec random_metric(std::size_t rank, std::mt19937_64& rng);
BaseCostTable random_base(std::size_t rank, std::mt19937_64& rng);
NormOracle random_norm(NormFamily family, std::size_t rank, std::mt19937_64& rng);

/// A raw approach sequence for rank >= 3 with increasing maxima, random
/// lower letters, and the occasional repeated term for normalization to
/// clean up. Even-sized terms are only left in place when a parity fix
/// below their maximum exists, so at least two terms always survive.
std::vector<Element> random_raw_sequence(std::size_t rank, std::mt19937_64& rng);

/// Per-trial seed derived from the campaign seed.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

struct CampaignConfig {
  std::size_t rank = 8;
  NormFamily family = NormFamily::Closure;
  /// When set, every trial uses this norm instead of a random one.
  std::optional<std::string> norm_json;
  std::vector<Check> checks;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  /// Throws invalid-argument on rank 0, zero trials or no checks.
  void validate() const;
};

struct TrialOutcome {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  bool axioms_pass = false;
  /// Per check in config order: pass flag.
  std::vector<std::pair<Check, bool>> results;
  std::uint64_t violations = 0;
  double worst_l1_ratio = 0.0;
  double min_epsilon = 0.0;
  bool pass = false;
};

struct CampaignResult {
  std::vector<TrialOutcome> trials;

  bool all_pass() const noexcept;
  /// One header line plus one line per trial, in trial order.
  std::string csv(const CampaignConfig& config) const;
  Json summary(const CampaignConfig& config) const;
};

CampaignResult run_campaign(const CampaignConfig& config);

}  // namespace boolnorm
