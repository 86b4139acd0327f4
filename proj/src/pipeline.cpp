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

#include "boolnorm/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <thread>

#include "boolnorm/error.hpp"
#include "boolnorm/reduction.hpp"

namespace boolnorm {

namespace {

constexpr Check kAllChecks[] = {Check::MonotoneTail, Check::GeometricBound, Check::Discreteness,
                                Check::Closedness,   Check::NullTail,       Check::Rebase};

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_witness(const RebaseReport& r, std::span<const std::size_t> combo, std::uint64_t& checked,
                   std::uint64_t& failures, std::size_t rank) {
  const std::size_t w = witness_nonvanishing(combo, r.normalized.sequence, rank);
  ++checked;
  if (!r.basis.combine(combo).contains(w)) ++failures;
}

}  // namespace

std::string_view check_name(Check check) noexcept {
  switch (check) {
    case Check::MonotoneTail: return "L0iii";
    case Check::GeometricBound: return "L1";
    case Check::Discreteness: return "L2";
    case Check::Closedness: return "L3";
    case Check::NullTail: return "L4";
    case Check::Rebase: return "rebase";
  }
  return "?";
}

std::vector<Check> parse_checks(std::string_view list) {
  std::vector<Check> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    std::string_view name = list.substr(pos, comma - pos);
    pos = comma + 1;
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front())) != 0) name.remove_prefix(1);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())) != 0) name.remove_suffix(1);
    if (name.empty()) continue;
    if (name == "all") {
      for (Check c : kAllChecks) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
      }
      continue;
    }
    const auto it = std::find_if(std::begin(kAllChecks), std::end(kAllChecks),
                                 [&](Check c) { return check_name(c) == name; });
    if (it == std::end(kAllChecks)) throw Error(ErrorCode::InvalidArgument, "unknown check '" + std::string(name) + "'");
    if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "no checks requested");
  return out;
}

std::vector<LemmaReport> run_checks(std::span<const Element> rows, const NormOracle& norm,
                                    std::span<const Check> checks) {
  std::vector<LemmaReport> reports;
  for (Check c : checks) {
    switch (c) {
      case Check::MonotoneTail: reports.push_back(check_monotone_tail(rows, norm)); break;
      case Check::GeometricBound: reports.push_back(check_geometric_bound(rows, norm)); break;
      case Check::Discreteness: reports.push_back(check_discreteness_all(rows, norm)); break;
      case Check::Closedness: reports.push_back(check_closedness_all(rows, norm)); break;
      case Check::NullTail: reports.push_back(check_null_tail_all(rows, norm)); break;
      case Check::Rebase: break;
    }
  }
  return reports;
}

Json verify_report_json(std::span<const LemmaReport> reports, std::size_t rank) {
  bool pass = true;
  Json list = Json::array();
  for (const LemmaReport& r : reports) {
    pass = pass && r.pass;
    list.push_back(to_json(r));
  }
  return Json{{"rank", rank}, {"pass", pass}, {"reports", std::move(list)}};
}

RebaseReport run_rebase(std::span<const Element> reduced_rows, const NormOracle& norm,
                        std::span<const Element> raw, std::uint64_t seed) {
  const std::size_t rank = reduced_rows.size();
  RebaseReport r;
  r.normalized = normalize_sequence(raw, reduced_rows, norm);
  r.iterates = f_iterates(r.normalized.sequence, rank);
  r.basis = build_second_basis(rank, r.normalized.sequence);
  r.independence = verify_independence(r.basis);

  const std::size_t rows = r.basis.size();
  std::vector<std::size_t> combo;
  if (rows <= kExhaustiveWitnessRows) {
    r.witnesses_exhaustive = true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rows); ++mask) {
      combo.clear();
      for (std::size_t i = 0; i < rows; ++i) {
        if (((mask >> i) & 1U) != 0) combo.push_back(i);
      }
      check_witness(r, combo, r.witnesses_checked, r.witness_failures, rank);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution pick(0.5);
    std::uniform_int_distribution<std::size_t> any(0, rows - 1);
    for (std::uint64_t s = 0; s < kWitnessSamples; ++s) {
      combo.clear();
      for (std::size_t i = 0; i < rows; ++i) {
        if (pick(rng)) combo.push_back(i);
      }
      if (combo.empty()) combo.push_back(any(rng));
      check_witness(r, combo, r.witnesses_checked, r.witness_failures, rank);
    }
  }
  r.separation = separation_profile(r.basis, reduced_rows, norm, r.normalized.sequence);
  return r;
}

Json to_json(const RebaseReport& r) {
  const NormalizationLog& log = r.normalized.log;
  Json parity = Json::array();
  for (const auto& [pos, letter] : log.parity_fixed) parity.push_back({{"position", pos}, {"letter", letter}});
  Json pairwise = Json::array();
  for (const PairDistance& p : r.separation.pairwise) {
    pairwise.push_back({{"i", p.i}, {"j", p.j}, {"distance", p.distance}});
  }
  Json anchors = Json::array();
  for (const AnchorDistance& a : r.separation.anchors) {
    anchors.push_back({{"block", a.block}, {"term", a.term}, {"min_distance", a.min_distance}});
  }
  return Json{
      {"ok", r.ok()},
      {"sequence", rows_to_json(r.normalized.sequence.terms())},
      {"normalization",
       {{"parity_fixed", parity},
        {"dropped_nonincreasing", log.dropped_nonincreasing},
        {"dropped_duplicates", log.dropped_duplicates},
        {"dropped_invalid", log.dropped_invalid},
        {"first_replaced", log.first_replaced}}},
      {"f_iterates", r.iterates},
      {"rows", rows_to_json(r.basis.rows())},
      {"independent", r.independence.independent},
      {"rank", r.independence.rank},
      {"witnesses_checked", r.witnesses_checked},
      {"witness_failures", r.witness_failures},
      {"witnesses_exhaustive", r.witnesses_exhaustive},
      {"separation",
       {{"min_pairwise", r.separation.min_pairwise}, {"anchors", anchors}, {"pairwise", pairwise}}},
  };
}

std::string_view family_name(NormFamily family) noexcept {
  switch (family) {
    case NormFamily::Weighted: return "weighted";
    case NormFamily::Graev: return "graev";
    case NormFamily::Closure: return "closure";
  }
  return "?";
}

NormFamily parse_family(std::string_view name) {
  for (NormFamily f : {NormFamily::Weighted, NormFamily::Graev, NormFamily::Closure}) {
    if (family_name(f) == name) return f;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown norm family '" + std::string(name) + "'");
}

WeightSpec random_weights(std::size_t rank, std::mt19937_64& rng) {
  WeightSpec spec;
  for (std::size_t i = 0; i < rank; ++i) spec.weights.push_back(log_uniform(rng, 0.1, 10.0));
  return spec;
}

MetricSpec random_metric(std::size_t rank, std::mt19937_64& rng) {
  const std::size_t n = rank + 1;
  MetricSpec m;
  m.dist.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m.dist[i][j] = m.dist[j][i] = log_uniform(rng, 0.1, 10.0);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.dist[i][j] = std::min(m.dist[i][j], m.dist[i][k] + m.dist[k][j]);
    }
  }
  return m;
}

BaseCostTable random_base(std::size_t rank, std::mt19937_64& rng) {
  std::vector<double> costs(std::size_t{1} << rank, 0.0);
  for (std::size_t g = 1; g < costs.size(); ++g) costs[g] = log_uniform(rng, 0.1, 10.0);
  return BaseCostTable(rank, std::move(costs));
}

NormOracle random_norm(NormFamily family, std::size_t rank, std::mt19937_64& rng) {
  switch (family) {
    case NormFamily::Weighted: return NormOracle::weighted(random_weights(rank, rng));
    case NormFamily::Graev: return NormOracle::graev(random_metric(rank, rng));
    case NormFamily::Closure: return closure_norm(random_base(rank, rng));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown norm family");
}

std::vector<Element> random_raw_sequence(std::size_t rank, std::mt19937_64& rng) {
  if (rank < 3) throw Error(ErrorCode::InvalidArgument, "random sequences need rank >= 3");
  std::uniform_int_distribution<std::size_t> length(2, rank - 1);
  const std::size_t m = length(rng);
  std::vector<std::size_t> maxima;
  for (std::size_t v = 2; v <= rank; ++v) maxima.push_back(v);
  std::shuffle(maxima.begin(), maxima.end(), rng);
  maxima.resize(m);
  std::sort(maxima.begin(), maxima.end());

  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution repeat(0.15);
  std::vector<Element> raw;
  for (std::size_t top : maxima) {
    Element a = Element::singleton(top);
    for (std::size_t j = 1; j < top; ++j) {
      if (coin(rng)) a += Element::singleton(j);
    }
    if (a.size() % 2 == 0) {
      const bool has_free_letter = a.size() < top;
      if (top == 2) {
        a = Element::singleton(2);
      } else if (!has_free_letter || coin(rng)) {
        a += Element::singleton(std::uniform_int_distribution<std::size_t>(1, top - 1)(rng));
      }
    }
    raw.push_back(a);
    if (repeat(rng)) raw.push_back(raw[std::uniform_int_distribution<std::size_t>(0, raw.size() - 1)(rng)]);
  }
  return raw;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void CampaignConfig::validate() const {
  if (rank == 0) throw Error(ErrorCode::InvalidArgument, "rank must be at least 1");
  if (rank > kVerifyRankBound) {
    throw Error(ErrorCode::RankTooLarge, "campaign rank " + std::to_string(rank) + " exceeds " +
                                             std::to_string(kVerifyRankBound));
  }
  if (!norm_json && family == NormFamily::Closure && rank > kExhaustiveRankBound) {
    throw Error(ErrorCode::RankTooLarge, "closure norms need rank <= " + std::to_string(kExhaustiveRankBound));
  }
  if (trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  if (checks.empty()) throw Error(ErrorCode::InvalidArgument, "no checks requested");
}

namespace {

TrialOutcome run_trial(const CampaignConfig& config, const std::optional<NormOracle>& fixed, std::uint64_t trial) {
  TrialOutcome out;
  out.trial = trial;
  out.seed = trial_seed(config.seed, trial);
  std::mt19937_64 rng(out.seed);
  const NormOracle norm = fixed ? *fixed : random_norm(config.family, config.rank, rng);

  out.axioms_pass = check_norm_axioms(norm, std::min(config.rank, kExhaustiveRankBound)).pass;
  const Reduction reduction = reduce_basis(norm, config.rank);
  const auto rows = reduction.basis.rows();
  out.pass = out.axioms_pass;

  // run_checks skips Rebase, so its reports line up with the other checks.
  const std::vector<LemmaReport> reports = run_checks(rows, norm, config.checks);
  std::size_t next = 0;
  for (Check c : config.checks) {
    bool ok = true;
    if (c == Check::Rebase) {
      if (config.rank >= 3) {
        const std::vector<Element> raw = random_raw_sequence(config.rank, rng);
        ok = run_rebase(rows, norm, raw, rng()).ok();
      }
    } else {
      const LemmaReport& r = reports[next++];
      ok = r.pass;
      out.violations += r.violations.size();
      if (c == Check::GeometricBound) out.worst_l1_ratio = r.worst_ratio;
    }
    out.results.emplace_back(c, ok);
    out.pass = out.pass && ok;
  }
  out.min_epsilon = separation_epsilon(Element::full(config.rank), rows, norm);
  return out;
}

}  // namespace

bool CampaignResult::all_pass() const noexcept {
  return std::all_of(trials.begin(), trials.end(), [](const TrialOutcome& t) { return t.pass; });
}

std::string CampaignResult::csv(const CampaignConfig& config) const {
  std::string out = "trial,seed,family,rank,axioms";
  for (Check c : config.checks) {
    out += ',';
    out += check_name(c);
  }
  out += ",violations,worst_l1_ratio,min_epsilon,pass\n";
  const std::string family = config.norm_json ? "file" : std::string(family_name(config.family));
  for (const TrialOutcome& t : trials) {
    out += std::to_string(t.trial) + ',' + std::to_string(t.seed) + ',' + family + ',' + std::to_string(config.rank) +
           ',' + (t.axioms_pass ? '1' : '0');
    for (const auto& [check, ok] : t.results) {
      out += ',';
      out += ok ? '1' : '0';
    }
    out += ',' + std::to_string(t.violations) + ',' + format_double(t.worst_l1_ratio) + ',' +
           format_double(t.min_epsilon) + ',' + (t.pass ? '1' : '0') + '\n';
  }
  return out;
}

Json CampaignResult::summary(const CampaignConfig& config) const {
  std::uint64_t passed = 0;
  std::uint64_t axioms = 0;
  double worst_l1 = 0.0;
  double min_eps = std::numeric_limits<double>::infinity();
  Json per_check = Json::object();
  for (Check c : config.checks) per_check[std::string(check_name(c))] = 0;
  for (const TrialOutcome& t : trials) {
    passed += t.pass ? 1 : 0;
    axioms += t.axioms_pass ? 1 : 0;
    worst_l1 = std::max(worst_l1, t.worst_l1_ratio);
    min_eps = std::min(min_eps, t.min_epsilon);
    for (const auto& [check, ok] : t.results) {
      if (ok) per_check[std::string(check_name(check))] = per_check[std::string(check_name(check))].get<int>() + 1;
    }
  }
  const double n = static_cast<double>(trials.size());
  return Json{{"trials", trials.size()},
              {"passed", passed},
              {"pass_rate", trials.empty() ? 0.0 : static_cast<double>(passed) / n},
              {"axioms_passed", axioms},
              {"checks_passed", per_check},
              {"worst_l1_ratio", worst_l1},
              {"min_epsilon", min_eps},
              {"family", config.norm_json ? "file" : std::string(family_name(config.family))},
              {"rank", config.rank},
              {"seed", config.seed}};
}

CampaignResult run_campaign(const CampaignConfig& config) {
  config.validate();
  std::optional<NormOracle> fixed;
  if (config.norm_json) {
    fixed = norm_from_json(std::string_view(*config.norm_json));
    if (fixed->rank() < config.rank) {
      throw Error(ErrorCode::IndexOutOfRank, "norm rank " + std::to_string(fixed->rank()) + " below campaign rank " +
                                                 std::to_string(config.rank));
    }
  }

  CampaignResult result;
  result.trials.resize(config.trials);
  std::atomic<std::uint64_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  const auto worker = [&] {
    for (std::uint64_t t = next++; t < config.trials; t = next++) {
      try {
        result.trials[t] = run_trial(config, fixed, t);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(config.threads, 1U), config.trials));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return result;
}

}  // namespace boolnorm
