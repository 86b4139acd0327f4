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

#include "boolnorm/norms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>

#include "boolnorm/error.hpp"

namespace boolnorm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kPairingSearchLimit = 10;
constexpr std::size_t kSubsetDpLimit = 26;

void check_in_rank(Element g, std::size_t rank) {
  if (!g.within(rank)) {
    throw Error(ErrorCode::IndexOutOfRank, to_string(g) + " outside rank " + std::to_string(rank));
  }
}

double pairing_search(const MetricSpec& m, std::span<const std::size_t> letters, std::uint32_t used) {
  const auto s = static_cast<std::uint32_t>(letters.size());
  std::uint32_t i = 0;
  while (i < s && ((used >> i) & 1U) != 0) ++i;
  if (i == s) return 0.0;
  used |= 1U << i;
  const std::size_t a = letters[i];
  double best = m.dist[a][0] + pairing_search(m, letters, used);
  for (std::uint32_t j = i + 1; j < s; ++j) {
    if (((used >> j) & 1U) != 0) continue;
    best = std::min(best, m.dist[a][letters[j]] + pairing_search(m, letters, used | (1U << j)));
  }
  return best;
}

}  // namespace

bool leq_tol(double lhs, double rhs) noexcept {
  return lhs <= rhs + kRelTol * std::max({std::abs(lhs), std::abs(rhs), 0.0});
}

void WeightSpec::validate() const {
  if (weights.empty()) throw Error(ErrorCode::InvalidSpec, "weighted norm needs at least one weight");
  if (weights.size() > kMaxIndex) throw Error(ErrorCode::RankTooLarge, "too many weights");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i]) || weights[i] <= 0.0) {
      throw Error(ErrorCode::InvalidSpec, "weight " + std::to_string(i + 1) + " must be finite and positive");
    }
  }
}

void MetricSpec::validate() const {
  const std::size_t n = dist.size();
  if (n < 2) throw Error(ErrorCode::InvalidSpec, "metric needs a basepoint and at least one generator");
  if (n - 1 > kMaxIndex) throw Error(ErrorCode::RankTooLarge, "metric has too many points");
  for (const auto& row : dist) {
    if (row.size() != n) throw Error(ErrorCode::InvalidSpec, "distance matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i][i] != 0.0) throw Error(ErrorCode::InvalidSpec, "nonzero diagonal at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      const double d = dist[i][j];
      if (!std::isfinite(d)) throw Error(ErrorCode::InvalidSpec, "non-finite distance");
      if (d != dist[j][i]) throw Error(ErrorCode::InvalidSpec, "distance matrix is not symmetric");
      if (i != j && d <= 0.0) {
        throw Error(ErrorCode::InvalidSpec,
                    "distance between distinct points " + std::to_string(i) + "," + std::to_string(j) +
                        " must be positive");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!leq_tol(dist[i][k], dist[i][j] + dist[j][k])) {
          throw Error(ErrorCode::InvalidSpec, "triangle inequality fails at (" + std::to_string(i) + "," +
                                                  std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
}

BaseCostTable::BaseCostTable(std::size_t rank, std::vector<double> costs) : rank_(rank), costs_(std::move(costs)) {
  if (rank == 0 || rank >= 32) throw Error(ErrorCode::RankTooLarge, "base table rank " + std::to_string(rank));
  if (costs_.size() != (std::size_t{1} << rank)) {
    throw Error(ErrorCode::InvalidSpec, "base table needs 2^rank entries");
  }
  for (std::size_t g = 1; g < costs_.size(); ++g) {
    if (!std::isfinite(costs_[g]) || costs_[g] <= 0.0) {
      throw Error(ErrorCode::InvalidSpec,
                  "base cost of " + to_string(Element::from_bits(g)) + " must be finite and positive");
    }
  }
  costs_[0] = 0.0;
}

double BaseCostTable::cost(Element g) const {
  check_in_rank(g, rank_);
  return costs_[g.bits()];
}

double weighted_norm(const WeightSpec& spec, Element g) {
  check_in_rank(g, spec.rank());
  double total = 0.0;
  for_each_index(g, [&](std::size_t i) { total += spec.weights[i - 1]; });
  return total;
}

namespace detail {

double graev_pairing_search(const MetricSpec& metric, std::span<const std::size_t> letters) {
  if (letters.size() > 31) throw Error(ErrorCode::RankTooLarge, "support too large for pairing search");
  return pairing_search(metric, letters, 0);
}

double graev_subset_dp(const MetricSpec& metric, std::span<const std::size_t> letters) {
  const std::size_t s = letters.size();
  if (s > kSubsetDpLimit) throw Error(ErrorCode::RankTooLarge, "support too large for pairing program");
  // best[mask]: cheapest pairing of the letters in mask. The lowest letter
  // of mask goes either to the basepoint or to another letter of mask.
  std::vector<double> best(std::size_t{1} << s, 0.0);
  for (std::size_t mask = 1; mask < best.size(); ++mask) {
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & (mask - 1);
    const std::size_t a = letters[i];
    double b = metric.dist[a][0] + best[rest];
    for (std::size_t r = rest; r != 0; r &= r - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(r));
      b = std::min(b, metric.dist[a][letters[j]] + best[rest & ~(std::size_t{1} << j)]);
    }
    best[mask] = b;
  }
  return best.back();
}

}  // namespace detail

double graev_norm(const MetricSpec& metric, Element g) {
  check_in_rank(g, metric.rank());
  const std::vector<std::size_t> letters = g.support();
  if (letters.size() <= kPairingSearchLimit) return detail::graev_pairing_search(metric, letters);
  return detail::graev_subset_dp(metric, letters);
}

// ---------------------------------------------------------------------------
// NormOracle

class NormOracle::Model {
 public:
  virtual ~Model() = default;
  virtual std::size_t rank() const noexcept = 0;
  virtual std::string_view kind() const noexcept = 0;
  virtual double eval(Element g) const = 0;
  virtual bool memoizable() const noexcept { return true; }
};

namespace {

class WeightedModel final : public NormOracle::Model {
 public:
  explicit WeightedModel(WeightSpec spec) : spec_(std::move(spec)) {}
  std::size_t rank() const noexcept override { return spec_.rank(); }
  std::string_view kind() const noexcept override { return "weighted"; }
  double eval(Element g) const override { return weighted_norm(spec_, g); }

 private:
  WeightSpec spec_;
};

class GraevModel final : public NormOracle::Model {
 public:
  explicit GraevModel(MetricSpec metric) : metric_(std::move(metric)) {}
  std::size_t rank() const noexcept override { return metric_.rank(); }
  std::string_view kind() const noexcept override { return "graev"; }
  double eval(Element g) const override { return graev_norm(metric_, g); }

 private:
  MetricSpec metric_;
};

class TableModel final : public NormOracle::Model {
 public:
  TableModel(std::size_t rank, std::vector<double> values, std::string kind)
      : rank_(rank), values_(std::move(values)), kind_(std::move(kind)) {}
  std::size_t rank() const noexcept override { return rank_; }
  std::string_view kind() const noexcept override { return kind_; }
  double eval(Element g) const override { return values_[g.bits()]; }
  bool memoizable() const noexcept override { return false; }

 private:
  std::size_t rank_;
  std::vector<double> values_;
  std::string kind_;
};

}  // namespace

struct NormOracle::Memo {
  explicit Memo(std::size_t size) : values(new std::atomic<double>[size]) {
    for (std::size_t i = 0; i < size; ++i) values[i].store(-1.0, std::memory_order_relaxed);
  }
  std::unique_ptr<std::atomic<double>[]> values;
};

NormOracle::NormOracle(std::shared_ptr<const Model> model) : model_(std::move(model)) {
  if (model_->memoizable() && model_->rank() <= kMemoRankBound) {
    memo_ = std::make_shared<Memo>(std::size_t{1} << model_->rank());
  }
}

NormOracle NormOracle::weighted(WeightSpec spec) {
  spec.validate();
  return NormOracle(std::make_shared<WeightedModel>(std::move(spec)));
}

NormOracle NormOracle::graev(MetricSpec metric) {
  metric.validate();
  return NormOracle(std::make_shared<GraevModel>(std::move(metric)));
}

NormOracle NormOracle::from_table(std::size_t rank, std::vector<double> values, std::string_view kind) {
  if (rank == 0 || rank >= 32) throw Error(ErrorCode::RankTooLarge, "table rank " + std::to_string(rank));
  if (values.size() != (std::size_t{1} << rank)) {
    throw Error(ErrorCode::InvalidSpec, "norm table needs 2^rank entries");
  }
  return NormOracle(std::make_shared<TableModel>(rank, std::move(values), std::string(kind)));
}

std::size_t NormOracle::rank() const noexcept { return model_->rank(); }

std::string_view NormOracle::kind() const noexcept { return model_->kind(); }

double NormOracle::operator()(Element g) const {
  check_in_rank(g, model_->rank());
  if (!memo_) return model_->eval(g);
  std::atomic<double>& slot = memo_->values[g.bits()];
  double v = slot.load(std::memory_order_relaxed);
  if (v < 0.0) {
    v = model_->eval(g);
    slot.store(v, std::memory_order_relaxed);
  }
  return v;
}

std::vector<double> NormOracle::tabulate() const {
  const std::size_t r = rank();
  if (r > 26) throw Error(ErrorCode::RankTooLarge, "cannot tabulate rank " + std::to_string(r));
  std::vector<double> out(std::size_t{1} << r);
  for (std::size_t g = 0; g < out.size(); ++g) out[g] = (*this)(Element::from_bits(g));
  return out;
}

NormOracle closure_norm(const BaseCostTable& base, std::size_t max_rank) {
  const std::size_t rank = base.rank();
  if (rank > max_rank) {
    throw Error(ErrorCode::RankTooLarge,
                "closure norm at rank " + std::to_string(rank) + " exceeds bound " + std::to_string(max_rank));
  }
  const std::vector<double>& cost = base.costs();
  const std::size_t size = cost.size();
  // Shortest paths from zero in the Cayley graph whose edges g -> g+h cost
  // base(h). Dense label setting: each round finalizes the smallest label.
  std::vector<double> label(size, kInf);
  std::vector<char> done(size, 0);
  label[0] = 0.0;
  for (std::size_t round = 0; round < size; ++round) {
    std::size_t u = size;
    double best = kInf;
    for (std::size_t g = 0; g < size; ++g) {
      if (done[g] == 0 && label[g] < best) {
        best = label[g];
        u = g;
      }
    }
    if (u == size) break;
    done[u] = 1;
    for (std::size_t h = 1; h < size; ++h) {
      const std::size_t v = u ^ h;
      if (done[v] == 0) label[v] = std::min(label[v], best + cost[h]);
    }
  }
  return NormOracle::from_table(rank, std::move(label), "closure");
}

AxiomReport check_norm_axioms(const NormOracle& norm, std::optional<std::size_t> rank) {
  const std::size_t r = rank.value_or(norm.rank());
  if (r > norm.rank()) {
    throw Error(ErrorCode::IndexOutOfRank,
                "axiom check at rank " + std::to_string(r) + " exceeds norm rank " + std::to_string(norm.rank()));
  }
  if (r > kExhaustiveRankBound) {
    throw Error(ErrorCode::RankTooLarge, "exhaustive axiom check at rank " + std::to_string(r));
  }
  const std::size_t size = std::size_t{1} << r;
  std::vector<double> v(size);
  for (std::size_t g = 0; g < size; ++g) v[g] = norm(Element::from_bits(g));

  AxiomReport report;
  report.elements_checked = size;
  report.zero_ok = v[0] == 0.0;
  for (std::size_t g = 1; g < size && !report.nonpositive; ++g) {
    if (!(v[g] > 0.0) || !std::isfinite(v[g])) report.nonpositive = Element::from_bits(g);
  }
  for (std::size_t g = 0; g < size; ++g) {
    for (std::size_t h = 0; h < size; ++h) {
      ++report.pairs_checked;
      if (!report.triangle_violation && !leq_tol(v[g ^ h], v[g] + v[h])) {
        report.triangle_violation = {Element::from_bits(g), Element::from_bits(h)};
        report.lhs = v[g ^ h];
        report.rhs = v[g] + v[h];
      }
    }
  }
  report.pass = report.zero_ok && !report.nonpositive && !report.triangle_violation;
  return report;
}

double distance(const NormOracle& norm, Element g, Element h) { return norm(g + h); }

}  // namespace boolnorm
