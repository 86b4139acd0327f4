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

#include "boolnorm/json_io.hpp"

#include <cmath>
#include <map>

#include "boolnorm/error.hpp"

namespace boolnorm {

namespace {

double finite_number(const Json& j, const std::string& what) {
  if (!j.is_number()) throw Error(ErrorCode::ParseError, what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidSpec, what + " must be finite");
  return v;
}

// Values keyed by element, for the closure and table kinds.
std::vector<double> keyed_table(const Json& obj, const std::string& field) {
  if (!obj.is_object() || obj.empty()) {
    throw Error(ErrorCode::ParseError, "'" + field + "' must be a nonempty object");
  }
  std::map<Element::Bits, double> entries;
  std::size_t rank = 0;
  for (const auto& [key, value] : obj.items()) {
    const Element g = element_from_key(key);
    if (g.is_zero()) throw Error(ErrorCode::InvalidSpec, "'" + field + "' must not list the zero element");
    if (!entries.emplace(g.bits(), finite_number(value, "entry '" + key + "'")).second) {
      throw Error(ErrorCode::InvalidSpec, "'" + field + "' lists " + to_string(g) + " twice");
    }
    rank = std::max(rank, g.max_index());
  }
  if (rank > kExhaustiveRankBound) {
    throw Error(ErrorCode::RankTooLarge, "'" + field + "' has rank " + std::to_string(rank));
  }
  std::vector<double> values(std::size_t{1} << rank, 0.0);
  for (std::size_t g = 1; g < values.size(); ++g) {
    const auto it = entries.find(g);
    if (it == entries.end()) {
      throw Error(ErrorCode::InvalidSpec,
                  "'" + field + "' is missing " + to_string(Element::from_bits(g)) + " (needs all 2^rank-1 entries)");
    }
    values[g] = it->second;
  }
  return values;
}

std::size_t rank_of(const std::vector<double>& values) {
  return static_cast<std::size_t>(std::countr_zero(values.size()));
}

}  // namespace

Json element_to_json(Element g) { return Json(g.support()); }

Element element_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "element must be an array of indices");
  std::vector<std::size_t> idx;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "element index must be an integer");
    const auto i = v.get<std::int64_t>();
    if (i < 1 || i > static_cast<std::int64_t>(kMaxIndex)) {
      throw Error(ErrorCode::IndexOutOfRank, "element index " + std::to_string(i) + " outside 1..64");
    }
    idx.push_back(static_cast<std::size_t>(i));
  }
  return Element::from_indices(idx);
}

Json rows_to_json(std::span<const Element> rows) {
  Json out = Json::array();
  for (Element r : rows) out.push_back(element_to_json(r));
  return out;
}

std::vector<Element> rows_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of elements");
  std::vector<Element> rows;
  for (const Json& r : j) rows.push_back(element_from_json(r));
  return rows;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Element element_from_key(std::string_view key) {
  std::vector<std::size_t> idx;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    const std::size_t comma = std::min(key.find(',', pos), key.size());
    std::string_view part = key.substr(pos, comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (part.empty()) {
      if (key.find_first_not_of(' ') == std::string_view::npos) return {};
      throw Error(ErrorCode::ParseError, "empty entry in key '" + std::string(key) + "'");
    }
    std::size_t v = 0;
    for (char c : part) {
      if (c < '0' || c > '9' || v > kMaxIndex) {
        throw Error(ErrorCode::ParseError, "bad index in key '" + std::string(key) + "'");
      }
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    idx.push_back(v);
    pos = comma + 1;
  }
  return Element::from_indices(idx);
}

std::string element_to_key(Element g) {
  std::string out;
  for_each_index(g, [&](std::size_t i) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  });
  return out;
}

NormOracle norm_from_json(const Json& spec) {
  try {
    if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string()) {
      throw Error(ErrorCode::ParseError, "norm spec needs a string 'kind'");
    }
    const std::string kind = spec["kind"].get<std::string>();
    if (kind == "weighted") {
      if (!spec.contains("weights") || !spec["weights"].is_array()) {
        throw Error(ErrorCode::ParseError, "weighted norm needs a 'weights' array");
      }
      WeightSpec w;
      for (const Json& v : spec["weights"]) w.weights.push_back(finite_number(v, "weight"));
      return NormOracle::weighted(std::move(w));
    }
    if (kind == "graev") {
      if (!spec.contains("dist") || !spec["dist"].is_array()) {
        throw Error(ErrorCode::ParseError, "graev norm needs a 'dist' matrix");
      }
      MetricSpec m;
      for (const Json& row : spec["dist"]) {
        if (!row.is_array()) throw Error(ErrorCode::ParseError, "'dist' rows must be arrays");
        std::vector<double> r;
        for (const Json& v : row) r.push_back(finite_number(v, "distance"));
        m.dist.push_back(std::move(r));
      }
      return NormOracle::graev(std::move(m));
    }
    if (kind == "closure") {
      if (!spec.contains("base")) throw Error(ErrorCode::ParseError, "closure norm needs a 'base' object");
      std::vector<double> costs = keyed_table(spec["base"], "base");
      const std::size_t rank = rank_of(costs);
      return closure_norm(BaseCostTable(rank, std::move(costs)));
    }
    if (kind == "table") {
      if (!spec.contains("values")) throw Error(ErrorCode::ParseError, "table norm needs a 'values' object");
      std::vector<double> values = keyed_table(spec["values"], "values");
      const std::size_t rank = rank_of(values);
      return NormOracle::from_table(rank, std::move(values));
    }
    throw Error(ErrorCode::InvalidSpec, "unknown norm kind '" + kind + "'");
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json to_json(const AxiomReport& report) {
  Json out{{"pass", report.pass},
           {"zero_ok", report.zero_ok},
           {"elements_checked", report.elements_checked},
           {"pairs_checked", report.pairs_checked}};
  out["nonpositive"] = report.nonpositive ? element_to_json(*report.nonpositive) : Json(nullptr);
  if (report.triangle_violation) {
    out["triangle_violation"] = {{"g", element_to_json(report.triangle_violation->first)},
                                 {"h", element_to_json(report.triangle_violation->second)},
                                 {"lhs", report.lhs},
                                 {"rhs", report.rhs}};
  } else {
    out["triangle_violation"] = nullptr;
  }
  return out;
}

Json to_json(const LemmaReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json entry{{"witness", rows_to_json(v.witness)}, {"lhs", v.lhs}, {"rhs", v.rhs}};
    if (v.k >= 0) entry["k"] = v.k;
    violations.push_back(std::move(entry));
  }
  return Json{{"lemma", report.lemma},
              {"pass", report.pass},
              {"checked", report.checked},
              {"worst_ratio", report.worst_ratio},
              {"violations", std::move(violations)}};
}

Json to_json(const Reduction& reduction) {
  Json rows = Json::array();
  for (const RowRecord& r : reduction.records) {
    rows.push_back({{"index", r.index},
                    {"support", element_to_json(r.support)},
                    {"norm", r.norm},
                    {"coset_size", r.coset_size},
                    {"candidates_evaluated", r.candidates_evaluated}});
  }
  return Json{{"rank", reduction.basis.rank()}, {"basis", rows_to_json(reduction.basis.rows())}, {"rows", rows}};
}

}  // namespace boolnorm
