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

#include "boolnorm/boolnorm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "boolnorm/error.hpp"
#include "boolnorm/json_io.hpp"
#include "boolnorm/pipeline.hpp"
#include "boolnorm/reduction.hpp"

struct bn_norm {
  boolnorm::NormOracle oracle;
};

struct bn_basis {
  std::vector<boolnorm::Element> rows;
};

namespace {

thread_local std::string last_error;

bn_status to_status(boolnorm::ErrorCode code) {
  using boolnorm::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return BN_ERR_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return BN_ERR_PARSE;
    case ErrorCode::InvalidSpec: return BN_ERR_INVALID_SPEC;
    case ErrorCode::NotInSpan: return BN_ERR_NOT_IN_SPAN;
    case ErrorCode::DependentRows: return BN_ERR_DEPENDENT_ROWS;
    case ErrorCode::KExceedsRank: return BN_ERR_K_EXCEEDS_RANK;
    case ErrorCode::IndexOutOfRank: return BN_ERR_INDEX_OUT_OF_RANK;
    case ErrorCode::RankTooLarge: return BN_ERR_RANK_TOO_LARGE;
    case ErrorCode::SearchBoundExceeded: return BN_ERR_SEARCH_BOUND_EXCEEDED;
    case ErrorCode::UnusableSequence: return BN_ERR_UNUSABLE_SEQUENCE;
    case ErrorCode::SequenceTooShort: return BN_ERR_SEQUENCE_TOO_SHORT;
    case ErrorCode::InvalidIndex: return BN_ERR_INVALID_INDEX;
  }
  return BN_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes and the thread-local
// message.
template <typename Fn>
bn_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return BN_OK;
  } catch (const boolnorm::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BN_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return BN_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw boolnorm::Error(boolnorm::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

boolnorm::Element element_from(const uint32_t* support, size_t len) {
  if (len > 0) require(support, "support");
  std::vector<std::size_t> idx(support, support + len);
  return boolnorm::Element::from_indices(idx);
}

}  // namespace

extern "C" {

const char* bn_version(void) { return "1.0.0"; }

const char* bn_status_name(bn_status status) {
  switch (status) {
    case BN_OK: return "ok";
    case BN_ERR_INTERNAL: return "internal";
    default: break;
  }
  if (status >= BN_ERR_INVALID_ARGUMENT && status <= BN_ERR_INVALID_INDEX) {
    return boolnorm::error_code_name(static_cast<boolnorm::ErrorCode>(status - 1)).data();
  }
  return "unknown";
}

const char* bn_last_error(void) { return last_error.c_str(); }

void bn_string_free(char* s) { std::free(s); }

bn_status bn_norm_from_json(const char* spec_json, bn_norm** out) {
  return guarded([&] {
    require(spec_json, "spec_json");
    require(out, "out");
    *out = new bn_norm{boolnorm::norm_from_json(std::string_view(spec_json))};
  });
}

void bn_norm_free(bn_norm* norm) { delete norm; }

size_t bn_norm_rank(const bn_norm* norm) { return norm == nullptr ? 0 : norm->oracle.rank(); }

bn_status bn_norm_eval(const bn_norm* norm, const uint32_t* support, size_t len, double* out) {
  return guarded([&] {
    require(norm, "norm");
    require(out, "out");
    *out = norm->oracle(element_from(support, len));
  });
}

bn_status bn_norm_check_axioms(const bn_norm* norm, size_t rank, int* pass, char** report_json) {
  return guarded([&] {
    require(norm, "norm");
    require(pass, "pass");
    const auto report =
        boolnorm::check_norm_axioms(norm->oracle, rank == 0 ? std::nullopt : std::optional<std::size_t>(rank));
    if (report_json != nullptr) *report_json = copy_string(boolnorm::to_json(report).dump());
    *pass = report.pass ? 1 : 0;
  });
}

bn_status bn_basis_from_json(const char* rows_json, bn_basis** out) {
  return guarded([&] {
    require(rows_json, "rows_json");
    require(out, "out");
    auto rows = boolnorm::rows_from_json(boolnorm::parse_json(rows_json));
    if (rows.empty()) throw boolnorm::Error(boolnorm::ErrorCode::InvalidArgument, "basis has no rows");
    if (rows.size() > boolnorm::kMaxIndex) throw boolnorm::Error(boolnorm::ErrorCode::RankTooLarge, "too many rows");
    *out = new bn_basis{std::move(rows)};
  });
}

void bn_basis_free(bn_basis* basis) { delete basis; }

size_t bn_basis_rank(const bn_basis* basis) { return basis == nullptr ? 0 : basis->rows.size(); }

bn_status bn_basis_to_json(const bn_basis* basis, char** out) {
  return guarded([&] {
    require(basis, "basis");
    require(out, "out");
    *out = copy_string(boolnorm::rows_to_json(basis->rows).dump());
  });
}

bn_status bn_reduce(const bn_norm* norm, size_t rank, const bn_search_options* options, bn_basis** out,
                    char** stats_json) {
  return guarded([&] {
    require(norm, "norm");
    require(out, "out");
    boolnorm::SearchOptions opts = boolnorm::SearchOptions::from_environment();
    if (options != nullptr) {
      if (options->search_bound != 0) opts.search_bound = options->search_bound;
      opts.prune = options->prune != 0;
      opts.threads = options->threads;
    }
    const boolnorm::Reduction reduction = boolnorm::reduce_basis(norm->oracle, rank, opts);
    std::vector<boolnorm::Element> rows(reduction.basis.rows().begin(), reduction.basis.rows().end());
    std::string stats;
    if (stats_json != nullptr) stats = boolnorm::to_json(reduction).dump();
    *out = new bn_basis{std::move(rows)};
    if (stats_json != nullptr) *stats_json = copy_string(stats);
  });
}

bn_status bn_express(const bn_basis* basis, const uint32_t* support, size_t len, uint32_t* coords,
                     size_t* coords_len) {
  return guarded([&] {
    require(basis, "basis");
    require(coords, "coords");
    require(coords_len, "coords_len");
    const boolnorm::TriangularBasis tri(basis->rows);
    const boolnorm::Element c = boolnorm::express_in_basis(element_from(support, len), tri);
    std::size_t n = 0;
    boolnorm::for_each_index(c, [&](std::size_t i) { coords[n++] = static_cast<uint32_t>(i); });
    *coords_len = n;
  });
}

bn_status bn_verify(const bn_basis* basis, const bn_norm* norm, const char* checks, int* pass, char** report_json) {
  return guarded([&] {
    require(basis, "basis");
    require(norm, "norm");
    require(pass, "pass");
    const auto list = boolnorm::parse_checks(checks == nullptr ? "L0iii,L1,L2,L3,L4" : checks);
    const auto reports = boolnorm::run_checks(basis->rows, norm->oracle, list);
    const boolnorm::Json json = boolnorm::verify_report_json(reports, basis->rows.size());
    if (report_json != nullptr) *report_json = copy_string(json.dump());
    *pass = json["pass"].get<bool>() ? 1 : 0;
  });
}

bn_status bn_rebase(const bn_basis* basis, const bn_norm* norm, const char* sequence_json, uint64_t seed, int* ok,
                    char** report_json) {
  return guarded([&] {
    require(basis, "basis");
    require(norm, "norm");
    require(sequence_json, "sequence_json");
    require(ok, "ok");
    const auto raw = boolnorm::rows_from_json(boolnorm::parse_json(sequence_json));
    if (raw.empty()) throw boolnorm::Error(boolnorm::ErrorCode::UnusableSequence, "sequence is empty");
    const boolnorm::RebaseReport report = boolnorm::run_rebase(basis->rows, norm->oracle, raw, seed);
    if (report_json != nullptr) *report_json = copy_string(boolnorm::to_json(report).dump());
    *ok = report.ok() ? 1 : 0;
  });
}

bn_status bn_campaign(const bn_campaign_config* config, int* all_pass, char** csv, char** summary_json) {
  return guarded([&] {
    require(config, "config");
    require(all_pass, "all_pass");
    boolnorm::CampaignConfig c;
    c.rank = config->rank;
    if (config->norm_json != nullptr) {
      c.norm_json = config->norm_json;
    } else {
      c.family = boolnorm::parse_family(config->family == nullptr ? "closure" : config->family);
    }
    c.checks = boolnorm::parse_checks(config->checks == nullptr ? "all" : config->checks);
    c.trials = config->trials;
    c.seed = config->seed;
    c.threads = config->threads;
    const boolnorm::CampaignResult result = boolnorm::run_campaign(c);
    std::string csv_text = result.csv(c);
    std::string summary = result.summary(c).dump();
    if (csv != nullptr) *csv = copy_string(csv_text);
    if (summary_json != nullptr) *summary_json = copy_string(summary);
    *all_pass = result.all_pass() ? 1 : 0;
  });
}

}  // extern "C"
