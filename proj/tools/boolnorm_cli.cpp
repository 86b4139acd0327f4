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

// boolnorm command-line front end. Talks to the library only through the
// C interface.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input or
// configuration error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "boolnorm/boolnorm.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr std::size_t kAxiomRankBound = 14;

struct InputError {
  std::string message;
};

struct NormDeleter {
  void operator()(bn_norm* n) const { bn_norm_free(n); }
};
struct BasisDeleter {
  void operator()(bn_basis* b) const { bn_basis_free(b); }
};
struct StringDeleter {
  void operator()(char* s) const { bn_string_free(s); }
};
using NormPtr = std::unique_ptr<bn_norm, NormDeleter>;
using BasisPtr = std::unique_ptr<bn_basis, BasisDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

void check(bn_status status, const std::string& what) {
  if (status != BN_OK) {
    throw InputError{what + ": " + bn_status_name(status) + " (" + bn_last_error() + ")"};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError{"cannot write " + path};
  out << text;
}

NormPtr load_norm(const std::string& path) {
  bn_norm* raw = nullptr;
  check(bn_norm_from_json(read_file(path).c_str(), &raw), "norm spec " + path);
  return NormPtr(raw);
}

std::size_t resolve_rank(const bn_norm* norm, std::size_t requested) {
  const std::size_t norm_rank = bn_norm_rank(norm);
  if (requested == 0) return norm_rank;
  if (requested > norm_rank) {
    throw InputError{"--rank " + std::to_string(requested) + " exceeds the norm's rank " + std::to_string(norm_rank)};
  }
  return requested;
}

// Axioms are checked exhaustively on the first min(rank, 14) generators.
void require_axioms(const bn_norm* norm, std::size_t rank, bool skip) {
  if (skip) return;
  int pass = 0;
  char* report = nullptr;
  check(bn_norm_check_axioms(norm, std::min(rank, kAxiomRankBound), &pass, &report), "axiom check");
  StringPtr owned(report);
  if (pass == 0) throw InputError{std::string("norm fails the norm axioms: ") + report};
}

struct Common {
  std::string norm_path;
  std::size_t rank = 0;
  std::string out;
  bool skip_axioms = false;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, Common& c, bool norm_required) {
  auto* norm = cmd->add_option("--norm", c.norm_path, "Norm spec JSON file");
  if (norm_required) norm->required();
  cmd->add_option("--rank", c.rank, "Truncation rank (default: the norm's rank)");
  cmd->add_option("--out", c.out, "Output file (default: stdout)");
  cmd->add_flag("--skip-axioms", c.skip_axioms, "Do not check the norm axioms first");
  cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1U, 256U));
}

BasisPtr reduced_basis(const bn_norm* norm, std::size_t rank, unsigned threads, bool prune, std::string* stats) {
  bn_search_options opts{0, prune ? 1 : 0, threads};
  bn_basis* basis = nullptr;
  char* json = nullptr;
  check(bn_reduce(norm, rank, &opts, &basis, stats != nullptr ? &json : nullptr), "reduce");
  StringPtr owned(json);
  if (stats != nullptr) *stats = json;
  return BasisPtr(basis);
}

BasisPtr load_or_reduce(const std::string& basis_path, const bn_norm* norm, std::size_t rank, unsigned threads) {
  if (basis_path.empty()) return reduced_basis(norm, rank, threads, false, nullptr);
  bn_basis* basis = nullptr;
  check(bn_basis_from_json(read_file(basis_path).c_str(), &basis), "basis " + basis_path);
  BasisPtr owned(basis);
  if (bn_basis_rank(basis) > bn_norm_rank(norm)) throw InputError{"basis rank exceeds the norm's rank"};
  return owned;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy norm-minimizing bases of finite Boolean groups: reduce, verify, rebase, campaign"};
  app.require_subcommand(1);

  Common reduce_opts;
  bool prune = false;
  auto* reduce = app.add_subcommand("reduce", "Build the greedy reduced basis and print it as JSON");
  add_common(reduce, reduce_opts, true);
  reduce->add_flag("--prune", prune, "Use triangle-inequality pruning in coset searches");

  Common verify_opts;
  std::string verify_basis;
  std::string verify_checks = "L0iii,L1,L2,L3,L4";
  auto* verify = app.add_subcommand("verify", "Check the basis inequalities on a reduced (or given) basis");
  add_common(verify, verify_opts, true);
  verify->add_option("--basis", verify_basis, "Basis JSON file overriding the reduced basis");
  verify->add_option("--checks", verify_checks, "Comma-separated checks: L0iii,L1,L2,L3,L4 or all");

  Common rebase_opts;
  std::string rebase_basis;
  std::string seq_path;
  std::uint64_t rebase_seed = 0;
  auto* rebase = app.add_subcommand("rebase", "Rebase a reduced basis along an approach sequence");
  add_common(rebase, rebase_opts, true);
  rebase->add_option("--basis", rebase_basis, "Basis JSON file overriding the reduced basis");
  rebase->add_option("--seq", seq_path, "Sequence JSON file (reduced coordinates)")->required();
  rebase->add_option("--seed", rebase_seed, "Seed for sampled witness checks");

  Common campaign_opts;
  std::string family = "closure";
  std::string campaign_checks = "all";
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  auto* campaign = app.add_subcommand("campaign", "Run seeded random trials and emit a CSV summary");
  add_common(campaign, campaign_opts, false);
  campaign->add_option("--family", family, "Random norm family: weighted, graev, closure");
  campaign->add_option("--checks", campaign_checks, "Comma-separated checks: L0iii,L1,L2,L3,L4,rebase or all");
  campaign->add_option("--trials", trials, "Number of trials");
  campaign->add_option("--seed", seed, "Campaign seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*reduce) {
      const NormPtr norm = load_norm(reduce_opts.norm_path);
      const std::size_t rank = resolve_rank(norm.get(), reduce_opts.rank);
      require_axioms(norm.get(), rank, reduce_opts.skip_axioms);
      std::string stats;
      reduced_basis(norm.get(), rank, reduce_opts.threads, prune, &stats);
      write_output(reduce_opts.out, stats + "\n");
      return kExitPass;
    }

    if (*verify) {
      const NormPtr norm = load_norm(verify_opts.norm_path);
      const std::size_t rank = resolve_rank(norm.get(), verify_opts.rank);
      require_axioms(norm.get(), rank, verify_opts.skip_axioms);
      const BasisPtr basis = load_or_reduce(verify_basis, norm.get(), rank, verify_opts.threads);
      int pass = 0;
      char* report = nullptr;
      check(bn_verify(basis.get(), norm.get(), verify_checks.c_str(), &pass, &report), "verify");
      StringPtr owned(report);
      write_output(verify_opts.out, std::string(report) + "\n");
      return pass != 0 ? kExitPass : kExitCheckFailed;
    }

    if (*rebase) {
      const NormPtr norm = load_norm(rebase_opts.norm_path);
      const std::size_t rank = resolve_rank(norm.get(), rebase_opts.rank);
      require_axioms(norm.get(), rank, rebase_opts.skip_axioms);
      const BasisPtr basis = load_or_reduce(rebase_basis, norm.get(), rank, rebase_opts.threads);
      int ok = 0;
      char* report = nullptr;
      check(bn_rebase(basis.get(), norm.get(), read_file(seq_path).c_str(), rebase_seed, &ok, &report), "rebase");
      StringPtr owned(report);
      write_output(rebase_opts.out, std::string(report) + "\n");
      return ok != 0 ? kExitPass : kExitCheckFailed;
    }

    if (*campaign) {
      std::string norm_text;
      if (!campaign_opts.norm_path.empty()) norm_text = read_file(campaign_opts.norm_path);
      if (campaign_opts.rank == 0 && norm_text.empty()) campaign_opts.rank = 8;
      if (campaign_opts.rank == 0) {
        const NormPtr norm = load_norm(campaign_opts.norm_path);
        campaign_opts.rank = bn_norm_rank(norm.get());
      }
      bn_campaign_config config{};
      config.rank = static_cast<uint32_t>(campaign_opts.rank);
      config.family = family.c_str();
      config.norm_json = norm_text.empty() ? nullptr : norm_text.c_str();
      config.checks = campaign_checks.c_str();
      config.trials = trials;
      config.seed = seed;
      config.threads = campaign_opts.threads;
      int all_pass = 0;
      char* csv = nullptr;
      char* summary = nullptr;
      check(bn_campaign(&config, &all_pass, &csv, &summary), "campaign");
      StringPtr owned_csv(csv);
      StringPtr owned_summary(summary);
      write_output(campaign_opts.out, csv);
      (campaign_opts.out.empty() ? std::cerr : std::cout) << summary << "\n";
      return all_pass != 0 ? kExitPass : kExitCheckFailed;
    }
  } catch (const InputError& e) {
    std::cerr << "boolnorm: " << e.message << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "boolnorm: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
