#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coalition/coalition.hpp"

namespace coalition {

// Named theorem checks runnable over a corpus. Each one evaluates a claimed
// inequality or identity against the exact solvers.
enum class CheckId {
  cor_range,       // 2 <= TC <= n
  two_dt,          // TC >= 2*d_t; violations are flagged, not failed (see README)
  full_vertex,     // full vertex present  =>  TC = n
  lemma_families,  // detected paths/cycles match the closed-form TC
  thm26i,          // TC >= gamma(complement)
  thm26ii,         // no full vertex  =>  C >= gamma_t(complement)
  thm26iii,        // no full vertex  =>  TC + C >= gamma(complement) + gamma_t(complement)
  zelinka,         // d_t >= floor(n/(n-delta+1)) and TC >= twice that
  thm29,           // no full vertex  =>  TC >= delta + 1
  simplicial,      // no full vertex  =>  TC >= deg(v) + 1 for every simplicial v
  delta_cap,       // optimal witness: every part is in at most Delta+1 coalitions
};

const std::vector<CheckId>& all_checks();
std::string check_name(CheckId id);
std::optional<CheckId> check_from_name(std::string_view name);

// Every labeled graph on 1..n_max vertices (2^(n(n-1)/2) adjacency patterns
// per n). Capped at 7: beyond that the sweep explodes combinatorially.
struct ExhaustiveSource {
  int n_max = 5;
};

struct FileSource {
  std::filesystem::path path;  // graph6, one record per line
};

struct CampaignConfig {
  std::variant<ExhaustiveSource, FileSource> source;
  std::vector<CheckId> checks = all_checks();
  SolveOptions solve;  // per-graph budget
  int workers = 1;
  int max_counterexamples = 10;  // kept per check, in input order
};

struct Counterexample {
  std::string graph6;
  std::string detail;  // the offending values
};

struct CheckStats {
  std::uint64_t applicable = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t flagged = 0;  // tolerated violations (two_dt proof-gap findings)
  std::vector<Counterexample> counterexamples;
};

struct CampaignReport {
  std::uint64_t graphs = 0;
  std::uint64_t skipped_isolated = 0;  // ineligible for total-domination checks
  std::uint64_t budget_exhausted = 0;
  std::map<CheckId, CheckStats> checks;
  double seconds = 0.0;

  bool all_passed() const;  // no failed counts anywhere (flagged tolerated)
};

// Deterministic regardless of worker count: per-graph results are merged in
// input order, so identical configs give identical reports modulo timing.
CampaignReport run_campaign(const CampaignConfig& cfg);

enum class CheckOutcome { pass, fail, flagged, inapplicable };

// One check against one graph; `detail` receives the offending values on a
// non-pass. This is also how reported counterexamples are re-verified.
CheckOutcome run_check(const Graph& g, CheckId id, const SolveOptions& opts, std::string* detail = nullptr);

// Parallel map of the exact solver over a fixed list; results come back in
// input order whatever the worker count.
std::vector<CoalitionCertificate> solve_batch(const std::vector<Graph>& graphs, PartitionKind kind,
                                              const SolveOptions& opts, int workers);

}  // namespace coalition
