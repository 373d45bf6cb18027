#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coalition/domination.hpp"
#include "coalition/graph.hpp"
#include "coalition/partition.hpp"

namespace coalition {

enum class PartitionKind { c_partition, tc_partition };

// Two disjoint nonempty sets, neither dominating, whose union dominates.
// Throws DomainError on empty or overlapping inputs.
bool forms_coalition(const Graph& g, VertexSet a, VertexSet b);

// Same with the total-domination predicate.
bool forms_total_coalition(const Graph& g, VertexSet a, VertexSet b);

enum class PartStatus {
  singleton_dominating,          // c-partitions only
  non_dominating_with_partner,   // c-partitions
  non_tds_with_partner,          // tc-partitions
  invalid,
};

struct PartitionVerdict {
  struct PerPart {
    PartStatus status = PartStatus::invalid;
    std::vector<int> partners;  // indices of parts this one forms a coalition with
  };

  bool valid = false;
  PartitionKind kind = PartitionKind::tc_partition;
  std::vector<PerPart> per_part;
};

// tc kind: every part must be non-total-dominating with at least one total
// coalition partner. c kind: every part is either a singleton dominating set
// or a non-dominating set with at least one coalition partner. Partner lists
// are symmetric and complete.
PartitionVerdict validate_partition(const Graph& g, const Partition& p, PartitionKind kind);

struct SolveOptions {
  // Enumeration budget, counted in completed candidate partitions across the
  // whole solve. Exceeding it yields a flagged partial result.
  std::uint64_t max_completions = 100'000'000;
};

struct CoalitionCertificate {
  int value = 0;
  // First valid partition in restricted-growth order for the winning k;
  // absent only when the budget ran out before any valid partition was seen
  // and no constructive fallback applied.
  std::optional<Partition> witness;
  bool exhausted = true;  // false when the budget cut the search short
};

// Exact TC(G) / C(G). k descends from n (validity is not monotone in k, so
// every k is tried); partitions into exactly k unlabeled parts are enumerated
// as restricted-growth strings, so each one is seen once and the first valid
// hit is the canonical witness.
CoalitionCertificate tc_number(const Graph& g, const SolveOptions& opts = {});
CoalitionCertificate c_number(const Graph& g, const SolveOptions& opts = {});

// Builds a total coalition partition out of a maximum total domatic
// partition: shrink all parts but the last to minimal total dominating sets
// (surplus joins the last part), split each minimal set in two, then handle
// the last part's leftover, merging it into the final half when it has no
// partner of its own. The result is re-validated rather than trusted; an
// invalid outcome is reported through `verdict`, and `merged_leftover` says
// whether the last-resort merge was taken.
struct TotalDomaticBuild {
  Partition partition;
  PartitionVerdict verdict;
  bool merged_leftover = false;
  int total_domatic_order = 0;
};

TotalDomaticBuild build_tc_from_total_domatic(const Graph& g);

// One singleton part per neighbor of v plus a remainder part holding v and
// everything outside N[v]. v defaults to the lowest-index vertex of minimum
// degree; the caller validates when passing some other vertex. Requires a
// graph with no isolated and no full vertex.
Partition build_tc_from_min_degree_vertex(const Graph& g, std::optional<int> v = std::nullopt);

struct CoalitionGraph {
  Partition base;
  PartitionKind kind = PartitionKind::tc_partition;
  Graph derived;  // one vertex per part, edges between coalition partners
};

CoalitionGraph coalition_graph(const Graph& g, const Partition& p, PartitionKind kind);

// Maximum number of coalitions any single part participates in, i.e. the
// maximum degree of the derived graph.
int max_coalitions_per_part(const CoalitionGraph& cg);

}  // namespace coalition
