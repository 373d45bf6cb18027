#pragma once

#include "coalition/graph.hpp"
#include "coalition/partition.hpp"

namespace coalition {

// Every vertex outside S has a neighbor in S.
bool is_dominating(const Graph& g, VertexSet s);

// Every vertex of the graph, members of S included, has a neighbor in S.
// Equivalently N(S) = V. No singleton ever qualifies.
bool is_total_dominating(const Graph& g, VertexSet s);

// S is total dominating and no one-vertex removal keeps it so.
bool is_minimal_total_dominating(const Graph& g, VertexSet s);

// Greedy removal, restarting after every successful removal and trying the
// largest index first so the survivors keep the smallest labels. Input must
// be total dominating; the result is a minimal total dominating subset.
VertexSet shrink_to_minimal_tds(const Graph& g, VertexSet s);

enum class DominationKind { dominating, total_dominating };

struct DominationCertificate {
  DominationKind kind;
  VertexSet set;
  int value = 0;
  bool minimum = false;  // established by exhausting all smaller cardinalities
};

// Exact domination / total domination numbers. Subsets are enumerated by
// cardinality, smallest first, so the first hit is a minimum and the witness
// is the numerically smallest such set.
DominationCertificate gamma(const Graph& g);
DominationCertificate gamma_t(const Graph& g);  // throws DomainError on an isolated vertex

struct DomaticCertificate {
  DominationKind kind;
  Partition parts;
  int order = 0;
};

// Exact domatic / total domatic numbers: maximum-order partition of V into
// parts that each satisfy the predicate. Searches k downward from n/gamma
// (resp. n/gamma_t) with per-part completability pruning.
DomaticCertificate domatic(const Graph& g);
DomaticCertificate total_domatic(const Graph& g);  // throws DomainError on an isolated vertex

}  // namespace coalition
