#include "coalition/coalition.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "coalition/errors.hpp"
#include "coalition/graph6.hpp"

namespace coalition {

namespace {

void require_disjoint_nonempty(VertexSet a, VertexSet b) {
  if (a.empty() || b.empty()) throw DomainError("coalition members must be nonempty");
  if (a.intersects(b)) throw DomainError("coalition members must be disjoint");
}

// Partition search into exactly k unlabeled parts, enumerated as
// restricted-growth strings: vertex v may join parts 0..opened, where
// joining part `opened` opens it. Each unlabeled partition appears exactly
// once and part p's smallest member grows with p, so the first valid
// partition is already in canonical order.
//
// Pruning is the predicate's monotonicity: a tc part that ever becomes total
// dominating stays so under growth, and a c part that dominates with two or
// more members can never become legal again. Partner existence is only
// decidable on complete partitions (unions keep changing while parts grow),
// so it is checked there and nowhere else.
class CoalitionSearch {
 public:
  CoalitionSearch(const Graph& g, PartitionKind kind, std::uint64_t budget)
      : n_(g.order()), full_(g.vertices().bits()), kind_(kind), budget_(budget) {
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
  }

  struct Result {
    std::optional<std::vector<std::uint64_t>> parts;
    bool aborted = false;
  };

  Result find(int k) {
    k_ = k;
    std::fill_n(members_.begin(), static_cast<std::size_t>(k), std::uint64_t{0});
    std::fill_n(reach_.begin(), static_cast<std::size_t>(k), std::uint64_t{0});
    switch (extend(0, 0)) {
      case Step::found:
        return {std::vector<std::uint64_t>(members_.begin(), members_.begin() + k), false};
      case Step::abort:
        return {std::nullopt, true};
      case Step::none:
        return {std::nullopt, false};
    }
    return {std::nullopt, false};
  }

  std::uint64_t completions() const { return completions_; }

 private:
  enum class Step { found, none, abort };

  Step extend(int v, int opened) {
    if (v == n_) {
      if (completions_ >= budget_) return Step::abort;
      ++completions_;
      return complete_valid() ? Step::found : Step::none;
    }
    const int limit = std::min(opened, k_ - 1);
    for (int p = 0; p <= limit; ++p) {
      const int opened2 = opened + (p == opened ? 1 : 0);
      if (k_ - opened2 > n_ - v - 1) continue;
      const std::uint64_t pm = members_[static_cast<std::size_t>(p)];
      const std::uint64_t pr = reach_[static_cast<std::size_t>(p)];
      const std::uint64_t nm = pm | (std::uint64_t{1} << v);
      const std::uint64_t nr = pr | adj_[static_cast<std::size_t>(v)];
      if (kind_ == PartitionKind::tc_partition) {
        if (nr == full_) continue;  // part became total dominating
      } else {
        if ((nm | nr) == full_ && std::popcount(nm) >= 2) continue;  // dominating non-singleton
      }
      members_[static_cast<std::size_t>(p)] = nm;
      reach_[static_cast<std::size_t>(p)] = nr;
      const Step s = extend(v + 1, opened2);
      if (s != Step::none) return s;  // on found, members_ holds the witness
      members_[static_cast<std::size_t>(p)] = pm;
      reach_[static_cast<std::size_t>(p)] = pr;
    }
    return Step::none;
  }

  bool complete_valid() const {
    if (kind_ == PartitionKind::tc_partition) {
      // all parts are non-total-dominating by construction; each needs a
      // partner whose joint neighborhood covers everything
      for (int i = 0; i < k_; ++i) {
        bool partnered = false;
        for (int j = 0; j < k_ && !partnered; ++j) {
          partnered = j != i && (reach_[static_cast<std::size_t>(i)] |
                                 reach_[static_cast<std::size_t>(j)]) == full_;
        }
        if (!partnered) return false;
      }
      return true;
    }
    // c: dominating parts are singletons by construction and stand alone;
    // the rest need a non-dominating partner with a dominating union
    for (int i = 0; i < k_; ++i) {
      const std::uint64_t di =
          members_[static_cast<std::size_t>(i)] | reach_[static_cast<std::size_t>(i)];
      if (di == full_) continue;
      bool partnered = false;
      for (int j = 0; j < k_ && !partnered; ++j) {
        if (j == i) continue;
        const std::uint64_t dj =
            members_[static_cast<std::size_t>(j)] | reach_[static_cast<std::size_t>(j)];
        partnered = dj != full_ && (di | dj) == full_;
      }
      if (!partnered) return false;
    }
    return true;
  }

  int n_;
  std::uint64_t full_;
  PartitionKind kind_;
  std::uint64_t budget_;
  std::uint64_t completions_ = 0;
  int k_ = 1;
  std::array<std::uint64_t, Graph::kMaxVertices> adj_{};
  std::array<std::uint64_t, Graph::kMaxVertices> members_{};
  std::array<std::uint64_t, Graph::kMaxVertices> reach_{};
};

Partition masks_to_partition(const Graph& g, const std::vector<std::uint64_t>& masks) {
  std::vector<VertexSet> parts;
  parts.reserve(masks.size());
  for (std::uint64_t m : masks) parts.emplace_back(m);
  return Partition::over(g, std::move(parts));
}

// Best validated constructive partition, for budget-exhausted solves.
CoalitionCertificate constructive_fallback(const Graph& g) {
  CoalitionCertificate out;
  out.exhausted = false;
  const auto consider = [&](const Partition& p) {
    if (p.order() > out.value && validate_partition(g, p, PartitionKind::tc_partition).valid) {
      out.value = p.order();
      out.witness = p;
    }
  };
  consider(build_tc_from_total_domatic(g).partition);
  if (!degree_profile(g).has_full()) consider(build_tc_from_min_degree_vertex(g));
  return out;
}

// First (A, M \ A) over nonempty proper subsets A of M, ascending by the
// expanded bitmask, that forms a total coalition. Any 2-split of a minimal
// total dominating set qualifies mathematically; this verifies instead of
// assuming.
std::pair<VertexSet, VertexSet> split_total_coalition(const Graph& g, VertexSet m) {
  const std::vector<int> pos = m.to_vector();
  const int p = static_cast<int>(pos.size());
  if (p >= 2 && p <= 63) {
    // the very first candidate (lowest vertex alone) works whenever m is a
    // minimal total dominating set, so this loop all but never iterates
    for (std::uint64_t idx = 1; idx + 1 < (std::uint64_t{1} << p); ++idx) {
      VertexSet a;
      for (int b = 0; b < p; ++b) {
        if ((idx >> b) & 1) a.add(pos[static_cast<std::size_t>(b)]);
      }
      const VertexSet rest = m - a;
      if (forms_total_coalition(g, a, rest)) return {a, rest};
    }
  }
  throw InternalError("no 2-split of " + m.to_string() +
                      " forms a total coalition (graph6 " + encode_graph6(g) + ")");
}

}  // namespace

bool forms_coalition(const Graph& g, VertexSet a, VertexSet b) {
  require_disjoint_nonempty(a, b);
  return !is_dominating(g, a) && !is_dominating(g, b) && is_dominating(g, a | b);
}

bool forms_total_coalition(const Graph& g, VertexSet a, VertexSet b) {
  require_disjoint_nonempty(a, b);
  return !is_total_dominating(g, a) && !is_total_dominating(g, b) &&
         is_total_dominating(g, a | b);
}

PartitionVerdict validate_partition(const Graph& g, const Partition& p, PartitionKind kind) {
  const int k = p.order();
  const std::uint64_t full = g.vertices().bits();

  std::vector<std::uint64_t> reach(static_cast<std::size_t>(k));
  std::vector<std::uint64_t> dominated(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    reach[static_cast<std::size_t>(i)] = g.neighborhood_of(p.part(i)).bits();
    dominated[static_cast<std::size_t>(i)] =
        reach[static_cast<std::size_t>(i)] | p.part(i).bits();
  }

  PartitionVerdict verdict;
  verdict.kind = kind;
  verdict.per_part.resize(static_cast<std::size_t>(k));
  verdict.valid = true;

  for (int i = 0; i < k; ++i) {
    auto& entry = verdict.per_part[static_cast<std::size_t>(i)];
    if (kind == PartitionKind::tc_partition) {
      const bool tds_i = reach[static_cast<std::size_t>(i)] == full;
      if (!tds_i) {
        for (int j = 0; j < k; ++j) {
          if (j == i) continue;
          const bool tds_j = reach[static_cast<std::size_t>(j)] == full;
          if (!tds_j && (reach[static_cast<std::size_t>(i)] |
                         reach[static_cast<std::size_t>(j)]) == full) {
            entry.partners.push_back(j);
          }
        }
      }
      entry.status = (!tds_i && !entry.partners.empty()) ? PartStatus::non_tds_with_partner
                                                         : PartStatus::invalid;
    } else {
      const bool dom_i = dominated[static_cast<std::size_t>(i)] == full;
      if (dom_i && p.part(i).size() == 1) {
        entry.status = PartStatus::singleton_dominating;
      } else if (!dom_i) {
        for (int j = 0; j < k; ++j) {
          if (j == i) continue;
          const bool dom_j = dominated[static_cast<std::size_t>(j)] == full;
          if (!dom_j && (dominated[static_cast<std::size_t>(i)] |
                         dominated[static_cast<std::size_t>(j)]) == full) {
            entry.partners.push_back(j);
          }
        }
        entry.status = entry.partners.empty() ? PartStatus::invalid
                                              : PartStatus::non_dominating_with_partner;
      } else {
        entry.status = PartStatus::invalid;  // dominating but not a singleton
      }
    }
    if (entry.status == PartStatus::invalid) verdict.valid = false;
  }
  return verdict;
}

CoalitionCertificate tc_number(const Graph& g, const SolveOptions& opts) {
  const DegreeProfile prof = degree_profile(g);
  if (prof.has_isolated()) {
    throw DomainError("total coalition number undefined: graph has an isolated vertex");
  }

  // A full vertex makes every singleton pair up with it, so the all-singleton
  // partition is valid and the maximum n is reached without search. Validated
  // rather than assumed.
  if (prof.has_full()) {
    Partition singles = Partition::singletons(g);
    if (validate_partition(g, singles, PartitionKind::tc_partition).valid) {
      return {g.order(), std::move(singles), true};
    }
    throw InternalError("all-singleton partition invalid despite a full vertex (graph6 " +
                        encode_graph6(g) + ")");
  }

  CoalitionSearch search(g, PartitionKind::tc_partition, opts.max_completions);
  for (int k = g.order(); k >= 2; --k) {
    const auto r = search.find(k);
    if (r.parts) return {k, masks_to_partition(g, *r.parts), true};
    if (r.aborted) return constructive_fallback(g);
  }
  throw InternalError("no total coalition partition of any order found (graph6 " +
                      encode_graph6(g) + ")");
}

CoalitionCertificate c_number(const Graph& g, const SolveOptions& opts) {
  CoalitionSearch search(g, PartitionKind::c_partition, opts.max_completions);
  for (int k = g.order(); k >= 1; --k) {
    const auto r = search.find(k);
    if (r.parts) return {k, masks_to_partition(g, *r.parts), true};
    if (r.aborted) return {0, std::nullopt, false};
  }
  throw InternalError("no coalition partition of any order found (graph6 " + encode_graph6(g) +
                      ")");
}

TotalDomaticBuild build_tc_from_total_domatic(const Graph& g) {
  const DomaticCertificate cert = total_domatic(g);  // rejects isolated vertices
  const int k = cert.order;
  std::vector<VertexSet> parts = cert.parts.parts();

  // make all parts but the last minimal; surplus vertices pile onto the last
  for (int i = 0; i + 1 < k; ++i) {
    const VertexSet minimal = shrink_to_minimal_tds(g, parts[static_cast<std::size_t>(i)]);
    parts[static_cast<std::size_t>(k - 1)] |= parts[static_cast<std::size_t>(i)] - minimal;
    parts[static_cast<std::size_t>(i)] = minimal;
  }

  std::vector<VertexSet> result;
  result.reserve(static_cast<std::size_t>(2 * k + 1));
  for (int i = 0; i + 1 < k; ++i) {
    const auto [a, b] = split_total_coalition(g, parts[static_cast<std::size_t>(i)]);
    result.push_back(a);
    result.push_back(b);
  }

  const VertexSet last = parts[static_cast<std::size_t>(k - 1)];
  bool merged = false;
  if (is_minimal_total_dominating(g, last)) {
    const auto [a, b] = split_total_coalition(g, last);
    result.push_back(a);
    result.push_back(b);
  } else {
    const VertexSet minimal = shrink_to_minimal_tds(g, last);
    const VertexSet leftover = last - minimal;  // nonempty: last was not minimal
    const auto [a, b] = split_total_coalition(g, minimal);
    result.push_back(a);
    result.push_back(b);

    // a total dominating leftover would extend the maximum total domatic partition
    if (is_total_dominating(g, leftover)) {
      throw InternalError("leftover " + leftover.to_string() +
                          " is total dominating beside a maximum total domatic partition (graph6 " +
                          encode_graph6(g) + ")");
    }
    bool partnered = false;
    for (const VertexSet& x : result) {
      if (forms_total_coalition(g, leftover, x)) {
        partnered = true;
        break;
      }
    }
    if (partnered) {
      result.push_back(leftover);
    } else {
      result.back() = b | leftover;  // fold the leftover into the last-created half
      merged = true;
    }
  }

  Partition partition = Partition::over(g, std::move(result));
  PartitionVerdict verdict = validate_partition(g, partition, PartitionKind::tc_partition);
  return {std::move(partition), std::move(verdict), merged, k};
}

Partition build_tc_from_min_degree_vertex(const Graph& g, std::optional<int> v) {
  const DegreeProfile prof = degree_profile(g);
  if (prof.has_isolated()) throw DomainError("construction needs a graph with no isolated vertex");
  if (prof.has_full()) {
    throw DomainError("construction needs a graph with no full vertex (the remainder part would be empty)");
  }

  int pivot;
  if (v.has_value()) {
    if (*v < 0 || *v >= g.order()) throw DomainError("pivot vertex out of range");
    pivot = *v;
  } else {
    pivot = 0;
    while (prof.degree[static_cast<std::size_t>(pivot)] != prof.min_degree) ++pivot;
  }

  std::vector<VertexSet> parts;
  for (int u : g.neighbors(pivot)) parts.push_back(VertexSet::single(u));
  parts.push_back((g.vertices() - g.closed_neighborhood(pivot)) | VertexSet::single(pivot));
  return Partition::over(g, std::move(parts));
}

CoalitionGraph coalition_graph(const Graph& g, const Partition& p, PartitionKind kind) {
  const int k = p.order();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const bool paired = kind == PartitionKind::tc_partition
                              ? forms_total_coalition(g, p.part(i), p.part(j))
                              : forms_coalition(g, p.part(i), p.part(j));
      if (paired) edges.emplace_back(i, j);
    }
  }
  return {p, kind, Graph::from_edge_list(k, edges)};
}

int max_coalitions_per_part(const CoalitionGraph& cg) {
  return degree_profile(cg.derived).max_degree;
}

}  // namespace coalition
