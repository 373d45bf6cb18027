#include "coalition/domination.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "coalition/errors.hpp"

namespace coalition {

namespace {

std::uint64_t low_bits(int k) {
  return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
}

// Gosper's hack: next bitmask with the same popcount.
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return r | (((x ^ r) >> 2) / c);
}

void require_no_isolated(const Graph& g, const char* what) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v).empty()) {
      throw DomainError(std::string(what) + " undefined: vertex " + std::to_string(v) +
                        " is isolated, so no total dominating set exists");
    }
  }
}

bool satisfies(const Graph& g, DominationKind kind, VertexSet s) {
  return kind == DominationKind::dominating ? is_dominating(g, s) : is_total_dominating(g, s);
}

// Minimum-cardinality witness: cardinalities ascend, masks ascend within a
// cardinality, so the first hit is both minimum and canonical.
DominationCertificate find_minimum(const Graph& g, DominationKind kind) {
  const int n = g.order();
  const int start = kind == DominationKind::total_dominating ? 2 : 1;  // singletons never totally dominate
  for (int k = start; k <= n; ++k) {
    std::uint64_t mask = low_bits(k);
    const std::uint64_t last = low_bits(k) << (n - k);
    while (true) {
      if (satisfies(g, kind, VertexSet(mask))) {
        return {kind, VertexSet(mask), k, true};
      }
      if (mask == last) break;
      mask = next_combination(mask);
    }
  }
  throw InternalError("no dominating set found, which cannot happen: V always qualifies");
}

// Partitions V into exactly k parts that must each end up satisfying the
// predicate. Restricted-growth assignment over vertices; after every
// assignment each part (and the block of still-unopened parts) must remain
// satisfiable using the unassigned remainder, otherwise the branch dies.
class DomaticSearch {
 public:
  DomaticSearch(const Graph& g, DominationKind kind)
      : n_(g.order()), full_(g.vertices().bits()), kind_(kind) {
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
    // suffix reach/mask over vertices v..n-1
    suffix_mask_[static_cast<std::size_t>(n_)] = 0;
    suffix_reach_[static_cast<std::size_t>(n_)] = 0;
    for (int v = n_ - 1; v >= 0; --v) {
      suffix_mask_[static_cast<std::size_t>(v)] =
          suffix_mask_[static_cast<std::size_t>(v + 1)] | (std::uint64_t{1} << v);
      suffix_reach_[static_cast<std::size_t>(v)] =
          suffix_reach_[static_cast<std::size_t>(v + 1)] | adj_[static_cast<std::size_t>(v)];
    }
  }

  std::optional<std::vector<std::uint64_t>> find(int k) {
    k_ = k;
    std::fill_n(members_.begin(), static_cast<std::size_t>(k), std::uint64_t{0});
    std::fill_n(reach_.begin(), static_cast<std::size_t>(k), std::uint64_t{0});
    if (extend(0, 0)) {
      return std::vector<std::uint64_t>(members_.begin(), members_.begin() + k);
    }
    return std::nullopt;
  }

 private:
  bool all_satisfiable(int from, int opened) const {
    const std::uint64_t pool = suffix_mask_[static_cast<std::size_t>(from)];
    const std::uint64_t pool_reach = suffix_reach_[static_cast<std::size_t>(from)];
    for (int p = 0; p < opened; ++p) {
      std::uint64_t r = reach_[static_cast<std::size_t>(p)] | pool_reach;
      if (kind_ == DominationKind::dominating) r |= members_[static_cast<std::size_t>(p)] | pool;
      if (r != full_) return false;
    }
    if (opened < k_) {
      std::uint64_t r = pool_reach;
      if (kind_ == DominationKind::dominating) r |= pool;
      if (r != full_) return false;
    }
    return true;
  }

  bool extend(int v, int opened) {
    if (v == n_) return opened == k_;
    const int limit = std::min(opened, k_ - 1);
    for (int p = 0; p <= limit; ++p) {
      const int opened2 = opened + (p == opened ? 1 : 0);
      if (k_ - opened2 > n_ - v - 1) continue;  // not enough vertices left to open every part
      const std::uint64_t pm = members_[static_cast<std::size_t>(p)];
      const std::uint64_t pr = reach_[static_cast<std::size_t>(p)];
      members_[static_cast<std::size_t>(p)] = pm | (std::uint64_t{1} << v);
      reach_[static_cast<std::size_t>(p)] = pr | adj_[static_cast<std::size_t>(v)];
      if (all_satisfiable(v + 1, opened2) && extend(v + 1, opened2)) return true;
      members_[static_cast<std::size_t>(p)] = pm;
      reach_[static_cast<std::size_t>(p)] = pr;
    }
    return false;
  }

  int n_;
  std::uint64_t full_;
  DominationKind kind_;
  int k_ = 1;
  std::array<std::uint64_t, Graph::kMaxVertices> adj_{};
  std::array<std::uint64_t, Graph::kMaxVertices + 1> suffix_mask_{};
  std::array<std::uint64_t, Graph::kMaxVertices + 1> suffix_reach_{};
  std::array<std::uint64_t, Graph::kMaxVertices> members_{};
  std::array<std::uint64_t, Graph::kMaxVertices> reach_{};
};

DomaticCertificate find_maximum_partition(const Graph& g, DominationKind kind, int min_set_size) {
  // every part needs at least gamma (resp. gamma_t) vertices
  const int upper = std::max(1, g.order() / min_set_size);
  DomaticSearch search(g, kind);
  for (int k = upper; k >= 1; --k) {
    if (auto masks = search.find(k)) {
      std::vector<VertexSet> parts;
      parts.reserve(masks->size());
      for (std::uint64_t m : *masks) parts.emplace_back(m);
      return {kind, Partition::over(g, std::move(parts)), k};
    }
  }
  throw InternalError("domatic search found no partition, which cannot happen: V itself qualifies");
}

}  // namespace

bool is_dominating(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw DomainError("set reaches outside the graph's vertices");
  return (s | g.neighborhood_of(s)) == g.vertices();
}

bool is_total_dominating(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw DomainError("set reaches outside the graph's vertices");
  return g.neighborhood_of(s) == g.vertices();
}

bool is_minimal_total_dominating(const Graph& g, VertexSet s) {
  if (!is_total_dominating(g, s)) return false;
  for (int v : s) {
    VertexSet smaller = s;
    smaller.remove(v);
    if (is_total_dominating(g, smaller)) return false;
  }
  return true;
}

VertexSet shrink_to_minimal_tds(const Graph& g, VertexSet s) {
  if (!is_total_dominating(g, s)) {
    throw DomainError("shrink_to_minimal_tds needs a total dominating set to start from");
  }
  VertexSet current = s;
  bool removed = true;
  while (removed) {
    removed = false;
    const auto members = current.to_vector();
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      VertexSet candidate = current;
      candidate.remove(*it);
      if (is_total_dominating(g, candidate)) {
        current = candidate;
        removed = true;
        break;  // restart from the largest index of the shrunken set
      }
    }
  }
  return current;
}

DominationCertificate gamma(const Graph& g) {
  return find_minimum(g, DominationKind::dominating);
}

DominationCertificate gamma_t(const Graph& g) {
  require_no_isolated(g, "total domination number");
  return find_minimum(g, DominationKind::total_dominating);
}

DomaticCertificate domatic(const Graph& g) {
  return find_maximum_partition(g, DominationKind::dominating, gamma(g).value);
}

DomaticCertificate total_domatic(const Graph& g) {
  require_no_isolated(g, "total domatic number");
  return find_maximum_partition(g, DominationKind::total_dominating, gamma_t(g).value);
}

}  // namespace coalition
