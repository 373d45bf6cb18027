#include "coalition/bounds.hpp"

#include <algorithm>

#include "coalition/errors.hpp"

namespace coalition {

namespace {

// Is the complement a disjoint union of exactly two cliques? That is the
// structural signature of a complete bipartite graph.
bool complement_is_two_cliques(const Graph& comp, int* r, int* s) {
  const int n = comp.order();
  VertexSet remaining = comp.vertices();
  std::vector<VertexSet> components;
  while (!remaining.empty()) {
    const int seed = remaining.lowest();
    VertexSet comp_set = VertexSet::single(seed);
    VertexSet frontier = comp_set;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= comp.neighbors(v);
      frontier = next - comp_set;
      comp_set |= next;
    }
    components.push_back(comp_set);
    remaining = remaining - comp_set;
    if (components.size() > 2) return false;
  }
  if (components.size() != 2) return false;
  for (const VertexSet& c : components) {
    for (int v : c) {
      if ((comp.neighbors(v) | VertexSet::single(v)) != c) return false;  // not a clique
    }
  }
  *r = components[0].size();
  *s = components[1].size();
  if (*r > *s) std::swap(*r, *s);
  (void)n;
  return true;
}

}  // namespace

DetectedFamily detect_family(const Graph& g) {
  const int n = g.order();
  const DegreeProfile prof = degree_profile(g);

  if (prof.min_degree == n - 1) return {Family::complete, n, 0};

  if (n >= 3 && prof.min_degree == 2 && prof.max_degree == 2 && is_connected(g)) {
    return {Family::cycle, n, 0};
  }

  if (n >= 2 && is_connected(g)) {
    int ones = 0, twos = 0;
    for (int d : prof.degree) {
      if (d == 1) ++ones;
      else if (d == 2) ++twos;
    }
    if (ones == 2 && ones + twos == n) return {Family::path, n, 0};
  }

  int r = 0, s = 0;
  if (complement_is_two_cliques(g.complement(), &r, &s)) {
    return {Family::complete_bipartite, r, s};
  }
  return {};
}

std::string family_name(Family f) {
  switch (f) {
    case Family::none: return "none";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
  }
  return "none";
}

std::optional<int> closed_form_tc(const DetectedFamily& f) {
  switch (f.family) {
    case Family::path:
      return f.a >= 3 ? std::optional<int>(3) : std::nullopt;
    case Family::cycle:
      return f.a % 4 == 0 ? 4 : 3;
    case Family::complete:
      return f.a;
    case Family::complete_bipartite:
      return f.a + f.b;
    case Family::none:
      return std::nullopt;
  }
  return std::nullopt;
}

int BoundsReport::best_lower() const {
  int best = trivial_lower;
  best = std::max(best, two_dt);
  best = std::max(best, zelinka2);
  best = std::max(best, gamma_complement_lower);
  if (delta_plus_1) best = std::max(best, *delta_plus_1);
  return best;
}

BoundsReport bounds_report(const Graph& g, bool compute_exact, const SolveOptions& opts) {
  const DegreeProfile prof = degree_profile(g);
  if (prof.has_isolated()) {
    throw DomainError("bounds report undefined: graph has an isolated vertex");
  }

  const int n = g.order();
  const Graph comp = g.complement();

  BoundsReport r;
  r.n = n;
  r.min_degree = prof.min_degree;
  r.max_degree = prof.max_degree;
  r.gamma_complement = gamma(comp).value;
  // the complement has an isolated vertex exactly when g has a full vertex
  if (!prof.has_full()) r.gamma_t_complement = gamma_t(comp).value;
  r.total_domatic_order = total_domatic(g).order;

  r.two_dt = 2 * r.total_domatic_order;
  r.zelinka2 = 2 * (n / (n - prof.min_degree + 1));
  if (!prof.has_full()) r.delta_plus_1 = prof.min_degree + 1;
  r.gamma_complement_lower = r.gamma_complement;
  r.upper_bound = n;

  r.family = detect_family(g);
  r.closed_form = closed_form_tc(r.family);

  if (compute_exact) {
    const CoalitionCertificate tc = tc_number(g, opts);
    const CoalitionCertificate c = c_number(g, opts);
    r.exact_exhausted = tc.exhausted && c.exhausted;
    if (tc.exhausted) r.exact_tc = tc.value;
    if (c.exhausted) r.exact_c = c.value;
    if (r.exact_tc) {
      const int v = *r.exact_tc;
      if (v == r.trivial_lower) r.sharp.push_back("trivial");
      if (v == r.two_dt) r.sharp.push_back("two_dt");
      if (v == r.zelinka2) r.sharp.push_back("zelinka2");
      if (r.delta_plus_1 && v == *r.delta_plus_1) r.sharp.push_back("delta_plus_1");
      if (v == r.gamma_complement_lower) r.sharp.push_back("gamma_complement");
      if (v == r.upper_bound) r.sharp.push_back("upper_n");
    }
  }
  return r;
}

SumBound check_sum_bound(const Graph& g, const SolveOptions& opts) {
  const DegreeProfile prof = degree_profile(g);
  if (prof.has_isolated() || prof.has_full()) return SumBound::inapplicable;
  const Graph comp = g.complement();
  // no full vertex in g means no isolated vertex in the complement
  const int rhs = gamma(comp).value + gamma_t(comp).value;
  const CoalitionCertificate tc = tc_number(g, opts);
  const CoalitionCertificate c = c_number(g, opts);
  if (!tc.exhausted || !c.exhausted) return SumBound::inapplicable;
  return tc.value + c.value >= rhs ? SumBound::holds : SumBound::fails;
}

}  // namespace coalition
