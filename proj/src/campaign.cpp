#include "coalition/campaign.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "coalition/bounds.hpp"
#include "coalition/errors.hpp"
#include "coalition/graph6.hpp"

namespace coalition {

namespace {

struct CheckEntry {
  CheckId id;
  const char* name;
};

constexpr CheckEntry kCheckTable[] = {
    {CheckId::cor_range, "cor_range"},
    {CheckId::two_dt, "two_dt"},
    {CheckId::full_vertex, "full_vertex"},
    {CheckId::lemma_families, "lemma_families"},
    {CheckId::thm26i, "thm26i"},
    {CheckId::thm26ii, "thm26ii"},
    {CheckId::thm26iii, "thm26iii"},
    {CheckId::zelinka, "zelinka"},
    {CheckId::thm29, "thm29"},
    {CheckId::simplicial, "simplicial"},
    {CheckId::delta_cap, "delta_cap"},
};

// Everything the checks consume about one graph, computed once.
struct Analysis {
  Analysis(const Graph& graph, DegreeProfile profile) : g(graph), prof(std::move(profile)) {}

  const Graph& g;
  DegreeProfile prof;
  bool isolated = false;
  bool budget_hit = false;

  std::optional<CoalitionCertificate> tc;
  std::optional<CoalitionCertificate> c;
  std::optional<int> dt;
  std::optional<int> gamma_comp;
  std::optional<int> gamma_t_comp;
};

bool needs_tc(CheckId id) {
  switch (id) {
    case CheckId::cor_range:
    case CheckId::two_dt:
    case CheckId::full_vertex:
    case CheckId::lemma_families:
    case CheckId::thm26i:
    case CheckId::thm26iii:
    case CheckId::zelinka:
    case CheckId::thm29:
    case CheckId::simplicial:
    case CheckId::delta_cap:
      return true;
    default:
      return false;
  }
}

bool needs_c(CheckId id) { return id == CheckId::thm26ii || id == CheckId::thm26iii; }

Analysis analyze(const Graph& g, const std::vector<CheckId>& checks, const SolveOptions& opts) {
  Analysis a(g, degree_profile(g));
  a.isolated = a.prof.has_isolated();

  bool want_tc = false, want_c = false, want_dt = false, want_gc = false, want_gtc = false;
  for (CheckId id : checks) {
    want_tc |= needs_tc(id) && !a.isolated;
    want_c |= needs_c(id);
    want_dt |= (id == CheckId::two_dt || id == CheckId::zelinka) && !a.isolated;
    want_gc |= (id == CheckId::thm26i || id == CheckId::thm26iii) && !a.isolated;
    want_gtc |= (id == CheckId::thm26ii || id == CheckId::thm26iii) && !a.prof.has_full();
  }

  if (want_tc) {
    a.tc = tc_number(g, opts);
    if (!a.tc->exhausted) a.budget_hit = true;
  }
  if (want_c) {
    a.c = c_number(g, opts);
    if (!a.c->exhausted) a.budget_hit = true;
  }
  if (want_dt) a.dt = total_domatic(g).order;
  if (want_gc) a.gamma_comp = gamma(g.complement()).value;
  if (want_gtc) a.gamma_t_comp = gamma_t(g.complement()).value;
  return a;
}

// `detail` receives the offending values on fail/flagged.
CheckOutcome evaluate(const Analysis& a, CheckId id, std::string* detail) {
  const int n = a.g.order();
  const auto fail = [&](const std::string& msg) {
    if (detail) *detail = msg;
    return CheckOutcome::fail;
  };

  const bool tc_ready = a.tc && a.tc->exhausted;
  const bool c_ready = a.c && a.c->exhausted;

  if (needs_tc(id) && (a.isolated || !tc_ready)) return CheckOutcome::inapplicable;
  if (needs_c(id) && !c_ready) return CheckOutcome::inapplicable;

  switch (id) {
    case CheckId::cor_range: {
      const int tc = a.tc->value;
      if (tc < 2 || tc > n) return fail("TC=" + std::to_string(tc) + " outside [2," + std::to_string(n) + "]");
      return CheckOutcome::pass;
    }
    case CheckId::two_dt: {
      const int tc = a.tc->value;
      if (tc >= 2 * *a.dt) return CheckOutcome::pass;
      if (detail) *detail = "TC=" + std::to_string(tc) + " < 2*d_t=" + std::to_string(2 * *a.dt);
      return CheckOutcome::flagged;  // tolerated proof-gap finding, reported not failed
    }
    case CheckId::full_vertex: {
      if (!a.prof.has_full()) return CheckOutcome::inapplicable;
      if (a.tc->value == n) return CheckOutcome::pass;
      return fail("full vertex but TC=" + std::to_string(a.tc->value) + " != n=" + std::to_string(n));
    }
    case CheckId::lemma_families: {
      const DetectedFamily fam = detect_family(a.g);
      if (fam.family != Family::path && fam.family != Family::cycle) return CheckOutcome::inapplicable;
      const std::optional<int> expect = closed_form_tc(fam);
      if (!expect) return CheckOutcome::inapplicable;
      if (a.tc->value == *expect) return CheckOutcome::pass;
      return fail(family_name(fam.family) + " n=" + std::to_string(fam.a) + ": TC=" +
                  std::to_string(a.tc->value) + " != closed form " + std::to_string(*expect));
    }
    case CheckId::thm26i: {
      if (a.tc->value >= *a.gamma_comp) return CheckOutcome::pass;
      return fail("TC=" + std::to_string(a.tc->value) +
                  " < gamma(complement)=" + std::to_string(*a.gamma_comp));
    }
    case CheckId::thm26ii: {
      if (a.prof.has_full()) return CheckOutcome::inapplicable;
      if (a.c->value >= *a.gamma_t_comp) return CheckOutcome::pass;
      return fail("C=" + std::to_string(a.c->value) +
                  " < gamma_t(complement)=" + std::to_string(*a.gamma_t_comp));
    }
    case CheckId::thm26iii: {
      if (a.isolated || a.prof.has_full()) return CheckOutcome::inapplicable;
      const int lhs = a.tc->value + a.c->value;
      const int rhs = *a.gamma_comp + *a.gamma_t_comp;
      if (lhs >= rhs) return CheckOutcome::pass;
      return fail("TC+C=" + std::to_string(lhs) + " < gamma+gamma_t of complement=" + std::to_string(rhs));
    }
    case CheckId::zelinka: {
      const int bound = n / (n - a.prof.min_degree + 1);
      if (*a.dt < bound) {
        return fail("d_t=" + std::to_string(*a.dt) + " < floor(n/(n-delta+1))=" + std::to_string(bound));
      }
      if (a.tc->value < 2 * bound) {
        return fail("TC=" + std::to_string(a.tc->value) + " < 2*floor(n/(n-delta+1))=" +
                    std::to_string(2 * bound));
      }
      return CheckOutcome::pass;
    }
    case CheckId::thm29: {
      if (a.prof.has_full()) return CheckOutcome::inapplicable;
      if (a.tc->value >= a.prof.min_degree + 1) return CheckOutcome::pass;
      return fail("TC=" + std::to_string(a.tc->value) + " < delta+1=" +
                  std::to_string(a.prof.min_degree + 1));
    }
    case CheckId::simplicial: {
      if (a.prof.has_full() || a.prof.simplicial.empty()) return CheckOutcome::inapplicable;
      for (int v : a.prof.simplicial) {
        const int want = a.prof.degree[static_cast<std::size_t>(v)] + 1;
        if (a.tc->value < want) {
          return fail("TC=" + std::to_string(a.tc->value) + " < deg(v)+1=" + std::to_string(want) +
                      " for simplicial vertex " + std::to_string(v));
        }
      }
      return CheckOutcome::pass;
    }
    case CheckId::delta_cap: {
      const CoalitionGraph cg = coalition_graph(a.g, *a.tc->witness, PartitionKind::tc_partition);
      const int most = max_coalitions_per_part(cg);
      if (most <= a.prof.max_degree + 1) return CheckOutcome::pass;
      return fail("a part of the optimal witness is in " + std::to_string(most) +
                  " coalitions > Delta+1=" + std::to_string(a.prof.max_degree + 1));
    }
  }
  return CheckOutcome::inapplicable;
}

struct GraphResult {
  std::string graph6;
  bool skipped_isolated = false;
  bool budget_hit = false;
  std::vector<std::pair<CheckId, CheckOutcome>> outcomes;
  std::vector<std::pair<CheckId, std::string>> details;
  std::string error;  // unexpected solver error, reported against every requested check
};

GraphResult evaluate_graph(const Graph& g, const std::vector<CheckId>& checks,
                           const SolveOptions& opts) {
  GraphResult out;
  out.graph6 = encode_graph6(g);
  try {
    const Analysis a = analyze(g, checks, opts);
    out.skipped_isolated = a.isolated;
    out.budget_hit = a.budget_hit;
    for (CheckId id : checks) {
      std::string detail;
      const CheckOutcome o = evaluate(a, id, &detail);
      out.outcomes.emplace_back(id, o);
      if (!detail.empty()) out.details.emplace_back(id, detail);
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

// All labeled graphs on 1..n_max vertices, as (n, triangle bits) seeds.
std::vector<std::pair<int, std::uint64_t>> exhaustive_seeds(int n_max) {
  if (n_max < 1 || n_max > 7) {
    throw DomainError("exhaustive sweeps support 1..7 vertices, got " + std::to_string(n_max));
  }
  std::vector<std::pair<int, std::uint64_t>> seeds;
  for (int n = 1; n <= n_max; ++n) {
    const int m = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      seeds.emplace_back(n, bits);
    }
  }
  return seeds;
}

}  // namespace

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> all = [] {
    std::vector<CheckId> v;
    for (const auto& e : kCheckTable) v.push_back(e.id);
    return v;
  }();
  return all;
}

std::string check_name(CheckId id) {
  for (const auto& e : kCheckTable) {
    if (e.id == id) return e.name;
  }
  return "?";
}

std::optional<CheckId> check_from_name(std::string_view name) {
  for (const auto& e : kCheckTable) {
    if (name == e.name) return e.id;
  }
  return std::nullopt;
}

bool CampaignReport::all_passed() const {
  for (const auto& [id, stats] : checks) {
    if (stats.failed > 0) return false;
  }
  return true;
}

CheckOutcome run_check(const Graph& g, CheckId id, const SolveOptions& opts, std::string* detail) {
  const GraphResult r = evaluate_graph(g, {id}, opts);
  if (!r.error.empty()) {
    if (detail) *detail = "error: " + r.error;
    return CheckOutcome::fail;
  }
  if (detail) {
    for (const auto& [cid, text] : r.details) {
      if (cid == id) *detail = text;
    }
  }
  return r.outcomes.front().second;
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();

  // materialize the work list up front so workers just index into it
  std::vector<std::pair<int, std::uint64_t>> seeds;
  std::vector<Graph> file_graphs;
  std::size_t total = 0;
  if (const auto* ex = std::get_if<ExhaustiveSource>(&cfg.source)) {
    seeds = exhaustive_seeds(ex->n_max);
    total = seeds.size();
  } else {
    file_graphs = read_graph6_file(std::get<FileSource>(cfg.source).path);
    total = file_graphs.size();
  }

  std::vector<GraphResult> results(total);
  std::atomic<std::size_t> cursor{0};
  const int workers = std::max(1, cfg.workers);

  auto worker = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < total;) {
      const Graph g = seeds.empty() ? file_graphs[i]
                                    : Graph::from_triangle_bits(seeds[i].first, seeds[i].second);
      results[i] = evaluate_graph(g, cfg.checks, cfg.solve);
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // merge in input order: the report is identical for any worker count
  CampaignReport report;
  report.graphs = total;
  for (CheckId id : cfg.checks) report.checks[id] = {};
  for (const GraphResult& r : results) {
    if (r.skipped_isolated) ++report.skipped_isolated;
    if (r.budget_hit) ++report.budget_exhausted;
    if (!r.error.empty()) {
      for (CheckId id : cfg.checks) {
        CheckStats& s = report.checks[id];
        ++s.applicable;
        ++s.failed;
        if (static_cast<int>(s.counterexamples.size()) < cfg.max_counterexamples) {
          s.counterexamples.push_back({r.graph6, "error: " + r.error});
        }
      }
      continue;
    }
    for (const auto& [id, outcome] : r.outcomes) {
      CheckStats& s = report.checks[id];
      if (outcome == CheckOutcome::inapplicable) continue;
      ++s.applicable;
      switch (outcome) {
        case CheckOutcome::pass:
          ++s.passed;
          break;
        case CheckOutcome::flagged:
        case CheckOutcome::fail: {
          if (outcome == CheckOutcome::flagged) ++s.flagged;
          else ++s.failed;
          if (static_cast<int>(s.counterexamples.size()) < cfg.max_counterexamples) {
            std::string detail;
            for (const auto& [cid, text] : r.details) {
              if (cid == id) detail = text;
            }
            s.counterexamples.push_back({r.graph6, detail});
          }
          break;
        }
        case CheckOutcome::inapplicable:
          break;
      }
    }
  }

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<CoalitionCertificate> solve_batch(const std::vector<Graph>& graphs, PartitionKind kind,
                                              const SolveOptions& opts, int workers) {
  std::vector<std::optional<CoalitionCertificate>> slots(graphs.size());
  std::vector<std::exception_ptr> errors(graphs.size());
  std::atomic<std::size_t> cursor{0};

  auto worker = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < graphs.size();) {
      try {
        slots[i] = kind == PartitionKind::tc_partition ? tc_number(graphs[i], opts)
                                                       : c_number(graphs[i], opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const int w = std::max(1, workers);
  if (w == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<CoalitionCertificate> out;
  out.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);  // first failure in input order
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace coalition
