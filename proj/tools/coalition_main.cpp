// Command-line front end: every solver, validator, builder and the corpus
// campaign behind one binary. Exit codes: 0 success, 1 domain error or a
// campaign with failures, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "coalition/bounds.hpp"
#include "coalition/campaign.hpp"
#include "coalition/coalition.hpp"
#include "coalition/dot.hpp"
#include "coalition/graph6.hpp"
#include "coalition/json_io.hpp"

namespace {

using namespace coalition;

bool use_color() {
  return ::isatty(::fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
}

std::string paint(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string good(const std::string& t) { return paint(t, "32"); }
std::string bad(const std::string& t) { return paint(t, "31"); }
std::string warn(const std::string& t) { return paint(t, "33"); }

struct InputSel {
  std::string edge_list_path;
  std::string graph6_arg;
  std::vector<std::string> family;
};

void add_input_options(CLI::App* cmd, InputSel& sel) {
  auto* grp = cmd->add_option_group("input", "graph source (exactly one)");
  grp->add_option("--edge-list", sel.edge_list_path,
                  "edge-list file: first line 'n m', then one 'u v' line per edge");
  grp->add_option("--graph6", sel.graph6_arg, "graph6 record, or a file holding one");
  grp->add_option("--family", sel.family,
                  "family name and parameters: path N | cycle N | complete N | "
                  "complete_bipartite R S | star LEAVES")
      ->expected(2, 3);
  grp->require_option(1);
}

Graph load_graph(const InputSel& sel) {
  if (!sel.edge_list_path.empty()) {
    std::ifstream in(sel.edge_list_path);
    if (!in) throw Error("cannot open edge list file: " + sel.edge_list_path);
    return parse_edge_list_text(in);
  }
  if (!sel.graph6_arg.empty()) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(sel.graph6_arg, ec)) {
      const auto graphs = read_graph6_file(sel.graph6_arg);
      if (graphs.empty()) throw Error("no graph6 records in " + sel.graph6_arg);
      return graphs.front();
    }
    return parse_graph6(sel.graph6_arg);
  }
  std::vector<int> params;
  for (std::size_t i = 1; i < sel.family.size(); ++i) {
    try {
      params.push_back(std::stoi(sel.family[i]));
    } catch (const std::exception&) {
      throw DomainError("family parameter '" + sel.family[i] + "' is not an integer");
    }
  }
  return make_family(sel.family[0], params);
}

void print_solver_result(const char* label, const CoalitionCertificate& cert, bool json) {
  if (json) {
    std::cout << to_json(cert).dump(2) << '\n';
    return;
  }
  if (cert.exhausted) {
    std::cout << label << " = " << cert.value << '\n';
  } else {
    std::cout << label << " >= " << cert.value << "  " << warn("lower bound (budget exhausted)")
              << '\n';
  }
  if (cert.witness) {
    std::cout << "witness: " << cert.witness->canonicalized().to_string() << '\n';
  }
}

void print_verdict(const PartitionVerdict& verdict, const Partition& p, bool json) {
  if (json) {
    std::cout << to_json(verdict, p).dump(2) << '\n';
    return;
  }
  const char* kind = verdict.kind == PartitionKind::tc_partition ? "tc-partition" : "c-partition";
  std::cout << (verdict.valid ? good("valid ") : bad("invalid ")) << kind << " ("
            << p.order() << " parts)\n";
  for (std::size_t i = 0; i < verdict.per_part.size(); ++i) {
    const auto& entry = verdict.per_part[i];
    std::cout << "  V" << i + 1 << " " << p.part(static_cast<int>(i)).to_string() << ": "
              << part_status_name(entry.status);
    if (!entry.partners.empty()) {
      std::cout << ", partners:";
      for (int j : entry.partners) std::cout << " V" << j + 1;
    }
    std::cout << '\n';
  }
}

void print_bounds(const BoundsReport& r, bool json) {
  if (json) {
    std::cout << to_json(r).dump(2) << '\n';
    return;
  }
  std::cout << "n = " << r.n << "  delta = " << r.min_degree << "  Delta = " << r.max_degree
            << '\n';
  std::cout << "gamma(complement)   = " << r.gamma_complement << '\n';
  std::cout << "gamma_t(complement) = ";
  if (r.gamma_t_complement) std::cout << *r.gamma_t_complement << '\n';
  else std::cout << "inapplicable (complement has an isolated vertex)\n";
  std::cout << "d_t                 = " << r.total_domatic_order << '\n';
  std::cout << "lower bounds on TC: trivial=" << r.trivial_lower << "  two_dt=" << r.two_dt
            << "  zelinka2=" << r.zelinka2 << "  gamma_complement=" << r.gamma_complement_lower;
  std::cout << "  delta_plus_1=";
  if (r.delta_plus_1) std::cout << *r.delta_plus_1;
  else std::cout << "inapplicable";
  std::cout << '\n';
  std::cout << "upper bound: n = " << r.upper_bound << '\n';
  if (r.family.family != Family::none) {
    std::cout << "family: " << family_name(r.family.family);
    if (r.family.family == Family::complete_bipartite) {
      std::cout << " (" << r.family.a << "," << r.family.b << ")";
    } else {
      std::cout << " (" << r.family.a << ")";
    }
    if (r.closed_form) std::cout << "  closed form TC = " << *r.closed_form;
    std::cout << '\n';
  }
  if (r.exact_tc) std::cout << "exact TC = " << *r.exact_tc << '\n';
  if (r.exact_c) std::cout << "exact C  = " << *r.exact_c << '\n';
  if (!r.sharp.empty()) {
    std::cout << "sharp:";
    for (const auto& name : r.sharp) std::cout << ' ' << name;
    std::cout << '\n';
  }
}

int print_campaign(const CampaignReport& report, bool json) {
  if (json) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << "graphs: " << report.graphs << "  (isolated-vertex, skipped for total checks: "
              << report.skipped_isolated << ")\n";
    if (report.budget_exhausted > 0) {
      std::cout << warn("budget exhausted on " + std::to_string(report.budget_exhausted) +
                        " graph(s); affected checks counted inapplicable")
                << '\n';
    }
    for (const auto& [id, stats] : report.checks) {
      std::string status = stats.failed > 0 ? bad("FAIL") : good("PASS");
      if (stats.failed == 0 && stats.flagged > 0) status = warn("FLAG");
      std::cout << status << "  " << check_name(id) << ": applicable " << stats.applicable
                << ", passed " << stats.passed << ", failed " << stats.failed << ", flagged "
                << stats.flagged << '\n';
      for (const Counterexample& ce : stats.counterexamples) {
        std::cout << "      counterexample " << ce.graph6 << "  " << ce.detail << '\n';
      }
    }
    std::cout << (report.all_passed() ? good("all checks passed")
                                      : bad("some checks failed"))
              << "  (" << report.seconds << " s)\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coalition and total-coalition toolkit for small graphs"};
  app.require_subcommand(1);

  std::function<int()> action;

  // shared option state; one subcommand runs per invocation
  InputSel input;
  bool json = false;
  bool dot = false;
  std::uint64_t budget = SolveOptions{}.max_completions;
  std::string partition_text;
  std::string kind_name = "tc";
  std::optional<int> pivot_vertex;
  bool no_exact = false;

  const auto kind_of = [&]() {
    if (kind_name == "tc") return PartitionKind::tc_partition;
    if (kind_name == "c") return PartitionKind::c_partition;
    throw DomainError("unknown partition kind '" + kind_name + "' (expected tc or c)");
  };

  const auto solver_cmd = [&](const char* name, const char* desc, const char* label, bool total) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    add_input_options(cmd, input);
    cmd->add_flag("--json", json, "machine-readable output");
    cmd->add_option("--budget", budget, "cap on enumerated candidate partitions");
    cmd->callback([&, label, total] {
      action = [&, label, total] {
        const Graph g = load_graph(input);
        const SolveOptions opts{budget};
        print_solver_result(label, total ? tc_number(g, opts) : c_number(g, opts), json);
        return 0;
      };
    });
  };
  solver_cmd("tc", "exact total coalition number TC(G)", "TC", true);
  solver_cmd("c", "exact coalition number C(G)", "C", false);

  const auto gamma_cmd = [&](const char* name, const char* desc, bool total) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    add_input_options(cmd, input);
    cmd->add_flag("--json", json, "machine-readable output");
    cmd->callback([&, total] {
      action = [&, total] {
        const Graph g = load_graph(input);
        const DominationCertificate cert = total ? gamma_t(g) : gamma(g);
        if (json) {
          std::cout << to_json(cert).dump(2) << '\n';
        } else {
          std::cout << (total ? "gamma_t = " : "gamma = ") << cert.value << '\n'
                    << "set: " << cert.set.to_string() << '\n';
        }
        return 0;
      };
    });
  };
  gamma_cmd("gamma", "exact domination number", false);
  gamma_cmd("gamma-t", "exact total domination number", true);

  const auto domatic_cmd = [&](const char* name, const char* desc, bool total) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    add_input_options(cmd, input);
    cmd->add_flag("--json", json, "machine-readable output");
    cmd->callback([&, total] {
      action = [&, total] {
        const Graph g = load_graph(input);
        const DomaticCertificate cert = total ? total_domatic(g) : domatic(g);
        if (json) {
          std::cout << to_json(cert).dump(2) << '\n';
        } else {
          std::cout << (total ? "d_t = " : "d = ") << cert.order << '\n'
                    << "parts: " << cert.parts.to_string() << '\n';
        }
        return 0;
      };
    });
  };
  domatic_cmd("domatic", "exact domatic number with witness partition", false);
  domatic_cmd("total-domatic", "exact total domatic number with witness partition", true);

  {
    CLI::App* cmd = app.add_subcommand("validate", "check a partition against the coalition rules");
    add_input_options(cmd, input);
    cmd->add_option("--partition", partition_text, "parts '|'-separated, vertices ','-separated")
        ->required();
    cmd->add_option("--kind", kind_name, "tc (default) or c");
    cmd->add_flag("--json", json, "machine-readable output");
    cmd->callback([&] {
      action = [&] {
        const Graph g = load_graph(input);
        const Partition p = Partition::parse(g, partition_text);
        print_verdict(validate_partition(g, p, kind_of()), p, json);
        return 0;
      };
    });
  }

  {
    CLI::App* cmd = app.add_subcommand(
        "build-thm1", "total coalition partition built from a maximum total domatic partition");
    add_input_options(cmd, input);
    cmd->add_flag("--json", json, "machine-readable output");
    cmd->callback([&] {
      action = [&] {
        const Graph g = load_graph(input);
        const TotalDomaticBuild built = build_tc_from_total_domatic(g);
        if (json) {
          nlohmann::json out{
              {"order", built.partition.order()},
              {"partition", to_json(built.partition)},
              {"valid", built.verdict.valid},
              {"merged_leftover", built.merged_leftover},
              {"total_domatic_order", built.total_domatic_order},
          };
          std::cout << out.dump(2) << '\n';
        } else {
          std::cout << "partition: " << built.partition.canonicalized().to_string() << '\n'
                    << "order = " << built.partition.order() << "  (d_t = "
                    << built.total_domatic_order << ")\n";
          if (built.merged_leftover) {
            std::cout << warn("leftover merged into the final part") << '\n';
          }
          std::cout << "validates: " << (built.verdict.valid ? good("yes") : bad("NO")) << '\n';
        }
        return built.verdict.valid ? 0 : 1;
      };
    });
  }

  {
    CLI::App* cmd = app.add_subcommand(
        "build-thm29", "singleton parts around a low-degree vertex plus the remainder");
    add_input_options(cmd, input);
    cmd->add_option("--vertex", pivot_vertex, "pivot vertex (default: lowest-index minimum degree)");
    cmd->add_flag("--json", json, "machine-readable output");
    cmd->callback([&] {
      action = [&] {
        const Graph g = load_graph(input);
        const Partition p = build_tc_from_min_degree_vertex(g, pivot_vertex);
        const PartitionVerdict verdict = validate_partition(g, p, PartitionKind::tc_partition);
        if (json) {
          nlohmann::json out{
              {"order", p.order()},
              {"partition", to_json(p)},
              {"valid", verdict.valid},
          };
          std::cout << out.dump(2) << '\n';
        } else {
          std::cout << "partition: " << p.canonicalized().to_string() << '\n'
                    << "order = " << p.order() << '\n'
                    << "validates: " << (verdict.valid ? good("yes") : bad("NO")) << '\n';
        }
        return verdict.valid ? 0 : 1;
      };
    });
  }

  {
    CLI::App* cmd = app.add_subcommand("cgraph", "coalition graph of a partition");
    add_input_options(cmd, input);
    cmd->add_option("--partition", partition_text, "parts '|'-separated, vertices ','-separated")
        ->required();
    cmd->add_option("--kind", kind_name, "tc (default) or c");
    cmd->add_flag("--json", json, "machine-readable output");
    cmd->add_flag("--dot", dot, "Graphviz output");
    cmd->callback([&] {
      action = [&] {
        const Graph g = load_graph(input);
        const Partition p = Partition::parse(g, partition_text);
        const CoalitionGraph cg = coalition_graph(g, p, kind_of());
        if (dot) {
          std::cout << to_dot(cg);
        } else if (json) {
          nlohmann::json edges = nlohmann::json::array();
          for (const auto& [i, j] : cg.derived.edges()) {
            edges.push_back(nlohmann::json::array({i + 1, j + 1}));
          }
          nlohmann::json out{
              {"parts", to_json(p)},
              {"edges", edges},
              {"max_coalitions_per_part", max_coalitions_per_part(cg)},
          };
          std::cout << out.dump(2) << '\n';
        } else {
          std::cout << "parts: " << p.to_string() << '\n';
          for (const auto& [i, j] : cg.derived.edges()) {
            std::cout << "V" << i + 1 << " -- V" << j + 1 << '\n';
          }
          std::cout << "max coalitions per part: " << max_coalitions_per_part(cg) << '\n';
        }
        return 0;
      };
    });
  }

  {
    CLI::App* cmd = app.add_subcommand("bounds", "every bound and closed form for one graph");
    add_input_options(cmd, input);
    cmd->add_flag("--json", json, "machine-readable output");
    cmd->add_flag("--no-exact", no_exact, "skip the exact solver runs");
    cmd->add_option("--budget", budget, "cap on enumerated candidate partitions");
    cmd->callback([&] {
      action = [&] {
        const Graph g = load_graph(input);
        print_bounds(bounds_report(g, !no_exact, SolveOptions{budget}), json);
        return 0;
      };
    });
  }

  {
    static int exhaustive_n = 0;
    static std::string corpus_path;
    static std::string checks_csv;
    static int workers = static_cast<int>(std::thread::hardware_concurrency());
    static int max_ces = 10;

    CLI::App* cmd = app.add_subcommand("campaign", "run theorem checks over a graph corpus");
    auto* grp = cmd->add_option_group("source", "corpus source (exactly one)");
    grp->add_option("--exhaustive", exhaustive_n, "all labeled graphs on 1..N vertices (N <= 7)");
    grp->add_option("--graph6-file", corpus_path, "graph6 corpus, one record per line");
    grp->require_option(1);
    cmd->add_option("--checks", checks_csv, "comma-separated check names (default: all)");
    cmd->add_option("--workers", workers, "worker threads");
    cmd->add_option("--budget", budget, "per-graph cap on enumerated candidate partitions");
    cmd->add_option("--max-counterexamples", max_ces, "counterexamples kept per check");
    cmd->add_flag("--json", json, "machine-readable output");
    cmd->callback([&] {
      action = [&] {
        CampaignConfig cfg;
        if (exhaustive_n > 0) cfg.source = ExhaustiveSource{exhaustive_n};
        else cfg.source = FileSource{corpus_path};
        if (!checks_csv.empty()) {
          cfg.checks.clear();
          std::size_t start = 0;
          while (start <= checks_csv.size()) {
            const std::size_t comma = checks_csv.find(',', start);
            const std::string name = checks_csv.substr(start, comma - start);
            const auto id = check_from_name(name);
            if (!id) throw DomainError("unknown check '" + name + "'");
            cfg.checks.push_back(*id);
            if (comma == std::string::npos) break;
            start = comma + 1;
          }
        }
        cfg.solve.max_completions = budget;
        cfg.workers = std::max(1, workers);
        cfg.max_counterexamples = max_ces;
        return print_campaign(run_campaign(cfg), json);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help is a success; every real usage problem exits 2
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 1;
  }
}
