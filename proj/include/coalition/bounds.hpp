#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coalition/coalition.hpp"

namespace coalition {

enum class Family { none, path, cycle, complete, complete_bipartite };

struct DetectedFamily {
  Family family = Family::none;
  int a = 0;  // n for path/cycle/complete, r for complete_bipartite
  int b = 0;  // s for complete_bipartite
};

// Structural detection, no isomorphism engine: complete by degrees, cycle =
// connected 2-regular, path = connected with degree sequence 1,1,2..2,
// complete bipartite = complement splits into exactly two cliques.
// Precedence: complete, cycle, path, complete_bipartite.
DetectedFamily detect_family(const Graph& g);

std::string family_name(Family f);

// Closed-form TC for the detected family, when one is known: paths (n >= 3)
// give 3; cycles give 4 when n % 4 == 0 and 3 otherwise; complete graphs give
// n; complete bipartite graphs give r+s.
std::optional<int> closed_form_tc(const DetectedFamily& f);

struct BoundsReport {
  int n = 0;
  int min_degree = 0;
  int max_degree = 0;

  int gamma_complement = 0;                   // gamma of the complement
  std::optional<int> gamma_t_complement;      // absent when the complement has an isolated vertex
  int total_domatic_order = 0;                // d_t

  // Lower bounds on TC; inapplicable ones are absent, never zero.
  int trivial_lower = 2;
  int two_dt = 0;                             // 2 * d_t
  int zelinka2 = 0;                           // 2 * floor(n / (n - delta + 1))
  std::optional<int> delta_plus_1;            // needs no full vertex
  int gamma_complement_lower = 0;             // = gamma_complement

  int upper_bound = 0;                        // n

  std::optional<int> exact_tc;
  std::optional<int> exact_c;
  bool exact_exhausted = true;

  DetectedFamily family;
  std::optional<int> closed_form;

  std::vector<std::string> sharp;             // names of bounds attained by exact_tc

  int best_lower() const;
};

// All bounds for one graph; exact values and sharpness flags are filled when
// compute_exact is set. Throws DomainError on an isolated vertex.
BoundsReport bounds_report(const Graph& g, bool compute_exact, const SolveOptions& opts = {});

enum class SumBound { holds, fails, inapplicable };

// TC(G) + C(G) >= gamma(complement) + gamma_t(complement), evaluated with the
// exact solvers. Inapplicable when G has an isolated or full vertex.
SumBound check_sum_bound(const Graph& g, const SolveOptions& opts = {});

}  // namespace coalition
