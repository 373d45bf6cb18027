#include "coalition/json_io.hpp"

namespace coalition {

using nlohmann::json;

namespace {

json set_to_json(const VertexSet& s) { return json(s.to_vector()); }

json parts_to_json(const Partition& p) {
  json parts = json::array();
  for (const VertexSet& part : p.parts()) parts.push_back(set_to_json(part));
  return parts;
}

}  // namespace

std::string part_status_name(PartStatus s) {
  switch (s) {
    case PartStatus::singleton_dominating: return "singleton_dominating";
    case PartStatus::non_dominating_with_partner: return "non_dominating_with_partner";
    case PartStatus::non_tds_with_partner: return "non_tds_with_partner";
    case PartStatus::invalid: return "invalid";
  }
  return "invalid";
}

json to_json(const Partition& p) { return parts_to_json(p); }

json to_json(const DominationCertificate& c) {
  return json{
      {"kind", c.kind == DominationKind::dominating ? "dominating" : "total_dominating"},
      {"value", c.value},
      {"set", set_to_json(c.set)},
  };
}

json to_json(const DomaticCertificate& c) {
  return json{
      {"kind", c.kind == DominationKind::dominating ? "domatic" : "total_domatic"},
      {"order", c.order},
      {"parts", parts_to_json(c.parts)},
  };
}

json to_json(const CoalitionCertificate& c) {
  return json{
      {"value", c.value},
      {"exhausted", c.exhausted},
      {"witness", c.witness ? parts_to_json(*c.witness) : json()},
  };
}

json to_json(const PartitionVerdict& v, const Partition& p) {
  json parts = json::array();
  for (std::size_t i = 0; i < v.per_part.size(); ++i) {
    const auto& entry = v.per_part[i];
    json partners = json::array();
    for (int j : entry.partners) partners.push_back(j + 1);  // 1-based like the part labels
    parts.push_back(json{
        {"members", set_to_json(p.part(static_cast<int>(i)))},
        {"status", part_status_name(entry.status)},
        {"partners", partners},
    });
  }
  return json{
      {"valid", v.valid},
      {"kind", v.kind == PartitionKind::tc_partition ? "tc_partition" : "c_partition"},
      {"parts", parts},
  };
}

json to_json(const BoundsReport& r) {
  json lower{
      {"trivial", r.trivial_lower},
      {"two_dt", r.two_dt},
      {"zelinka2", r.zelinka2},
      {"delta_plus_1", r.delta_plus_1 ? json(*r.delta_plus_1) : json()},
      {"gamma_complement", r.gamma_complement_lower},
  };
  json out{
      {"n", r.n},
      {"delta", r.min_degree},
      {"Delta", r.max_degree},
      {"gamma_complement", r.gamma_complement},
      {"gamma_t_complement", r.gamma_t_complement ? json(*r.gamma_t_complement) : json()},
      {"d_t", r.total_domatic_order},
      {"lower_bounds", lower},
      {"upper_bound", r.upper_bound},
      {"exact_tc", r.exact_tc ? json(*r.exact_tc) : json()},
      {"exact_c", r.exact_c ? json(*r.exact_c) : json()},
      {"exact_exhausted", r.exact_exhausted},
      {"family", family_name(r.family.family)},
      {"closed_form", r.closed_form ? json(*r.closed_form) : json()},
      {"sharp", r.sharp},
  };
  if (r.family.family == Family::complete_bipartite) {
    out["family_params"] = json::array({r.family.a, r.family.b});
  } else if (r.family.family != Family::none) {
    out["family_params"] = json::array({r.family.a});
  }
  return out;
}

json to_json(const CampaignReport& r) {
  json checks = json::object();
  for (const auto& [id, stats] : r.checks) {
    json ces = json::array();
    for (const Counterexample& ce : stats.counterexamples) {
      ces.push_back(json{{"graph6", ce.graph6}, {"detail", ce.detail}});
    }
    checks[check_name(id)] = json{
        {"applicable", stats.applicable}, {"passed", stats.passed},
        {"failed", stats.failed},         {"flagged", stats.flagged},
        {"counterexamples", ces},
    };
  }
  return json{
      {"graphs", r.graphs},
      {"skipped_isolated", r.skipped_isolated},
      {"budget_exhausted", r.budget_exhausted},
      {"checks", checks},
      {"seconds", r.seconds},
      {"all_passed", r.all_passed()},
  };
}

}  // namespace coalition
