#include "coalition/dot.hpp"

#include <sstream>

namespace coalition {

std::string to_dot(const CoalitionGraph& cg) {
  std::ostringstream out;
  out << "graph coalition_graph {\n";
  out << "  node [shape=circle];\n";
  const int k = cg.base.order();
  for (int i = 0; i < k; ++i) {
    std::string members;
    for (int v : cg.base.part(i)) {
      if (!members.empty()) members += ", ";
      members += std::to_string(v);
    }
    out << "  V" << i + 1 << " [label=\"V" << i + 1 << "\", tooltip=\"{" << members << "}\"];\n";
  }
  for (const auto& [i, j] : cg.derived.edges()) {
    out << "  V" << i + 1 << " -- V" << j + 1 << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace coalition
