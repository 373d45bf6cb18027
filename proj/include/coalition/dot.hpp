#pragma once

#include <string>

#include "coalition/coalition.hpp"

namespace coalition {

// Graphviz text for a coalition graph: nodes V1..Vk, member lists in the
// node tooltips, one edge per coalition pair.
std::string to_dot(const CoalitionGraph& cg);

}  // namespace coalition
