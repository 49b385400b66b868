#pragma once

#include "relalg/network.hpp"

#include <string>

namespace relalg {

/// Graphviz rendering: each edge from a lower to a higher node id
/// is solid, the opposite direction and loops are dashed, all labelled with
/// atom names.
std::string to_dot(const PreNetwork &n, const AtomStructure &s, const std::string &graph_name = "network");

} // namespace relalg
