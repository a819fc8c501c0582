#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace smellvuln {

/// Strongly connected components of a digraph over nodes 0..n-1 (iterative
/// Tarjan). Each component is sorted ascending; components are ordered by
/// their smallest member.
std::vector<std::vector<std::size_t>> strongly_connected_components(const std::vector<std::vector<std::size_t>>& adjacency);

/// Components of size >= 2 of a named digraph. Self-loops never make a
/// component cyclic. Edges to names outside `nodes` are ignored.
std::vector<std::vector<std::string>> cyclic_components(const std::vector<std::string>& nodes,
                                                        const std::map<std::string, std::set<std::string>>& out);

} // namespace smellvuln
