#pragma once

#include <vector>

namespace oddcover::detail {

// Hopcroft-Karp on a bipartite graph with equal sides; adj[l] lists right vertices.
// returns match_left (-1 when unmatched)
std::vector<int> hopcroft_karp(const std::vector<std::vector<int>>& adj, int right_size);

}  // namespace oddcover::detail
