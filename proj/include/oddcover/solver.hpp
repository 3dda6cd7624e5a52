#pragma once

#include <utility>
#include <vector>

#include "oddcover/cover.hpp"
#include "oddcover/cycles.hpp"
#include "oddcover/graph.hpp"

namespace oddcover {

struct SolveBudget {
  int t = 0;        // pair-integration rounds
  int d = 0;        // residual degree, may be negative
  int delta_e = 0;  // 2 ceil(Delta/2)
};

// t and d for the isolated-vertex bound
SolveBudget iso_budget(const Graph& g);

// shortest path between two odd vertices, preferring low degree endpoints
std::pair<Path, Graph> peel_odd_path(const Graph& g);

// at most Delta + v_odd/2 paths
OddCover cover_first_bound(const Graph& g);

// cover of g_prime xor m with at most 2t paths; layers past t get two paths each
OddCover cover_eulerian_plus_matching(const Graph& g_prime, const Matching& m);

// at most max{v_odd/2, 2 ceil(Delta/2)} paths
OddCover path_odd_cover(const Graph& g);

// at most Delta cycles; g must have all degrees even
OddCover cycle_odd_cover(const Graph& g);

namespace detail {
// the integration loop over precomputed layers; layers.size() >= t(m)
std::vector<Path> integrate_matching(const std::vector<CycleSet>& layers, const Matching& m);
int rounds_for(std::size_t matching_size);
}  // namespace detail

}  // namespace oddcover
