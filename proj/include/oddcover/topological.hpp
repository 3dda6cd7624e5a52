#pragma once

#include <vector>

#include "oddcover/cover.hpp"
#include "oddcover/graph.hpp"
#include "oddcover/path_system.hpp"

namespace oddcover {

struct TopologicalCover {
  Graph h;                                   // the subdivision actually covered
  OddCover cover;                            // target is h
  std::vector<std::vector<Vertex>> chains;   // per edge of g (in g.edges() order), its chain in h
};

// disjoint union of at least one cycle with at most one path
bool is_topological_exception(const Graph& g);

// the coloured path k-system on the 3-subdivision; k = max{v_odd/2, ceil(Delta/2)} >= 2
PathKSystem coloured_system(const Graph& g);

// exactly max{v_odd/2, ceil(Delta/2)} paths; throws std::invalid_argument on the exceptional family
TopologicalCover topological_cover(const Graph& g);

// Delta/2 cycles; all degrees even and not two or more disjoint cycles
TopologicalCover cycle_top_cover(const Graph& g);

// replay the subdivision log over the per-edge chains
std::vector<std::vector<Vertex>> apply_subdivisions(std::vector<std::vector<Vertex>> chains,
                                                    const std::vector<Subdivision>& log);

// true when h is g with each edge replaced by its chain
bool is_subdivision_of(const Graph& h, const Graph& g, const std::vector<std::vector<Vertex>>& chains);

}  // namespace oddcover
