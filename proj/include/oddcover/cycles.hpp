#pragma once

#include <vector>

#include "oddcover/cover.hpp"
#include "oddcover/graph.hpp"

namespace oddcover {

using Matching = std::vector<Edge>;

// arcs of a balanced orientation; arc {u, v} points from u to v
struct Orientation {
  int n = 0;
  std::vector<Edge> arcs;
};

struct CycleSet {
  std::vector<Cycle> cycles;
  bool empty() const { return cycles.empty(); }
  std::size_t size() const { return cycles.size(); }
  std::vector<Edge> edges() const;
  std::vector<Vertex> vertices() const;
};

bool is_vertex_disjoint(const CycleSet& c);
// index of the cycle through v, or -1
int cycle_of(const CycleSet& c, Vertex v);

Matching odd_matching(const Graph& g);
Orientation balanced_orientation(const Graph& g);
CycleSet max_degree_cycle_cover(const Graph& g);
std::vector<CycleSet> peel_cycle_layers(const Graph& g);

}  // namespace oddcover
