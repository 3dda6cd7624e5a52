#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "oddcover/cover.hpp"
#include "oddcover/cycles.hpp"

namespace oddcover {

struct TwoPaths {
  Path p;
  Path q;
};

struct ExceptionalCase {
  int cycle_index = -1;
  // internal-vertex counts of the four demarcated subpaths, in cyclic order
  std::array<int, 4> demarcation{};
};

using TwoEdgeResult = std::variant<TwoPaths, ExceptionalCase>;

TwoPaths cover_cycles(const CycleSet& c);
TwoPaths cover_cycles_with_endpoint(const CycleSet& c, Vertex z);
TwoPaths integrate_one_edge(const CycleSet& c, Edge f, std::optional<Vertex> z = std::nullopt);
TwoEdgeResult integrate_two_edges(const CycleSet& c, Edge f1, Edge f2);
bool is_exceptional_K4(const CycleSet& c, Edge f1, Edge f2);

struct PairChoice {
  std::pair<int, int> pair;  // indices into the three edges
  TwoPaths paths;
};
PairChoice choose_integrable_pair(const CycleSet& c, const std::array<Edge, 3>& fs);

std::vector<Path> integrate_four_edges(const CycleSet& c, const CycleSet& d,
                                       const std::array<Edge, 4>& fs);

// XOR of the edge sets as a sorted list of pairs
std::vector<Edge> xor_edge_lists(std::vector<Edge> edges);

}  // namespace oddcover
