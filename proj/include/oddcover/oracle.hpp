#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oddcover/cover.hpp"
#include "oddcover/edge_vector.hpp"
#include "oddcover/graph.hpp"

namespace oddcover {

struct ExactResult {
  int k = 0;
  OddCover witness;
  int added = 0;  // isolated vertices appended to g, for the iso variant
};

// every path on >= 2 vertices of K_n, each undirected path once; n <= 7
std::vector<EdgeVector> enumerate_paths(int n);
// every cycle of K_n, each once; n <= 7
std::vector<EdgeVector> enumerate_cycles(int n);

// nullopt when the minimum exceeds max_k; at n = 7 paths are searched to four members only,
// so max_k > 4 with no cover of <= 4 throws BudgetExceeded
std::optional<ExactResult> exact_p2(const Graph& g, int max_k);
std::optional<ExactResult> exact_c2(const Graph& g, int max_k);
std::optional<ExactResult> exact_p2_iso(const Graph& g, int extra, int max_k);

using LinearForests = std::vector<std::vector<Edge>>;

// k edge classes, each a linear forest; nullopt when none exist; n <= 10
std::optional<LinearForests> exact_linear_forests(const Graph& g, int k,
                                                  std::uint64_t max_nodes = 50'000'000);
int linear_arboricity(const Graph& g);

struct GapExample {
  Graph g;
  int p2 = 0;
  int bound = 0;
};

struct GapReport {
  int max_n = 0;
  std::uint64_t graphs = 0;
  int max_gap_degree = 0;    // p2 - max{v_odd/2, ceil(Delta/2)}
  int max_gap_density = 0;   // p2 - max{v_odd/2, ceil(Delta/2), density}
  int max_gap_la = 0;        // p2 - max{v_odd/2, ceil(Delta/2), la}
  std::uint64_t above_degree = 0;
  std::uint64_t above_density = 0;
  std::uint64_t above_la = 0;
  std::optional<GapExample> worst;  // first graph with the largest degree-bound gap
};

// exhaustive over all labeled graphs with 1..max_n vertices; max_n <= 6
GapReport scan_bound_gaps(int max_n, bool with_la = true);

// graph on n vertices whose edges are the set bits of mask (pair_index order)
Graph graph_from_mask(int n, std::uint32_t mask);
std::uint32_t mask_of(const Graph& g);

}  // namespace oddcover
