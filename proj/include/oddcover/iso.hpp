#pragma once

#include <string>
#include <vector>

#include "oddcover/cover.hpp"
#include "oddcover/graph.hpp"
#include "oddcover/oracle.hpp"
#include "oddcover/path_system.hpp"
#include "oddcover/solver.hpp"
#include "oddcover/two_path_kit.hpp"

namespace oddcover {

// path components of k linear forests over a growing vertex set
struct IsoState {
  int num_vertices = 0;
  int original_vertices = 0;
  std::vector<std::vector<Path>> forests;
};

// validates the forests against g; throws std::invalid_argument
IsoState iso_state(const Graph& g, const LinearForests& forests);

// XOR of every path of every forest, sorted
std::vector<Edge> iso_edges(const IsoState& s);

// joins the two components of one forest ending at u and v through a new vertex w
IsoState meet(const IsoState& s, Vertex u, Vertex v);

struct IsoCover {
  OddCover cover;  // target is g plus `added` isolated vertices
  int added = 0;
};

IsoCover iso_cover_from_forests(const Graph& g, const LinearForests& forests);
TwoPaths two_path_cover_la2(const Graph& g, const std::vector<Edge>& f1, const std::vector<Edge>& f2);
IsoCover cycle_iso_cover(const Graph& g, const LinearForests& forests);

struct IsoReport {
  std::string branch;  // "two-path", "odd-dominated", "forests" or "layer-fallback"
  SolveBudget budget;
  int matching_paths = 0;
  int residual_paths = 0;
  int residual_degree = 0;
  bool residual_exact = false;  // residual linear arboricity found by exhaustive search
};

struct IsoGeneralResult {
  IsoCover result;
  IsoReport report;
};

IsoGeneralResult iso_cover_general(const Graph& g);

}  // namespace oddcover
