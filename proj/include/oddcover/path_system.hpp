#pragma once

#include <map>
#include <vector>

#include "oddcover/cover.hpp"
#include "oddcover/graph.hpp"

namespace oddcover {

// edge {a, b} of the current subdivision replaced by a - middle - b
struct Subdivision {
  Vertex a = 0;
  Vertex b = 0;
  Vertex middle = 0;
};

struct PathKSystem {
  int num_vertices = 0;
  std::vector<std::vector<Path>> collections;
  std::vector<Subdivision> subdivisions;  // in the order they were made

  int k() const { return static_cast<int>(collections.size()); }
  std::size_t total_paths() const;
};

enum class EndpointType { I, II };

struct PathRef {
  int collection = -1;
  int index = -1;
  bool operator==(const PathRef&) const = default;
};

struct EndpointInfo {
  EndpointType type = EndpointType::I;
  std::vector<PathRef> paths;  // one entry for type I, two for type II
};

// throws std::invalid_argument when sys is not a path k-system
std::map<Vertex, EndpointInfo> classify_endpoints(const PathKSystem& sys);
bool is_path_k_system(const PathKSystem& sys);
bool is_well_distributed(const PathKSystem& sys);

// XOR of every path in the system, sorted
std::vector<Edge> system_edges(const PathKSystem& sys);

// both throw std::invalid_argument on a precondition violation
PathKSystem join(const PathKSystem& sys, Vertex u, Vertex v);
// the new subdividing vertex is result.num_vertices - 1
PathKSystem insert(const PathKSystem& sys, Vertex u, int i, int r);

// one path per collection over a further subdivision
PathKSystem reduce_system(PathKSystem sys);

}  // namespace oddcover
