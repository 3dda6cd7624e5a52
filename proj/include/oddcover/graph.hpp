#pragma once

#include <compare>
#include <span>
#include <vector>

namespace oddcover {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
};

// normalized so that u < v
Edge make_edge(Vertex a, Vertex b);
bool share_vertex(const Edge& a, const Edge& b);

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const;
  int max_degree() const;
  bool all_even() const;

  Graph with_isolated(int extra) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

struct DegreeProfile {
  int max_degree = 0;
  int v_odd = 0;
  std::vector<Vertex> odd_vertices;
};

DegreeProfile degree_profile(const Graph& g);

// symmetric difference of E(g) with a set of pairs over the same universe
Graph xor_with(const Graph& g, std::span<const Edge> edges);
Graph remove_edges(const Graph& g, std::span<const Edge> edges);

// vertex sets of the connected components that have at least one edge
std::vector<std::vector<Vertex>> edge_components(const Graph& g);

}  // namespace oddcover
