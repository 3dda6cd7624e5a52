#include "oddcover/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace oddcover {

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool share_vertex(const Edge& a, const Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

Graph::Graph(int n) : n_(n), adj_(n < 0 ? 0 : n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    edges_.push_back(make_edge(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

bool Graph::all_even() const {
  return std::all_of(adj_.begin(), adj_.end(), [](const auto& a) { return a.size() % 2 == 0; });
}

Graph Graph::with_isolated(int extra) const { return Graph(n_ + extra, edges_); }

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    p.max_degree = std::max(p.max_degree, g.degree(v));
    if (g.degree(v) % 2) p.odd_vertices.push_back(v);
  }
  p.v_odd = static_cast<int>(p.odd_vertices.size());
  return p;
}

Graph xor_with(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> add;
  for (const Edge& e : edges) add.push_back(make_edge(e.u, e.v));
  std::sort(add.begin(), add.end());
  std::vector<Edge> out;
  std::set_symmetric_difference(g.edges().begin(), g.edges().end(), add.begin(), add.end(),
                                std::back_inserter(out));
  return Graph(g.num_vertices(), out);
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> rm;
  for (const Edge& e : edges) rm.push_back(make_edge(e.u, e.v));
  std::sort(rm.begin(), rm.end());
  std::vector<Edge> out;
  std::set_difference(g.edges().begin(), g.edges().end(), rm.begin(), rm.end(),
                      std::back_inserter(out));
  return Graph(g.num_vertices(), out);
}

std::vector<std::vector<Vertex>> edge_components(const Graph& g) {
  std::vector<int> comp(g.num_vertices(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] >= 0 || g.degree(s) == 0) continue;
    std::vector<Vertex> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (Vertex y : g.neighbors(x))
        if (comp[y] < 0) {
          comp[y] = comp[s];
          stack.push_back(y);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace oddcover
