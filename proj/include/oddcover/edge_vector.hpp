#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oddcover/graph.hpp"

namespace oddcover {

// index of pair (u, v), u < v, in the upper triangle of an n-vertex universe
std::size_t pair_index(int n, Vertex u, Vertex v);
Edge pair_at(int n, std::size_t index);

class EdgeVector {
 public:
  EdgeVector() = default;
  explicit EdgeVector(int n);
  static EdgeVector from_edges(int n, std::span<const Edge> edges);
  static EdgeVector from_graph(const Graph& g);

  int universe() const { return n_; }
  std::size_t size() const { return bits_; }
  bool test(Vertex a, Vertex b) const;
  void flip(Vertex a, Vertex b);
  std::size_t count() const;
  bool none() const { return count() == 0; }
  std::vector<Edge> edges() const;

  EdgeVector& operator^=(const EdgeVector& o);
  bool operator==(const EdgeVector& o) const = default;

 private:
  int n_ = 0;
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

EdgeVector xor_edges(const EdgeVector& a, const EdgeVector& b);

}  // namespace oddcover
