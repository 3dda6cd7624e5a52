#include "oddcover/edge_vector.hpp"

#include <bit>
#include <stdexcept>

namespace oddcover {

std::size_t pair_index(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  if (u == v || u < 0 || v >= n) throw std::invalid_argument("bad vertex pair");
  const auto uu = static_cast<std::size_t>(u);
  return uu * n - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

Edge pair_at(int n, std::size_t index) {
  Vertex u = 0;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (index >= row) {
    index -= row;
    --row;
    ++u;
  }
  return {u, u + 1 + static_cast<Vertex>(index)};
}

EdgeVector::EdgeVector(int n)
    : n_(n), bits_(n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2), words_((bits_ + 63) / 64) {
  if (n < 0) throw std::invalid_argument("negative universe");
}

EdgeVector EdgeVector::from_edges(int n, std::span<const Edge> edges) {
  EdgeVector x(n);
  for (const Edge& e : edges) x.flip(e.u, e.v);
  return x;
}

EdgeVector EdgeVector::from_graph(const Graph& g) {
  return from_edges(g.num_vertices(), g.edges());
}

bool EdgeVector::test(Vertex a, Vertex b) const {
  std::size_t i = pair_index(n_, a, b);
  return (words_[i / 64] >> (i % 64)) & 1U;
}

void EdgeVector::flip(Vertex a, Vertex b) {
  std::size_t i = pair_index(n_, a, b);
  words_[i / 64] ^= std::uint64_t{1} << (i % 64);
}

std::size_t EdgeVector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Edge> EdgeVector::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < bits_; ++i)
    if ((words_[i / 64] >> (i % 64)) & 1U) out.push_back(pair_at(n_, i));
  return out;
}

EdgeVector& EdgeVector::operator^=(const EdgeVector& o) {
  if (o.n_ != n_) throw std::invalid_argument("edge vector universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

EdgeVector xor_edges(const EdgeVector& a, const EdgeVector& b) {
  EdgeVector r = a;
  r ^= b;
  return r;
}

}  // namespace oddcover
