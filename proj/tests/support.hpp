#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "oddcover/cover.hpp"
#include "oddcover/cycles.hpp"
#include "oddcover/graph.hpp"

namespace testing_support {

using namespace oddcover;

inline Graph graph_of(int n, std::vector<std::pair<int, int>> es) {
  std::vector<Edge> edges;
  for (auto [a, b] : es) edges.push_back(make_edge(a, b));
  return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, es);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph(n, es);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.push_back({i, j});
  return Graph(n, es);
}

// XOR of a few random cycles; all degrees even
inline Graph random_eulerian(int n, std::mt19937_64& rng) {
  std::map<Edge, int> cnt;
  std::uniform_int_distribution<int> rounds(1, std::max(1, n));
  const int r = rounds(rng);
  for (int t = 0; t < r && n >= 3; ++t) {
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::shuffle(vs.begin(), vs.end(), rng);
    std::uniform_int_distribution<int> len(3, n);
    const int l = len(rng);
    for (int i = 0; i < l; ++i) cnt[make_edge(vs[i], vs[(i + 1) % l])] ^= 1;
  }
  std::vector<Edge> es;
  for (auto [e, c] : cnt)
    if (c) es.push_back(e);
  return Graph(n, es);
}

// independent parity count of member edges, compared with the target
inline bool parity_matches(const Graph& g, const std::vector<std::vector<Vertex>>& members, bool cyclic) {
  std::map<std::pair<int, int>, int> cnt;
  for (const auto& m : members) {
    const std::size_t k = m.size();
    const std::size_t stop = cyclic ? k : k - 1;
    for (std::size_t i = 0; i < stop; ++i) {
      int a = m[i], b = m[(i + 1) % k];
      if (a > b) std::swap(a, b);
      ++cnt[{a, b}];
    }
  }
  for (const auto& e : g.edges())
    if (cnt[{e.u, e.v}] % 2 != 1) return false;
  for (auto [p, c] : cnt)
    if (c % 2 == 1 && !g.has_edge(p.first, p.second)) return false;
  return true;
}

// random vertex-disjoint cycles inside 0..n-1
inline CycleSet random_cycle_set(int n, std::mt19937_64& rng, int max_cycles = 4) {
  std::vector<int> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::shuffle(vs.begin(), vs.end(), rng);
  CycleSet c;
  std::size_t at = 0;
  std::uniform_int_distribution<int> count(1, max_cycles);
  const int want = count(rng);
  for (int i = 0; i < want; ++i) {
    const int left = n - static_cast<int>(at);
    if (left < 3) break;
    std::uniform_int_distribution<int> len(3, std::min(left, 7));
    const int l = len(rng);
    Cycle z;
    for (int j = 0; j < l; ++j) z.vertices.push_back(vs[at++]);
    c.cycles.push_back(z);
  }
  return c;
}

// components of a cycle after deleting some of its vertices
inline std::vector<std::vector<Vertex>> cycle_pieces(const Cycle& c, const std::vector<Vertex>& removed) {
  auto gone = [&](Vertex v) { return std::find(removed.begin(), removed.end(), v) != removed.end(); };
  const std::size_t k = c.vertices.size();
  std::size_t start = 0;
  while (start < k && !gone(c.vertices[start])) ++start;
  std::vector<std::vector<Vertex>> pieces;
  if (start == k) return {c.vertices};
  std::vector<Vertex> cur;
  for (std::size_t i = 1; i <= k; ++i) {
    Vertex v = c.vertices[(start + i) % k];
    if (gone(v)) {
      if (!cur.empty()) pieces.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(v);
    }
  }
  return pieces;
}

// demarcation test done through components rather than cyclic positions
inline bool brute_exceptional(const CycleSet& cs, Edge f1, Edge f2) {
  if (cs.size() < 2) return false;
  for (const auto& c : cs.cycles) {
    auto on = [&](Vertex v) { return std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end(); };
    if (!on(f1.u) || !on(f1.v) || !on(f2.u) || !on(f2.v)) continue;
    auto halves = cycle_pieces(c, {f1.u, f1.v});
    int side_u = -1, side_v = -1;
    for (std::size_t i = 0; i < halves.size(); ++i) {
      if (std::find(halves[i].begin(), halves[i].end(), f2.u) != halves[i].end()) side_u = static_cast<int>(i);
      if (std::find(halves[i].begin(), halves[i].end(), f2.v) != halves[i].end()) side_v = static_cast<int>(i);
    }
    if (side_u == side_v) continue;
    if (cycle_pieces(c, {f1.u, f1.v, f2.u, f2.v}).size() <= 1) return true;
  }
  return false;
}

}  // namespace testing_support
