#include "oddcover/cycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "bipartite_matching.hpp"
#include "oddcover/errors.hpp"

namespace oddcover {

std::vector<Edge> CycleSet::edges() const {
  std::vector<Edge> out;
  for (const auto& c : cycles) {
    auto es = cycle_edges(c);
    out.insert(out.end(), es.begin(), es.end());
  }
  return out;
}

std::vector<Vertex> CycleSet::vertices() const {
  std::vector<Vertex> out;
  for (const auto& c : cycles) out.insert(out.end(), c.vertices.begin(), c.vertices.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_vertex_disjoint(const CycleSet& c) {
  auto vs = c.vertices();
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

int cycle_of(const CycleSet& c, Vertex v) {
  for (std::size_t i = 0; i < c.cycles.size(); ++i)
    if (std::find(c.cycles[i].vertices.begin(), c.cycles[i].vertices.end(), v) !=
        c.cycles[i].vertices.end())
      return static_cast<int>(i);
  return -1;
}

Matching odd_matching(const Graph& g) {
  const auto prof = degree_profile(g);
  const int delta = prof.max_degree;
  std::vector<bool> odd(g.num_vertices(), false), used(g.num_vertices(), false);
  for (Vertex v : prof.odd_vertices) odd[v] = true;
  Matching m;
  auto pair = [&](Vertex a, Vertex b) {
    used[a] = used[b] = true;
    m.push_back(make_edge(a, b));
  };
  // max-degree odd vertices first, through existing edges where possible
  for (Vertex v : prof.odd_vertices) {
    if (used[v] || g.degree(v) != delta) continue;
    for (Vertex w : g.neighbors(v))
      if (odd[w] && !used[w]) {
        pair(v, w);
        break;
      }
  }
  for (Vertex v : prof.odd_vertices) {
    if (used[v] || g.degree(v) != delta) continue;
    for (Vertex w : prof.odd_vertices)
      if (w != v && !used[w]) {
        pair(v, w);
        break;
      }
  }
  Vertex pending = -1;
  for (Vertex v : prof.odd_vertices) {
    if (used[v]) continue;
    if (pending < 0) {
      pending = v;
    } else {
      pair(pending, v);
      pending = -1;
    }
  }
  ensure(pending < 0, "odd vertex count is odd");
  std::sort(m.begin(), m.end());
  return m;
}

Orientation balanced_orientation(const Graph& g) {
  if (!g.all_even()) throw std::invalid_argument("balanced orientation needs all degrees even");
  const int n = g.num_vertices();
  Orientation o{n, {}};
  // closed trails: walking unused edges from a vertex can only stop where it started
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> inc(n);
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    inc[es[i].u].push_back({es[i].v, i});
    inc[es[i].v].push_back({es[i].u, i});
  }
  std::vector<bool> used(es.size(), false);
  std::vector<std::size_t> ptr(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    while (true) {
      while (ptr[s] < inc[s].size() && used[inc[s][ptr[s]].second]) ++ptr[s];
      if (ptr[s] == inc[s].size()) break;
      Vertex x = s;
      do {
        while (used[inc[x][ptr[x]].second]) ++ptr[x];
        auto [y, id] = inc[x][ptr[x]];
        used[id] = true;
        o.arcs.push_back({x, y});
        x = y;
      } while (x != s);
    }
  }
  return o;
}

CycleSet max_degree_cycle_cover(const Graph& g) {
  if (!g.all_even()) throw std::invalid_argument("cycle cover needs all degrees even");
  if (g.num_edges() == 0) throw std::invalid_argument("cycle cover needs at least one edge");
  const int n = g.num_vertices();
  const int delta = g.max_degree();
  const Orientation o = balanced_orientation(g);
  std::vector<std::vector<int>> adj(n);
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != delta) adj[v].push_back(v);
  for (const Edge& a : o.arcs) adj[a.u].push_back(a.v);
  for (auto& a : adj) std::sort(a.begin(), a.end());
  const auto succ = detail::hopcroft_karp(adj, n);
  for (Vertex v = 0; v < n; ++v)
    if (succ[v] < 0) throw InternalError("bipartite graph has no perfect matching");
  CycleSet out;
  std::vector<bool> seen(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || succ[s] == s) continue;
    Cycle c;
    for (Vertex x = s; !seen[x]; x = succ[x]) {
      seen[x] = true;
      c.vertices.push_back(x);
    }
    ensure(c.vertices.size() >= 3, "matched cycle shorter than 3");
    out.cycles.push_back(std::move(c));
  }
  return out;
}

std::vector<CycleSet> peel_cycle_layers(const Graph& g) {
  if (!g.all_even()) throw std::invalid_argument("layer peeling needs all degrees even");
  std::vector<CycleSet> layers;
  Graph rest = g;
  const int rounds = g.max_degree() / 2;
  for (int i = 0; i < rounds; ++i) {
    if (rest.num_edges() == 0) {
      layers.emplace_back();
      continue;
    }
    CycleSet c = max_degree_cycle_cover(rest);
    const auto es = c.edges();
    rest = remove_edges(rest, es);
    ensure(rest.max_degree() <= g.max_degree() - 2 * (i + 1), "layer did not lower the max degree");
    layers.push_back(std::move(c));
  }
  ensure(rest.num_edges() == 0, "layers left edges behind");
  return layers;
}

}  // namespace oddcover
