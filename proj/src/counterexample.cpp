#include "oddcover/counterexample.hpp"

#include <algorithm>
#include <stdexcept>

#include "oddcover/errors.hpp"

namespace oddcover {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

Cycle walk_cycle(int n, const std::vector<Edge>& es) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : es) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  Cycle c;
  Vertex prev = -1, cur = 0;
  do {
    ensure(adj[cur].size() == 2, "Walecki cycle vertex without degree two");
    c.vertices.push_back(cur);
    const Vertex next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    prev = cur;
    cur = next;
  } while (cur != 0);
  ensure(static_cast<int>(c.vertices.size()) == n, "Walecki cycle is not Hamiltonian");
  return c;
}

// the cycle opened at edge {a, b}, running from a to b
Path open_at(const Cycle& c, Vertex a, Vertex b) {
  const auto& vs = c.vertices;
  const std::size_t n = vs.size();
  const std::size_t ia = std::find(vs.begin(), vs.end(), a) - vs.begin();
  const bool b_next = vs[(ia + 1) % n] == b;
  ensure(b_next || vs[(ia + n - 1) % n] == b, "edge is not on the cycle");
  Path p;
  for (std::size_t s = 0; s < n; ++s) p.vertices.push_back(vs[b_next ? (ia + n - s) % n : (ia + s) % n]);
  return p;
}

Path shifted(const Path& p, int by) {
  Path q = p;
  for (Vertex& v : q.vertices) v += by;
  return q;
}

}  // namespace

std::vector<Cycle> walecki_cycles(int k) {
  if (k < 1) throw std::invalid_argument("Walecki decomposition needs k >= 1");
  const int m = 2 * k, inf = 2 * k;
  std::vector<Cycle> out;
  for (int i = 0; i < k; ++i) {
    std::vector<Edge> es;
    for (int j = 0; j < m; ++j) {
      if (j != i && j != i + k) es.push_back(make_edge(j, mod(2 * i - j, m)));
      es.push_back(make_edge(j, mod(2 * i + 1 - j, m)));
    }
    es.push_back(make_edge(i, inf));
    es.push_back(make_edge(i + k, inf));
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    out.push_back(walk_cycle(m + 1, es));
  }
  return out;
}

Counterexample gen_counterexample(int k) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("counterexample needs an odd k >= 3");
  const int half = 2 * k + 1;
  const auto cycles = walecki_cycles(k);
  std::vector<Edge> removed;
  std::vector<Path> p;
  for (int i = 0; i < k; ++i) {
    const Edge e = i < k - 1 ? make_edge(0, 2 * i + 1) : make_edge(1, 2 * k - 2);
    removed.push_back(e);
    p.push_back(open_at(cycles[i], e.u, e.v));
  }
  std::vector<int> hdeg(half, 2 * k);
  for (const Edge& e : removed) {
    --hdeg[e.u];
    --hdeg[e.v];
  }
  ensure(hdeg[p[0].front()] % 2 == 0 && hdeg[p[0].back()] % 2 == 0, "P_0 has an odd endpoint");

  Counterexample cx;
  cx.k = k;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (const Edge& e : path_edges(p[i])) {
      edges.push_back(e);
      edges.push_back(make_edge(e.u + half, e.v + half));
    }
  cx.paths = {p[0], shifted(p[0], half)};
  cx.forests.push_back({});
  for (const Path& x : cx.paths) {
    auto es = path_edges(x);
    cx.forests[0].insert(cx.forests[0].end(), es.begin(), es.end());
  }
  for (int i = 1; i < k; ++i) {
    // orient P_i to end at its odd endpoint, cross, and come back along the copy
    Path pi = p[i];
    if (hdeg[pi.back()] % 2 == 0) pi = reversed(pi);
    const Vertex j = pi.back();
    ensure(hdeg[j] % 2 == 1 && hdeg[pi.front()] % 2 == 0, "P_i lacks exactly one odd endpoint");
    edges.push_back(make_edge(j, j + half));
    Path q = pi;
    const Path back = reversed(shifted(pi, half));
    q.vertices.insert(q.vertices.end(), back.vertices.begin(), back.vertices.end());
    cx.paths.push_back(q);
    cx.forests.push_back(path_edges(q));
  }
  for (auto& f : cx.forests) std::sort(f.begin(), f.end());
  cx.g = Graph(2 * half, edges);
  ensure(static_cast<std::int64_t>(cx.g.num_edges()) == 4LL * k * k + k - 1, "edge count differs from 4k^2 + k - 1");
  ensure(cx.g.all_even() && cx.g.max_degree() == 2 * k, "graph is not Eulerian of degree 2k");
  ensure(verify_cover(OddCover::of_paths(cx.g, cx.paths)).valid(), "path witness does not verify");
  cx.iso = iso_cover_from_forests(cx.g, cx.forests);
  ensure(static_cast<int>(cx.iso.cover.count()) == k, "isolated-vertex cover is not k paths");
  cx.needed = static_cast<std::int64_t>(cx.g.num_edges()) + 2;
  cx.available = static_cast<std::int64_t>(k) * (cx.g.num_vertices() - 1);
  return cx;
}

}  // namespace oddcover
