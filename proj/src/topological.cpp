#include "oddcover/topological.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "oddcover/errors.hpp"
#include "oddcover/two_path_kit.hpp"

namespace oddcover {

namespace {

int target_k(const Graph& g) {
  const auto prof = degree_profile(g);
  return std::max(prof.v_odd / 2, (prof.max_degree + 1) / 2);
}

std::vector<std::vector<Vertex>> identity_chains(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

std::vector<std::vector<Vertex>> tripled_chains(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<Vertex>> out;
  for (int i = 0; i < static_cast<int>(g.num_edges()); ++i) {
    const Edge e = g.edges()[i];
    out.push_back({e.u, n + 2 * i, n + 2 * i + 1, e.v});
  }
  return out;
}

Graph chain_graph(int n, const std::vector<std::vector<Vertex>>& chains) {
  std::vector<Edge> es;
  for (const auto& c : chains)
    for (std::size_t i = 0; i + 1 < c.size(); ++i) es.push_back(make_edge(c[i], c[i + 1]));
  return Graph(n, es);
}

// components of one colour class, each a path, listed from its smaller end
std::vector<Path> class_paths(int n, const std::vector<Edge>& es) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : es) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> done(n, false);
  std::vector<Path> out;
  for (Vertex s = 0; s < n; ++s) {
    if (done[s] || adj[s].size() != 1) continue;
    Path p{{s}};
    done[s] = true;
    Vertex prev = -1, cur = s;
    for (;;) {
      Vertex next = -1;
      for (Vertex y : adj[cur])
        if (y != prev) next = y;
      if (next < 0) break;
      ensure(!done[next], "colour class is not a linear forest");
      p.vertices.push_back(next);
      done[next] = true;
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(p));
  }
  for (Vertex s = 0; s < n; ++s) ensure(done[s] || adj[s].empty(), "colour class contains a cycle");
  return out;
}

TopologicalCover finish(const PathKSystem& sys, std::vector<std::vector<Vertex>> chains,
                        CoverKind kind, const std::vector<std::vector<Vertex>>& members) {
  chains = apply_subdivisions(std::move(chains), sys.subdivisions);
  Graph h = chain_graph(sys.num_vertices, chains);
  OddCover cover{h, kind, members};
  ensure(verify_cover(cover).valid(), "topological cover does not verify");
  return {std::move(h), std::move(cover), std::move(chains)};
}

}  // namespace

bool is_topological_exception(const Graph& g) {
  if (g.max_degree() > 2) return false;
  int cycles = 0, paths = 0;
  for (const auto& comp : edge_components(g)) {
    const bool cyc = std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return g.degree(v) == 2; });
    (cyc ? cycles : paths) += 1;
  }
  return cycles >= 1 && paths <= 1;
}

PathKSystem coloured_system(const Graph& g) {
  const int n = g.num_vertices();
  const int k = target_k(g);
  if (k < 2) throw std::invalid_argument("colouring needs k >= 2");
  const auto prof = degree_profile(g);
  std::vector<int> odd_rank(n, -1);
  for (int i = 0; i < static_cast<int>(prof.odd_vertices.size()); ++i) odd_rank[prof.odd_vertices[i]] = i;

  std::map<Edge, int> edge_index;
  for (int i = 0; i < static_cast<int>(g.num_edges()); ++i) edge_index[g.edges()[i]] = i;
  // stub colour at the u end and at the v end of each edge
  std::vector<int> at_u(g.num_edges(), -1), at_v(g.num_edges(), -1);
  for (Vertex x = 0; x < n; ++x) {
    const auto& nb = g.neighbors(x);
    std::vector<int> colours;
    int special = -1;
    if (odd_rank[x] >= 0) {
      special = odd_rank[x] % k;
      colours.push_back(special);
    }
    for (int c = 0; c < k && colours.size() < nb.size(); ++c) {
      if (c == special) continue;
      colours.push_back(c);
      if (colours.size() < nb.size()) colours.push_back(c);
    }
    ensure(colours.size() == nb.size(), "not enough colours for the stubs");
    for (std::size_t s = 0; s < nb.size(); ++s) {
      const Edge e = make_edge(x, nb[s]);
      const int idx = edge_index.at(e);
      (e.u == x ? at_u : at_v)[idx] = colours[s];
    }
  }

  std::vector<std::vector<Edge>> classes(k);
  const auto chains = tripled_chains(g);
  for (int i = 0; i < static_cast<int>(g.num_edges()); ++i) {
    const auto& c = chains[i];
    const int cu = at_u[i], cv = at_v[i];
    int mid = cu;
    if (cu == cv) mid = cu == 0 ? 1 : 0;
    classes[cu].push_back(make_edge(c[0], c[1]));
    classes[mid].push_back(make_edge(c[1], c[2]));
    classes[cv].push_back(make_edge(c[2], c[3]));
  }
  PathKSystem sys;
  sys.num_vertices = n + 2 * static_cast<int>(g.num_edges());
  for (const auto& es : classes) sys.collections.push_back(class_paths(sys.num_vertices, es));
  ensure(is_well_distributed(sys), "colouring did not give a well-distributed system");
  return sys;
}

std::vector<std::vector<Vertex>> apply_subdivisions(std::vector<std::vector<Vertex>> chains,
                                                    const std::vector<Subdivision>& log) {
  for (const Subdivision& s : log) {
    bool placed = false;
    for (auto& c : chains) {
      for (std::size_t i = 0; i + 1 < c.size() && !placed; ++i)
        if (make_edge(c[i], c[i + 1]) == make_edge(s.a, s.b)) {
          c.insert(c.begin() + static_cast<long>(i) + 1, s.middle);
          placed = true;
        }
      if (placed) break;
    }
    ensure(placed, "subdivided edge not found on any chain");
  }
  return chains;
}

bool is_subdivision_of(const Graph& h, const Graph& g, const std::vector<std::vector<Vertex>>& chains) {
  if (chains.size() != g.num_edges() || h.num_vertices() < g.num_vertices()) return false;
  std::vector<int> inner_uses(h.num_vertices(), 0);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const auto& c = chains[i];
    if (c.size() < 2) return false;
    if (make_edge(c.front(), c.back()) != g.edges()[i]) return false;
    for (std::size_t j = 1; j + 1 < c.size(); ++j) {
      if (c[j] < g.num_vertices()) return false;
      ++inner_uses[c[j]];
    }
    for (std::size_t j = 0; j + 1 < c.size(); ++j) es.push_back(make_edge(c[j], c[j + 1]));
  }
  if (std::any_of(inner_uses.begin(), inner_uses.end(), [](int x) { return x > 1; })) return false;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  return es == h.edges();
}

TopologicalCover topological_cover(const Graph& g) {
  if (is_topological_exception(g))
    throw std::invalid_argument("disjoint cycles with at most one path have no topological cover of the bound");
  const int k = target_k(g);
  if (k == 0) return {g, OddCover::of_paths(g, {}), {}};
  if (k == 1) {
    const auto paths = class_paths(g.num_vertices(), g.edges());
    ensure(paths.size() == 1, "k = 1 graph is not a single path");
    OddCover c = OddCover::of_paths(g, paths);
    ensure(verify_cover(c).valid(), "single path cover does not verify");
    return {g, c, identity_chains(g)};
  }
  PathKSystem sys = reduce_system(coloured_system(g));
  ensure(sys.total_paths() == static_cast<std::size_t>(k), "reduction left extra paths");
  std::vector<std::vector<Vertex>> members;
  for (const auto& c : sys.collections) members.push_back(c.front().vertices);
  return finish(sys, tripled_chains(g), CoverKind::path, members);
}

TopologicalCover cycle_top_cover(const Graph& g) {
  if (!g.all_even()) throw std::invalid_argument("graph has odd-degree vertices");
  if (g.num_edges() == 0) return {g, OddCover::of_cycles(g, {}), {}};
  if (g.max_degree() == 2) {
    const auto comps = edge_components(g);
    if (comps.size() > 1) throw std::invalid_argument("two or more disjoint cycles are excluded");
    Cycle c;
    Vertex prev = -1, cur = comps.front().front();
    do {
      c.vertices.push_back(cur);
      const auto& nb = g.neighbors(cur);
      const Vertex next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    } while (cur != c.vertices.front());
    return {g, OddCover::of_cycles(g, {c}), identity_chains(g)};
  }
  PathKSystem sys = reduce_system(coloured_system(g));
  std::vector<Path> open;
  for (const auto& c : sys.collections) open.push_back(c.front());
  std::vector<std::vector<Vertex>> cycles;
  auto close = [&](const Path& p) {
    if (p.length() >= 2) cycles.push_back(p.vertices);
  };
  auto ending = [&](Vertex x, std::size_t self) {
    for (std::size_t i = 0; i < open.size(); ++i)
      if (i != self && (open[i].front() == x || open[i].back() == x)) return i;
    throw InternalError("open path endpoint has no partner");
  };
  while (!open.empty()) {
    const Path p = open.front();
    const Vertex u = p.front(), v = p.back();
    const std::size_t a = ending(u, 0), b = ending(v, 0);
    if (a == b) {
      close(p);
      close(open[a]);
      open.erase(open.begin() + static_cast<long>(a));
      open.erase(open.begin());
      continue;
    }
    // subdivide a's terminal edge at u, hand z'u to b and close p through uv
    Path pa = open[a].back() == u ? open[a] : reversed(open[a]);
    const Vertex z = pa.vertices[pa.vertices.size() - 2];
    const Vertex fresh = sys.num_vertices++;
    sys.subdivisions.push_back({z, u, fresh});
    pa.vertices.back() = fresh;
    Path pb = open[b].front() == v ? open[b] : reversed(open[b]);
    Path nb{{fresh, u}};
    nb.vertices.insert(nb.vertices.end(), pb.vertices.begin(), pb.vertices.end());
    open[a] = pa;
    open[b] = nb;
    close(p);
    open.erase(open.begin());
  }
  return finish(sys, tripled_chains(g), CoverKind::cycle, cycles);
}

}  // namespace oddcover
