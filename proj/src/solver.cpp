#include "oddcover/solver.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>
#include <variant>

#include "oddcover/errors.hpp"
#include "oddcover/two_path_kit.hpp"

namespace oddcover {

namespace {

int even_ceil(int x) { return 2 * ((x + 1) / 2); }

void append(std::vector<Path>& out, const TwoPaths& tp) {
  out.push_back(tp.p);
  out.push_back(tp.q);
}

void check_matching(const Graph& g, const Matching& m) {
  std::vector<bool> seen(g.num_vertices(), false);
  for (const Edge& f : m) {
    for (Vertex x : {f.u, f.v})
      if (x < 0 || x >= g.num_vertices()) throw std::invalid_argument("matching edge out of range");
    if (f.u == f.v) throw std::invalid_argument("matching edge is a loop");
    if (seen[f.u] || seen[f.v]) throw std::invalid_argument("matching edges share a vertex");
    seen[f.u] = seen[f.v] = true;
  }
}

OddCover finish(const Graph& g, std::vector<Path> paths, const char* who) {
  OddCover c = OddCover::of_paths(g, paths);
  if (!verify_cover(c).valid()) throw InternalError(std::string(who) + " produced an invalid cover");
  return c;
}

}  // namespace

SolveBudget iso_budget(const Graph& g) {
  const auto prof = degree_profile(g);
  SolveBudget b;
  b.delta_e = even_ceil(prof.max_degree);
  b.t = (prof.v_odd == 4 && prof.max_degree >= 3) ? 2 : (prof.v_odd + 3) / 4;
  b.d = b.delta_e - 2 * b.t;
  return b;
}

std::pair<Path, Graph> peel_odd_path(const Graph& g) {
  const auto prof = degree_profile(g);
  if (prof.v_odd == 0) throw std::invalid_argument("graph has no odd-degree vertices");
  Vertex s = prof.odd_vertices.front();
  for (Vertex v : prof.odd_vertices)
    if (g.degree(v) < g.degree(s)) s = v;
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<Vertex> parent(g.num_vertices(), -1);
  std::deque<Vertex> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  // lowest degree first, then nearest, then smallest id
  Vertex target = -1;
  for (Vertex v : prof.odd_vertices) {
    if (v == s || dist[v] < 0) continue;
    if (target < 0 || std::pair{g.degree(v), dist[v]} < std::pair{g.degree(target), dist[target]}) target = v;
  }
  ensure(target >= 0, "odd vertex without an odd partner in its component");
  Path p;
  for (Vertex x = target; x >= 0; x = parent[x]) p.vertices.push_back(x);
  std::reverse(p.vertices.begin(), p.vertices.end());
  const auto es = path_edges(p);
  return {p, remove_edges(g, es)};
}

OddCover cover_first_bound(const Graph& g) {
  std::vector<Path> paths;
  Graph cur = g;
  while (!cur.all_even()) {
    auto [p, rest] = peel_odd_path(cur);
    paths.push_back(std::move(p));
    cur = std::move(rest);
  }
  for (const CycleSet& layer : peel_cycle_layers(cur))
    if (!layer.empty()) append(paths, cover_cycles(layer));
  return finish(g, std::move(paths), "cover_first_bound");
}

namespace detail {

int rounds_for(std::size_t matching_size) {
  return matching_size == 2 ? 2 : static_cast<int>((matching_size + 1) / 2);
}

std::vector<Path> integrate_matching(const std::vector<CycleSet>& layers, const Matching& m) {
  const int t = rounds_for(m.size());
  ensure(static_cast<int>(layers.size()) >= t, "fewer layers than integration rounds");
  std::vector<Edge> rest(m.begin(), m.end());
  std::vector<Path> out;
  const bool two_singles = m.size() == 2;
  auto one_edge = [&](const CycleSet& c, Edge f) {
    if (c.empty()) {
      out.push_back(Path{{f.u, f.v}});
    } else {
      append(out, integrate_one_edge(c, f));
    }
  };
  std::size_t i = 0;
  while (i < layers.size()) {
    const CycleSet& c = layers[i];
    const std::size_t s = rest.size();
    if (s >= 5 || s == 3) {
      auto pick = choose_integrable_pair(c, {rest[0], rest[1], rest[2]});
      append(out, pick.paths);
      const auto [a, b] = pick.pair;
      rest.erase(rest.begin() + b);
      rest.erase(rest.begin() + a);
      ++i;
    } else if (s == 4) {
      ensure(i + 1 < layers.size(), "four edges left for the last layer");
      auto four = integrate_four_edges(c, layers[i + 1], {rest[0], rest[1], rest[2], rest[3]});
      out.insert(out.end(), four.begin(), four.end());
      rest.clear();
      i += 2;
    } else if (s == 2) {
      ensure(two_singles && i == 0, "two edges left after the first round");
      one_edge(c, rest[0]);
      one_edge(layers[1], rest[1]);
      rest.clear();
      i += 2;
    } else if (s == 1) {
      one_edge(c, rest[0]);
      rest.clear();
      ++i;
    } else {
      if (!c.empty()) append(out, cover_cycles(c));
      ++i;
    }
  }
  ensure(rest.empty(), "matching edges left over");
  return out;
}

}  // namespace detail

OddCover cover_eulerian_plus_matching(const Graph& g_prime, const Matching& m) {
  if (!g_prime.all_even()) throw std::invalid_argument("graph has odd-degree vertices");
  check_matching(g_prime, m);
  const int t = detail::rounds_for(m.size());
  if (!m.empty() && g_prime.max_degree() > 2 * t)
    throw std::invalid_argument("maximum degree exceeds 2t");
  auto layers = peel_cycle_layers(g_prime);
  if (static_cast<int>(layers.size()) < t) layers.resize(t);
  Graph target = xor_with(g_prime, m);
  return finish(target, detail::integrate_matching(layers, m), "cover_eulerian_plus_matching");
}

OddCover path_odd_cover(const Graph& g) {
  std::vector<Path> paths;
  Graph cur = g;
  for (;;) {
    const auto prof = degree_profile(cur);
    if (prof.v_odd / 2 <= even_ceil(prof.max_degree)) break;
    auto [p, rest] = peel_odd_path(cur);
    paths.push_back(std::move(p));
    cur = std::move(rest);
  }
  const Matching m = odd_matching(cur);
  const Graph eul = xor_with(cur, m);
  auto layers = peel_cycle_layers(eul);
  if (m.size() == 2 && cur.max_degree() <= 2) {
    ensure(layers.size() <= 1, "cycles of the Eulerized graph overlap");
    const CycleSet c = layers.empty() ? CycleSet{} : layers.front();
    auto res = integrate_two_edges(c, m[0], m[1]);
    ensure(std::holds_alternative<TwoPaths>(res), "disjoint-cycles case hit the exceptional configuration");
    append(paths, std::get<TwoPaths>(res));
  } else {
    const int t = detail::rounds_for(m.size());
    if (static_cast<int>(layers.size()) < t) layers.resize(t);
    auto more = detail::integrate_matching(layers, m);
    paths.insert(paths.end(), more.begin(), more.end());
  }
  return finish(g, std::move(paths), "path_odd_cover");
}

OddCover cycle_odd_cover(const Graph& g) {
  if (!g.all_even()) throw std::invalid_argument("graph has odd-degree vertices");
  std::vector<Cycle> cycles;
  for (const CycleSet& layer : peel_cycle_layers(g)) {
    if (layer.empty()) continue;
    const TwoPaths tp = cover_cycles(layer);
    Path p = tp.p, q = tp.q;
    if (p.front() != q.front()) q = reversed(q);
    ensure(p.front() == q.front() && p.back() == q.back(), "layer paths do not share endpoints");
    for (const Path& x : {p, q})
      if (x.length() >= 2) cycles.push_back(Cycle{x.vertices});
  }
  OddCover c = OddCover::of_cycles(g, cycles);
  ensure(verify_cover(c).valid(), "cycle_odd_cover produced an invalid cover");
  return c;
}

}  // namespace oddcover
