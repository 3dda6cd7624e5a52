#include "oddcover/iso.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "oddcover/errors.hpp"

namespace oddcover {

namespace {

Path ending_at(Path p, Vertex end) { return p.back() == end ? p : reversed(std::move(p)); }

// linear forest components as paths; throws if not a linear forest
std::vector<Path> forest_paths(int n, const std::vector<Edge>& es) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : es) {
    if (e.u < 0 || e.v >= n || e.u >= e.v) throw std::invalid_argument("forest edge out of range");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (const auto& a : adj)
    if (a.size() > 2) throw std::invalid_argument("forest vertex of degree above two");
  std::vector<bool> done(n, false);
  std::vector<Path> out;
  std::size_t covered = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (done[s] || adj[s].size() != 1) continue;
    Path p{{s}};
    done[s] = true;
    for (Vertex prev = -1, cur = s;;) {
      Vertex next = -1;
      for (Vertex y : adj[cur])
        if (y != prev) next = y;
      if (next < 0) break;
      p.vertices.push_back(next);
      done[next] = true;
      prev = cur;
      cur = next;
    }
    covered += p.length();
    out.push_back(std::move(p));
  }
  if (covered != es.size()) throw std::invalid_argument("forest contains a cycle");
  return out;
}

struct Ref {
  int forest;
  int index;
  bool operator==(const Ref&) const = default;
};

std::vector<Ref> ends_at(const IsoState& s, Vertex x) {
  std::vector<Ref> out;
  for (int f = 0; f < static_cast<int>(s.forests.size()); ++f)
    for (int i = 0; i < static_cast<int>(s.forests[f].size()); ++i) {
      const Path& p = s.forests[f][i];
      if (p.front() == x || p.back() == x) out.push_back({f, i});
    }
  return out;
}

const Path& at(const IsoState& s, Ref r) { return s.forests[r.forest][r.index]; }

IsoState apply_meet(const IsoState& s, Vertex u, Vertex v, Ref p, Ref pp, Ref q, Ref r) {
  IsoState out = s;
  const Vertex w = out.num_vertices++;
  Path merged = ending_at(at(s, p), u);
  merged.vertices.push_back(w);
  const Path tail = reversed(ending_at(at(s, pp), v));
  merged.vertices.insert(merged.vertices.end(), tail.vertices.begin(), tail.vertices.end());
  Path qx = ending_at(at(s, q), u);
  qx.vertices.push_back(w);
  Path rx = ending_at(at(s, r), v);
  rx.vertices.push_back(w);
  std::vector<std::pair<Ref, Path>> repl{{p, merged}, {q, qx}};
  std::vector<Ref> drop{pp};
  if (q.forest == r.forest) {
    // Q and R become one path through w
    const Path rr = reversed(rx);
    qx.vertices.insert(qx.vertices.end(), rr.vertices.begin() + 1, rr.vertices.end());
    repl[1].second = qx;
    drop.push_back(r);
  } else {
    repl.push_back({r, rx});
  }
  for (auto& [ref, path] : repl) out.forests[ref.forest][ref.index] = path;
  std::sort(drop.begin(), drop.end(), [](Ref a, Ref b) { return a.index > b.index; });
  for (Ref d : drop) out.forests[d.forest].erase(out.forests[d.forest].begin() + d.index);
  ensure(iso_edges(out) == iso_edges(s), "meet changed the XOR of the forests");
  return out;
}

}  // namespace

IsoState iso_state(const Graph& g, const LinearForests& forests) {
  if (!g.all_even()) throw std::invalid_argument("graph has odd-degree vertices");
  std::vector<Edge> all;
  for (const auto& f : forests)
    for (const Edge& e : f) all.push_back(make_edge(e.u, e.v));
  std::sort(all.begin(), all.end());
  if (all != g.edges()) throw std::invalid_argument("forests do not partition the edges");
  IsoState s{g.num_vertices(), g.num_vertices(), {}};
  for (const auto& f : forests) {
    std::vector<Edge> norm;
    for (const Edge& e : f) norm.push_back(make_edge(e.u, e.v));
    s.forests.push_back(forest_paths(g.num_vertices(), norm));
  }
  return s;
}

std::vector<Edge> iso_edges(const IsoState& s) {
  std::vector<Edge> all;
  for (const auto& f : s.forests)
    for (const Path& p : f) {
      auto es = path_edges(p);
      all.insert(all.end(), es.begin(), es.end());
    }
  return xor_edge_lists(std::move(all));
}

IsoState meet(const IsoState& s, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("meet needs two distinct vertices");
  const auto at_u = ends_at(s, u), at_v = ends_at(s, v);
  for (Ref p : at_u)
    for (Ref pp : at_v) {
      if (p.forest != pp.forest || p.index == pp.index) continue;
      for (Ref q : at_u)
        for (Ref r : at_v) {
          if (q.forest == p.forest || r.forest == p.forest || q == r) continue;
          return apply_meet(s, u, v, p, pp, q, r);
        }
    }
  throw std::invalid_argument("meet needs paths P, P' of one forest and distinct partners at u and v");
}

IsoCover iso_cover_from_forests(const Graph& g, const LinearForests& forests) {
  IsoState s = iso_state(g, forests);
  for (std::size_t f = 0; f < s.forests.size(); ++f) {
    while (s.forests[f].size() > 1) {
      const Path& p1 = s.forests[f][0];
      const Path& p2 = s.forests[f][1];
      bool done = false;
      for (Vertex u : {p1.front(), p1.back()}) {
        for (Vertex v : {p2.front(), p2.back()}) {
          try {
            s = meet(s, u, v);
            done = true;
          } catch (const std::invalid_argument&) {
          }
          if (done) break;
        }
        if (done) break;
      }
      ensure(done, "no admissible meet between two components of a forest");
    }
  }
  std::vector<Path> paths;
  for (const auto& f : s.forests)
    if (!f.empty()) paths.push_back(f.front());
  const int added = s.num_vertices - g.num_vertices();
  OddCover cover = OddCover::of_paths(g.with_isolated(added), paths);
  ensure(verify_cover(cover).valid(), "isolated-vertex cover does not verify");
  return {std::move(cover), added};
}

TwoPaths two_path_cover_la2(const Graph& g, const std::vector<Edge>& f1, const std::vector<Edge>& f2) {
  if (g.num_edges() == 0) throw std::invalid_argument("empty graph has no two-path cover");
  IsoState st = iso_state(g, {f1, f2});
  if (st.forests[0].empty() || st.forests[1].empty()) throw std::invalid_argument("a forest is empty");
  PathKSystem sys{g.num_vertices(), st.forests, {}};
  if (!is_well_distributed(sys)) throw std::invalid_argument("forests do not form a path 2-system");
  while (sys.collections[0].size() > 1) {
    const Path& p = sys.collections[0][0];
    const Vertex v = p.front(), u = p.back();
    Vertex w = -1;
    for (const Path& q : sys.collections[1])
      if (q.front() == v || q.back() == v) w = q.front() == v ? q.back() : q.front();
    const Path& pp = sys.collections[0][1];
    const Vertex x = (pp.front() != u && pp.front() != v && pp.front() != w) ? pp.front() : pp.back();
    sys = join(sys, v, x);
  }
  ensure(sys.collections[1].size() == 1, "collections shrank unevenly");
  TwoPaths tp{sys.collections[0][0], sys.collections[1][0]};
  OddCover c = OddCover::of_paths(g, {tp.p, tp.q});
  ensure(verify_cover(c).valid(), "two-path cover does not verify");
  return tp;
}

IsoCover cycle_iso_cover(const Graph& g, const LinearForests& forests) {
  IsoCover base = iso_cover_from_forests(g, forests);
  const Vertex apex = base.cover.target.num_vertices();
  std::vector<Cycle> cycles;
  for (const auto& m : base.cover.members) {
    Cycle c{m};
    c.vertices.push_back(apex);
    cycles.push_back(std::move(c));
  }
  const int added = base.added + 1;
  OddCover cover = OddCover::of_cycles(g.with_isolated(added), cycles);
  ensure(verify_cover(cover).valid(), "apex cycle cover does not verify");
  return {std::move(cover), added};
}

IsoGeneralResult iso_cover_general(const Graph& g) {
  const auto prof = degree_profile(g);
  IsoReport rep;
  rep.budget = iso_budget(g);
  if ((prof.v_odd == 4 && prof.max_degree <= 2) || rep.budget.d < 0) {
    rep.branch = rep.budget.d < 0 ? "odd-dominated" : "two-path";
    OddCover c = path_odd_cover(g);
    rep.matching_paths = static_cast<int>(c.count());
    return {{std::move(c), 0}, rep};
  }
  const Matching m = odd_matching(g);
  const int t = rep.budget.t;
  ensure(detail::rounds_for(m.size()) == t, "round count disagrees with the budget");
  auto layers = peel_cycle_layers(xor_with(g, m));
  std::vector<CycleSet> head(layers.begin(), layers.begin() + std::min<std::size_t>(t, layers.size()));
  head.resize(t);
  std::vector<Path> paths = detail::integrate_matching(head, m);
  rep.matching_paths = static_cast<int>(paths.size());

  std::vector<Edge> rest;
  for (std::size_t i = t; i < layers.size(); ++i) {
    auto es = layers[i].edges();
    rest.insert(rest.end(), es.begin(), es.end());
  }
  std::sort(rest.begin(), rest.end());
  const Graph residual(g.num_vertices(), rest);
  rep.residual_degree = residual.max_degree();

  // exhaustive linear arboricity on the residual's non-isolated vertices when small
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (residual.degree(v) > 0) keep.push_back(v);
  int added = 0;
  if (!rest.empty() && keep.size() <= 10) {
    std::vector<int> local(g.num_vertices(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
    std::vector<Edge> small;
    for (const Edge& e : rest) small.push_back(make_edge(local[e.u], local[e.v]));
    const Graph sg(static_cast<int>(keep.size()), small);
    std::optional<LinearForests> fs;
    try {
      for (int k = (sg.max_degree() + 1) / 2; k <= sg.max_degree() && !fs; ++k) fs = exact_linear_forests(sg, k, 2'000'000);
    } catch (const BudgetExceeded&) {
      fs.reset();
    }
    if (fs) {
      LinearForests global;
      for (const auto& f : *fs) {
        std::vector<Edge> gf;
        for (const Edge& e : f) gf.push_back(make_edge(keep[e.u], keep[e.v]));
        global.push_back(gf);
      }
      IsoCover ic = iso_cover_from_forests(residual, global);
      added = ic.added;
      rep.residual_exact = true;
      rep.residual_paths = static_cast<int>(ic.cover.count());
      for (const auto& mbr : ic.cover.members) paths.push_back(Path{mbr});
    }
  }
  if (!rest.empty() && !rep.residual_exact) {
    for (std::size_t i = t; i < layers.size(); ++i)
      if (!layers[i].empty()) {
        TwoPaths tp = cover_cycles(layers[i]);
        paths.push_back(tp.p);
        paths.push_back(tp.q);
        rep.residual_paths += 2;
      }
  }
  rep.branch = rest.empty() || rep.residual_exact ? "forests" : "layer-fallback";
  OddCover cover = OddCover::of_paths(g.with_isolated(added), paths);
  ensure(verify_cover(cover).valid(), "general isolated-vertex cover does not verify");
  return {{std::move(cover), added}, rep};
}

}  // namespace oddcover
