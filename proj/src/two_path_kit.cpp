#include "oddcover/two_path_kit.hpp"

#include <algorithm>
#include <stdexcept>

#include "oddcover/errors.hpp"

namespace oddcover {

namespace {

using Seq = std::vector<Vertex>;
using Cycles = std::vector<Cycle>;

Cycle canonical(const Cycle& c) {
  const auto& v = c.vertices;
  const std::size_t k = v.size();
  const std::size_t i0 = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
  Cycle out;
  for (std::size_t i = 0; i < k; ++i) out.vertices.push_back(v[(i0 + i) % k]);
  if (out.vertices[k - 1] < out.vertices[1]) std::reverse(out.vertices.begin() + 1, out.vertices.end());
  return out;
}

Cycles prepare(const CycleSet& c) {
  if (!is_vertex_disjoint(c)) throw std::invalid_argument("cycles are not vertex-disjoint");
  Cycles out;
  for (const auto& z : c.cycles) {
    if (z.vertices.size() < 3) throw std::invalid_argument("cycle shorter than 3");
    out.push_back(canonical(z));
  }
  return out;
}

int pos(const Cycle& c, Vertex v) {
  auto it = std::find(c.vertices.begin(), c.vertices.end(), v);
  return it == c.vertices.end() ? -1 : static_cast<int>(it - c.vertices.begin());
}

int cyc(const Cycles& cs, Vertex v) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (pos(cs[i], v) >= 0) return static_cast<int>(i);
  return -1;
}

Seq walk(const Cycle& c, Vertex a, Vertex b, bool forward) {
  const int k = static_cast<int>(c.vertices.size());
  int i = pos(c, a);
  ensure(i >= 0 && pos(c, b) >= 0, "walk endpoints off the cycle");
  Seq s{a};
  while (c.vertices[i] != b) {
    i = forward ? (i + 1) % k : (i + k - 1) % k;
    s.push_back(c.vertices[i]);
  }
  return s;
}

bool interior_hits(const Seq& s, const Seq& avoid) {
  for (std::size_t i = 1; i + 1 < s.size(); ++i)
    if (std::find(avoid.begin(), avoid.end(), s[i]) != avoid.end()) return true;
  return false;
}

// the arc from a to b whose interior misses every vertex in avoid
Seq arc_avoiding(const Cycle& c, Vertex a, Vertex b, const Seq& avoid) {
  Seq f = walk(c, a, b, true);
  if (!interior_hits(f, avoid)) return f;
  Seq r = walk(c, a, b, false);
  ensure(!interior_hits(r, avoid), "no arc avoids the given vertices");
  return r;
}

Vertex smallest_interior(const Seq& s) {
  ensure(s.size() >= 3, "subpath has no internal vertex");
  return *std::min_element(s.begin() + 1, s.end() - 1);
}

Seq segment(const Seq& s, Vertex a, Vertex b) {
  auto ia = std::find(s.begin(), s.end(), a) - s.begin();
  auto ib = std::find(s.begin(), s.end(), b) - s.begin();
  ensure(ia < static_cast<long>(s.size()) && ib < static_cast<long>(s.size()), "segment endpoint missing");
  if (ia <= ib) return Seq(s.begin() + ia, s.begin() + ib + 1);
  Seq r(s.begin() + ib, s.begin() + ia + 1);
  std::reverse(r.begin(), r.end());
  return r;
}

Seq chain(const std::vector<Seq>& segs) {
  Seq cur;
  bool first = true;
  for (const Seq& s : segs) {
    if (s.empty()) continue;
    if (cur.empty()) {
      cur = s;
      continue;
    }
    if (first && cur.back() != s.front() && cur.back() != s.back()) std::reverse(cur.begin(), cur.end());
    first = false;
    if (s.front() == cur.back()) {
      cur.insert(cur.end(), s.begin() + 1, s.end());
    } else if (s.back() == cur.back()) {
      cur.insert(cur.end(), s.rbegin() + 1, s.rend());
    } else {
      throw InternalError("path segments do not connect");
    }
  }
  return cur;
}

Seq replace_edge(const Seq& s, Vertex a, Vertex b, Seq sub) {
  ensure(sub.front() == a && sub.back() == b, "replacement does not span the edge");
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == b && s[i + 1] == a) std::reverse(sub.begin(), sub.end());
    if ((s[i] == a && s[i + 1] == b) || (s[i] == b && s[i + 1] == a)) {
      Seq out(s.begin(), s.begin() + static_cast<long>(i));
      out.insert(out.end(), sub.begin(), sub.end());
      out.insert(out.end(), s.begin() + static_cast<long>(i) + 2, s.end());
      return out;
    }
  }
  throw InternalError("edge to replace not on path");
}

bool has_edge_seq(const Seq& s, Vertex a, Vertex b) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if ((s[i] == a && s[i + 1] == b) || (s[i] == b && s[i + 1] == a)) return true;
  return false;
}

Vertex smallest_except(const Cycle& c, const Seq& excluded) {
  Vertex best = -1;
  for (Vertex v : c.vertices)
    if (std::find(excluded.begin(), excluded.end(), v) == excluded.end() && (best < 0 || v < best)) best = v;
  ensure(best >= 0, "cycle too short for the requested choice");
  return best;
}

struct Pair {
  Seq p, q;
};

// P_1 e_1 P_2 ... P_k and Q_1 e_1 ... Q_k; P_i avoids `avoid` when it lies on C_i
Pair thread(const Cycles& cs, const Seq& xs, const Seq& ys, Vertex avoid = -1) {
  Pair out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    Seq a = walk(cs[i], xs[i], ys[i], true);
    Seq b = walk(cs[i], xs[i], ys[i], false);
    if (avoid >= 0 && std::find(a.begin(), a.end(), avoid) != a.end()) std::swap(a, b);
    out.p.insert(out.p.end(), a.begin(), a.end());
    out.q.insert(out.q.end(), b.begin(), b.end());
  }
  return out;
}

// thread with x_i, y_i the first two canonical vertices, except a pinned last endpoint
Pair thread_default(const Cycles& cs, Vertex last_y = -1) {
  Seq xs, ys;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i + 1 == cs.size() && last_y >= 0) {
      ys.push_back(last_y);
      xs.push_back(smallest_except(cs[i], {last_y}));
    } else {
      xs.push_back(cs[i].vertices[0]);
      ys.push_back(cs[i].vertices[1]);
    }
  }
  return thread(cs, xs, ys);
}

Cycles without(const Cycles& cs, std::initializer_list<int> drop) {
  Cycles out;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (std::find(drop.begin(), drop.end(), static_cast<int>(i)) == drop.end()) out.push_back(cs[i]);
  return out;
}

Seq end_at(Seq s, Vertex z) {
  if (s.back() != z) std::reverse(s.begin(), s.end());
  ensure(s.back() == z, "path does not end at the requested vertex");
  return s;
}

std::vector<Edge> cycles_edges(const Cycles& cs) {
  std::vector<Edge> out;
  for (const auto& c : cs) {
    auto es = cycle_edges(c);
    out.insert(out.end(), es.begin(), es.end());
  }
  return out;
}

std::vector<Edge> seq_edges(const Seq& s) { return path_edges(Path{s}); }

bool simple_seq(const Seq& s) {
  if (s.size() < 2) return false;
  Seq t = s;
  std::sort(t.begin(), t.end());
  return std::adjacent_find(t.begin(), t.end()) == t.end();
}

void check(const Cycles& cs, std::initializer_list<Edge> fs, const std::vector<Seq>& paths) {
  std::vector<Edge> want = cycles_edges(cs);
  Seq allowed;
  for (const auto& c : cs) allowed.insert(allowed.end(), c.vertices.begin(), c.vertices.end());
  for (const Edge& f : fs) {
    want.push_back(make_edge(f.u, f.v));
    allowed.push_back(f.u);
    allowed.push_back(f.v);
  }
  std::sort(allowed.begin(), allowed.end());
  std::vector<Edge> got;
  for (const Seq& p : paths) {
    ensure(simple_seq(p), "kit produced a non-simple path");
    for (Vertex v : p) ensure(std::binary_search(allowed.begin(), allowed.end(), v), "kit path leaves the allowed vertices");
    auto es = seq_edges(p);
    got.insert(got.end(), es.begin(), es.end());
  }
  ensure(xor_edge_lists(got) == xor_edge_lists(want), "kit paths do not odd-cover the target");
}

// both ending at z
Pair plus_one(const Cycles& cs, Vertex u, Vertex v, std::optional<Vertex> zopt) {
  const int k = static_cast<int>(cs.size());
  ensure(k >= 1, "one-edge integration needs a cycle");
  int cu = cyc(cs, u), cv = cyc(cs, v);
  Vertex z = -1;
  if (zopt) {
    z = *zopt;
  } else {
    for (int i = 0; i < k; ++i) {
      if (k >= 2 && cu >= 0 && cu == cv && i == cu) continue;
      for (Vertex w : cs[i].vertices)
        if (w != u && w != v && (z < 0 || w < z)) z = w;
    }
  }
  const int cz = cyc(cs, z);
  if (cz < 0 || z == u || z == v) throw std::invalid_argument("common endpoint must be a cycle vertex off the edge");
  if (k >= 2 && cu == cz && cv == cz)
    throw std::invalid_argument("common endpoint shares a cycle with both edge endpoints");
  if (k == 1 && cu == 0 && cv == 0) {
    const Cycle& c = cs[0];
    Seq a = walk(c, u, v, true), b = walk(c, u, v, false);
    if (std::find(a.begin(), a.end(), z) == a.end()) std::swap(a, b);
    // a holds z; b is the other arc
    Seq p1 = chain({segment(a, z, u), b});
    Seq p2 = chain({segment(a, z, v), {v, u}});
    return {end_at(p1, z), end_at(p2, z)};
  }
  if (cv == cz) {
    std::swap(u, v);
    std::swap(cu, cv);
  }
  Cycles order;
  if (cv >= 0) order.push_back(cs[cv]);
  for (int i = 0; i < k; ++i)
    if (i != cv && i != cz) order.push_back(cs[i]);
  order.push_back(cs[cz]);
  Seq xs(order.size()), ys(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const bool first_v = i == 0 && cv >= 0;
    const bool last = i + 1 == order.size();
    if (last) {
      ys[i] = z;
      xs[i] = smallest_except(order[i], {u, z});
    } else if (first_v) {
      xs[i] = v;
      ys[i] = smallest_except(order[i], {u, v});
    } else {
      xs[i] = smallest_except(order[i], {u});
      ys[i] = smallest_except(order[i], {u, xs[i]});
    }
  }
  Pair th = thread(order, xs, ys, u);
  Seq r = cv >= 0 ? Seq{} : Seq{v, xs[0]};
  Seq p1 = chain({{u, v}, r, th.p});
  Seq p2 = chain({r, th.q});
  return {end_at(p1, z), end_at(p2, z)};
}

Seq cycle_minus_edge(const Cycle& c, Vertex a, Vertex b) {
  Seq s = walk(c, a, b, true);
  if (s.size() == 2) s = walk(c, a, b, false);
  ensure(s.size() == c.vertices.size(), "edge is not on the cycle");
  return s;
}

int cycle_with_edge(const Cycles& cs, Edge f) {
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const int k = static_cast<int>(cs[i].vertices.size());
    const int a = pos(cs[i], f.u), b = pos(cs[i], f.v);
    if (a >= 0 && b >= 0 && ((a + 1) % k == b || (b + 1) % k == a)) return static_cast<int>(i);
  }
  return -1;
}

Pair minus_one(const Cycles& cs, Edge f) {
  const int j = cycle_with_edge(cs, f);
  Seq s = cycle_minus_edge(cs[j], f.u, f.v);
  if (cs.size() == 1) {
    Vertex w = smallest_interior(s);
    return {segment(s, s.front(), w), segment(s, w, s.back())};
  }
  Pair pq = plus_one(without(cs, {j}), f.u, f.v, std::nullopt);
  if (has_edge_seq(pq.p, f.u, f.v)) {
    pq.p = replace_edge(pq.p, s.front(), s.back(), s);
  } else {
    pq.q = replace_edge(pq.q, s.front(), s.back(), s);
  }
  return pq;
}

struct Labels {
  Vertex u1, v1, u2, v2;
};

std::vector<Labels> relabelings(Edge f1, Edge f2) {
  std::vector<Labels> out;
  for (int swap = 0; swap < 2; ++swap) {
    Edge a = swap ? f2 : f1, b = swap ? f1 : f2;
    for (int fa = 0; fa < 2; ++fa)
      for (int fb = 0; fb < 2; ++fb)
        out.push_back({fa ? a.v : a.u, fa ? a.u : a.v, fb ? b.v : b.u, fb ? b.u : b.v});
  }
  return out;
}

bool cyclic_order(const Cycle& c, Vertex a, Vertex b, Vertex cc, Vertex d) {
  const int k = static_cast<int>(c.vertices.size());
  const int pa = pos(c, a);
  auto rel = [&](Vertex x) { return (pos(c, x) - pa + k) % k; };
  const int rb = rel(b), rc = rel(cc), rd = rel(d);
  return (rb < rc && rc < rd) || (rb > rc && rc > rd);
}

bool crossing(const Cycle& c, Vertex u1, Vertex v1, Vertex u2, Vertex v2) {
  const int k = static_cast<int>(c.vertices.size());
  const int p = pos(c, u1);
  auto rel = [&](Vertex x) { return (pos(c, x) - p + k) % k; };
  return (rel(u2) < rel(v1)) != (rel(v2) < rel(v1));
}

int interior(const Seq& s) { return static_cast<int>(s.size()) - 2; }

TwoEdgeResult plus_two(const Cycles& cs, Edge f1, Edge f2, const std::vector<int>& index);

TwoPaths as_two(const Seq& a, const Seq& b) { return {Path{a}, Path{b}}; }

TwoEdgeResult case_one(const Cycles& cs, int j, Edge f1, Edge f2, const std::vector<int>& index) {
  const Cycle& c = cs[j];
  const bool cross = crossing(c, f1.u, f1.v, f2.u, f2.v);
  const int k = static_cast<int>(cs.size());
  const auto labs = relabelings(f1, f2);
  if (!cross) {
    for (const Labels& l : labs) {
      if (!cyclic_order(c, l.u1, l.v1, l.v2, l.u2)) continue;
      Seq r1 = arc_avoiding(c, l.u1, l.v1, {l.u2, l.v2});
      Seq rv = arc_avoiding(c, l.v1, l.v2, {l.u1, l.u2});
      Seq r2 = arc_avoiding(c, l.v2, l.u2, {l.u1, l.v1});
      Seq ru = arc_avoiding(c, l.u1, l.u2, {l.v1, l.v2});
      if (k == 1) return as_two(chain({{l.v1, l.u1}, ru, {l.u2, l.v2}}), chain({r1, rv, r2}));
      Pair pq = thread_default(without(cs, {j}));
      const Vertex x = pq.p.front(), y = pq.p.back();
      const Vertex z1 = smallest_interior(r1), z2 = smallest_interior(r2);
      Seq a = chain({{l.u1, l.v1}, segment(r1, l.v1, z1), {z1, x}, pq.p, {y, z2}, segment(r2, z2, l.u2),
                     {l.u2, l.v2}});
      Seq b = chain({ru, segment(r1, l.u1, z1), {z1, x}, pq.q, {y, z2}, segment(r2, z2, l.v2), rv});
      return as_two(a, b);
    }
    throw InternalError("no labelling fits the non-crossing order");
  }
  Pair pq;
  if (k >= 2) pq = thread_default(without(cs, {j}));
  for (const Labels& l : labs) {
    if (!cyclic_order(c, l.u1, l.u2, l.v1, l.v2)) continue;
    Seq ru = arc_avoiding(c, l.u1, l.u2, {l.v1, l.v2});
    Seq r2 = arc_avoiding(c, l.u2, l.v1, {l.u1, l.v2});
    Seq rv = arc_avoiding(c, l.v1, l.v2, {l.u1, l.u2});
    Seq r1 = arc_avoiding(c, l.u1, l.v2, {l.u2, l.v1});
    if (k == 1) return as_two(chain({ru, r2, rv}), chain({{l.v1, l.u1}, r1, {l.v2, l.u2}}));
    const Vertex x = pq.p.front(), y = pq.p.back();
    if (interior(ru) > 0 && interior(rv) > 0) {
      const Vertex zu = smallest_interior(ru), zv = smallest_interior(rv);
      Seq a = chain({r1, {l.v2, l.u2}, segment(ru, l.u2, zu), {zu, x}, pq.p, {y, zv}, segment(rv, zv, l.v1)});
      Seq b = chain({r2, {l.v1, l.u1}, segment(ru, l.u1, zu), {zu, x}, pq.q, {y, zv}, segment(rv, zv, l.v2)});
      return as_two(a, b);
    }
    if (interior(ru) > 0 && interior(r1) > 0) {
      const Vertex zu = smallest_interior(ru), z1 = smallest_interior(r1);
      Seq a = chain({{l.v1, l.u1}, segment(ru, l.u1, zu), {zu, x}, pq.p, {y, z1}, segment(r1, z1, l.v2),
                     {l.v2, l.u2}});
      Seq b = chain({rv, r2, segment(ru, l.u2, zu), {zu, x}, pq.q, {y, z1}, segment(r1, z1, l.u1)});
      return as_two(a, b);
    }
  }
  const Vertex u1 = f1.u, v1 = f1.v;
  const Vertex u2 = f2.u, v2 = f2.v;
  ExceptionalCase ex;
  ex.cycle_index = index[j];
  ex.demarcation = {interior(arc_avoiding(c, u1, u2, {v1, v2})), interior(arc_avoiding(c, u2, v1, {u1, v2})),
                    interior(arc_avoiding(c, v1, v2, {u1, u2})), interior(arc_avoiding(c, v2, u1, {u2, v1}))};
  return ex;
}

TwoEdgeResult case_two(const Cycles& cs, int j, Edge f1, Edge f2) {
  const Cycle& c = cs[j];
  for (const Labels& l : relabelings(f1, f2)) {
    if (pos(c, l.u1) < 0 || pos(c, l.u2) < 0 || pos(c, l.v2) < 0 || pos(c, l.v1) >= 0) continue;
    Seq r2 = arc_avoiding(c, l.u2, l.v2, {l.u1});
    Seq ru = arc_avoiding(c, l.u1, l.u2, {l.v2});
    Seq rv = arc_avoiding(c, l.u1, l.v2, {l.u2});
    const Vertex y1 = smallest_interior(r2);
    Cycles others;
    const int cv = cyc(cs, l.v1);
    for (int i = 0; i < static_cast<int>(cs.size()); ++i)
      if (i != j && i != cv) others.push_back(cs[i]);
    if (cv >= 0) others.push_back(cs[cv]);
    Pair th;
    if (!others.empty()) th = thread_default(others, cv >= 0 ? l.v1 : -1);
    const Vertex ylast = others.empty() ? y1 : th.p.back();
    const Seq r = cv >= 0 ? Seq{} : Seq{ylast, l.v1};
    const Seq e1 = others.empty() ? Seq{} : Seq{y1, th.p.front()};
    Seq a = chain({{l.u2, l.v2}, segment(r2, l.v2, y1), e1, th.p, r, {l.v1, l.u1}});
    Seq b = chain({rv, ru, segment(r2, l.u2, y1), e1, th.q, r});
    return as_two(a, b);
  }
  throw InternalError("no labelling fits the three-on-one-cycle case");
}

TwoEdgeResult case_three(const Cycles& cs, Edge f1, Edge f2, const std::vector<int>& index) {
  const auto labs = relabelings(f1, f2);
  // an endpoint off every cycle
  for (const Labels& l : labs) {
    if (cyc(cs, l.u1) >= 0) continue;
    const bool v1_on = cyc(cs, l.v1) >= 0;
    Pair pq = plus_one(cs, l.u2, l.v2, v1_on ? std::optional<Vertex>(l.v1) : std::nullopt);
    const Vertex z = pq.p.back();
    const Seq r = v1_on ? Seq{} : Seq{z, l.v1};
    return as_two(chain({pq.p, r, {l.v1, l.u1}}), chain({pq.q, r}));
  }
  auto count_on = [&](int i) {
    int n = 0;
    for (Vertex x : {f1.u, f1.v, f2.u, f2.v}) n += cyc(cs, x) == i;
    return n;
  };
  // a cycle meeting exactly one endpoint
  for (const Labels& l : labs) {
    const int j = cyc(cs, l.u1);
    if (count_on(j) != 1) continue;
    Cycles others = without(cs, {j});
    Pair pq = plus_one(others, l.u2, l.v2, l.v1);
    Vertex ex = -1, ey = -1;
    for (std::size_t i = 0; i + 1 < pq.p.size() && ex < 0; ++i)
      if (has_edge_seq(pq.q, pq.p[i], pq.p[i + 1])) {
        ex = pq.p[i];
        ey = pq.p[i + 1];
      }
    ensure(ex >= 0, "no common edge to reroute");
    const Cycle& ck = cs[j];
    const Vertex xk = smallest_except(ck, {l.u1});
    const Vertex yk = smallest_except(ck, {l.u1, xk});
    Seq pk = walk(ck, xk, yk, true), qk = walk(ck, xk, yk, false);
    if (std::find(pk.begin(), pk.end(), l.u1) != pk.end()) std::swap(pk, qk);
    Seq sp{ex};
    sp.insert(sp.end(), pk.begin(), pk.end());
    sp.push_back(ey);
    Seq sq{ex};
    sq.insert(sq.end(), qk.begin(), qk.end());
    sq.push_back(ey);
    Seq a = replace_edge(pq.p, ex, ey, sp);
    Seq b = replace_edge(pq.q, ex, ey, sq);
    return as_two(chain({{l.u1, l.v1}, a}), b);
  }
  // two cycles with two endpoints each
  const int ja = cyc(cs, f1.u);
  if (cyc(cs, f1.v) == ja) {
    const int jb = cyc(cs, f2.u);
    const Vertex z1 = smallest_except(cs[ja], {f1.u, f1.v});
    const Vertex z2 = smallest_except(cs[jb], {f2.u, f2.v});
    Pair p1 = plus_one({cs[ja]}, f1.u, f1.v, z1);
    Pair p2 = plus_one({cs[jb]}, f2.u, f2.v, z2);
    Cycles rest = without(cs, {ja, jb});
    if (rest.empty())
      return as_two(chain({p1.p, {z1, z2}, p2.p}), chain({p1.q, {z1, z2}, p2.q}));
    Pair pq = thread_default(rest);
    const Vertex x = pq.p.front(), y = pq.p.back();
    return as_two(chain({p1.p, {z1, x}, pq.p, {y, z2}, p2.p}), chain({p1.q, {z1, x}, pq.q, {y, z2}, p2.q}));
  }
  for (const Labels& l : labs) {
    const int a = cyc(cs, l.u1), b = cyc(cs, l.v1);
    if (cyc(cs, l.u2) != a || cyc(cs, l.v2) != b) continue;
    Seq pa = walk(cs[a], l.u1, l.u2, true), qa = walk(cs[a], l.u1, l.u2, false);
    if (interior(pa) == 0) std::swap(pa, qa);
    Seq pb = walk(cs[b], l.v2, l.v1, true), qb = walk(cs[b], l.v2, l.v1, false);
    if (interior(pb) == 0) std::swap(pb, qb);
    Cycle merged;
    merged.vertices = pa;
    merged.vertices.insert(merged.vertices.end(), pb.begin(), pb.end());
    Cycles next = without(cs, {a, b});
    std::vector<int> idx(next.size() + 1, -1);
    next.push_back(canonical(merged));
    auto res = plus_two(next, make_edge(l.u1, l.u2), make_edge(l.v1, l.v2), idx);
    ensure(std::holds_alternative<TwoPaths>(res), "merged cycle case turned exceptional");
    auto tp = std::get<TwoPaths>(res);
    Seq s = tp.p.vertices, t = tp.q.vertices;
    for (auto [ea, eb, sub] : {std::tuple{l.u1, l.u2, qa}, std::tuple{l.v2, l.v1, qb}}) {
      if (has_edge_seq(s, ea, eb)) {
        s = replace_edge(s, ea, eb, sub);
      } else {
        t = replace_edge(t, ea, eb, sub);
      }
    }
    return as_two(s, t);
  }
  (void)index;
  throw InternalError("endpoint distribution not covered by any case");
}

TwoEdgeResult plus_two(const Cycles& cs, Edge f1, Edge f2, const std::vector<int>& index) {
  TwoEdgeResult res;
  if (cs.empty()) {
    res = as_two({f1.u, f1.v}, {f2.u, f2.v});
  } else {
    const int c1 = cyc(cs, f1.u);
    int three = -1;
    for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
      int n = 0;
      for (Vertex x : {f1.u, f1.v, f2.u, f2.v}) n += cyc(cs, x) == i;
      if (n == 3) three = i;
    }
    if (c1 >= 0 && cyc(cs, f1.v) == c1 && cyc(cs, f2.u) == c1 && cyc(cs, f2.v) == c1) {
      res = case_one(cs, c1, f1, f2, index);
    } else if (three >= 0) {
      res = case_two(cs, three, f1, f2);
    } else {
      res = case_three(cs, f1, f2, index);
    }
  }
  if (auto* tp = std::get_if<TwoPaths>(&res)) check(cs, {f1, f2}, {tp->p.vertices, tp->q.vertices});
  return res;
}

TwoPaths minus_two(const Cycles& cs, Edge f1, Edge f2) {
  const int j1 = cycle_with_edge(cs, f1), j2 = cycle_with_edge(cs, f2);
  Seq r1, r2;
  if (j1 == j2) {
    Seq s = cycle_minus_edge(cs[j1], f1.u, f1.v);
    std::size_t i = 0;
    while (!(make_edge(s[i], s[i + 1]) == make_edge(f2.u, f2.v))) ++i;
    r1.assign(s.begin(), s.begin() + static_cast<long>(i) + 1);
    r2.assign(s.begin() + static_cast<long>(i) + 1, s.end());
  } else {
    r1 = cycle_minus_edge(cs[j1], f1.u, f1.v);
    r2 = cycle_minus_edge(cs[j2], f2.u, f2.v);
  }
  Cycles rest = j1 == j2 ? without(cs, {j1}) : without(cs, {j1, j2});
  auto res = plus_two(rest, make_edge(r1.front(), r1.back()), make_edge(r2.front(), r2.back()),
                      std::vector<int>(rest.size(), -1));
  ensure(std::holds_alternative<TwoPaths>(res), "closing edges turned exceptional");
  auto tp = std::get<TwoPaths>(res);
  Seq s = tp.p.vertices, t = tp.q.vertices;
  for (const Seq& r : {r1, r2}) {
    if (has_edge_seq(s, r.front(), r.back())) {
      s = replace_edge(s, r.front(), r.back(), r);
    } else {
      t = replace_edge(t, r.front(), r.back(), r);
    }
  }
  return as_two(s, t);
}

// f1 on a cycle, f2 not
TwoPaths plus_minus(const Cycles& cs, Edge f1, Edge f2) {
  const int j = cycle_with_edge(cs, f1);
  Seq s = cycle_minus_edge(cs[j], f1.u, f1.v);
  const Vertex u1 = s.front(), v1 = s.back();
  Vertex u2 = f2.u, v2 = f2.v;
  if (pos(cs[j], u2) < 0) std::swap(u2, v2);
  const int k = static_cast<int>(cs.size());
  if (pos(cs[j], u2) < 0) {
    if (k == 1) return as_two(s, {f2.u, f2.v});
    Pair pq = plus_one(without(cs, {j}), f2.u, f2.v, std::nullopt);
    const Vertex z = pq.p.back();
    return as_two(chain({pq.p, {z, u1}, s}), chain({pq.q, {z, u1}}));
  }
  const bool v2_here = pos(cs[j], v2) >= 0;
  if (v2_here) {
    auto at = [&](Vertex x) { return std::find(s.begin(), s.end(), x) - s.begin(); };
    if (at(u2) > at(v2)) std::swap(u2, v2);
  }
  if (k == 1) {
    if (!v2_here) return as_two(s, {u2, v2});
    return as_two(chain({segment(s, u1, u2), {u2, v2}, segment(s, v2, v1)}), segment(s, u2, v2));
  }
  Cycles others;
  const int cv = cyc(cs, v2);
  for (int i = 0; i < k; ++i)
    if (i != j && i != cv) others.push_back(cs[i]);
  if (cv >= 0 && cv != j) others.push_back(cs[cv]);
  Pair th = thread_default(others, cv >= 0 && cv != j ? v2 : -1);
  const Vertex z1 = th.p.front(), z2 = th.p.back();
  if (v2_here) {
    return as_two(chain({segment(s, u2, v1), {v1, z1}, th.p, {z2, u1}}),
                  chain({{v1, z1}, th.q, {z2, u1}, segment(s, u1, u2), {u2, v2}}));
  }
  if (cv >= 0) return as_two(chain({s, {v1, z1}, th.p}), chain({{v1, z1}, th.q, {v2, u2}}));
  return as_two(chain({s, {v1, z1}, th.p, {z2, v2}}), chain({{v1, z1}, th.q, {z2, v2}, {v2, u2}}));
}

std::vector<int> identity_index(std::size_t k) {
  std::vector<int> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
  return idx;
}

}  // namespace

std::vector<Edge> xor_edge_lists(std::vector<Edge> edges) {
  for (auto& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    if ((j - i) % 2) out.push_back(edges[i]);
    i = j;
  }
  return out;
}

TwoPaths cover_cycles(const CycleSet& c) {
  if (c.empty()) throw std::invalid_argument("cover_cycles needs at least one cycle");
  Cycles cs = prepare(c);
  Pair th = thread_default(cs);
  check(cs, {}, {th.p, th.q});
  return as_two(th.p, th.q);
}

TwoPaths cover_cycles_with_endpoint(const CycleSet& c, Vertex z) {
  if (c.empty()) throw std::invalid_argument("cover_cycles needs at least one cycle");
  Cycles cs = prepare(c);
  const int cz = cyc(cs, z);
  if (cz < 0) throw std::invalid_argument("endpoint is not on any cycle");
  Cycles order = without(cs, {cz});
  order.push_back(cs[cz]);
  Pair th = thread_default(order, z);
  check(cs, {}, {th.p, th.q});
  return as_two(th.p, th.q);
}

TwoPaths integrate_one_edge(const CycleSet& c, Edge f, std::optional<Vertex> z) {
  if (f.u == f.v) throw std::invalid_argument("edge is a loop");
  Cycles cs = prepare(c);
  f = make_edge(f.u, f.v);
  if (cs.empty()) throw std::invalid_argument("integrate_one_edge needs at least one cycle");
  Pair pq;
  if (cycle_with_edge(cs, f) >= 0) {
    pq = minus_one(cs, f);
  } else {
    pq = plus_one(cs, f.u, f.v, z);
  }
  check(cs, {f}, {pq.p, pq.q});
  return as_two(pq.p, pq.q);
}

TwoEdgeResult integrate_two_edges(const CycleSet& c, Edge f1, Edge f2) {
  if (f1.u == f1.v || f2.u == f2.v) throw std::invalid_argument("edge is a loop");
  f1 = make_edge(f1.u, f1.v);
  f2 = make_edge(f2.u, f2.v);
  if (share_vertex(f1, f2)) throw std::invalid_argument("edges share a vertex");
  Cycles cs = prepare(c);
  const bool in1 = cycle_with_edge(cs, f1) >= 0, in2 = cycle_with_edge(cs, f2) >= 0;
  if (!in1 && !in2) return plus_two(cs, f1, f2, identity_index(cs.size()));
  TwoPaths tp = in1 && in2 ? minus_two(cs, f1, f2) : in1 ? plus_minus(cs, f1, f2) : plus_minus(cs, f2, f1);
  check(cs, {f1, f2}, {tp.p.vertices, tp.q.vertices});
  return tp;
}

bool is_exceptional_K4(const CycleSet& c, Edge f1, Edge f2) {
  if (share_vertex(f1, f2)) throw std::invalid_argument("edges share a vertex");
  if (c.size() < 2) return false;
  for (const Cycle& z : c.cycles) {
    if (pos(z, f1.u) < 0 || pos(z, f1.v) < 0 || pos(z, f2.u) < 0 || pos(z, f2.v) < 0) continue;
    if (!crossing(z, f1.u, f1.v, f2.u, f2.v)) continue;
    const int with_interior = (interior(arc_avoiding(z, f1.u, f2.u, {f1.v, f2.v})) > 0) +
                              (interior(arc_avoiding(z, f2.u, f1.v, {f1.u, f2.v})) > 0) +
                              (interior(arc_avoiding(z, f1.v, f2.v, {f1.u, f2.u})) > 0) +
                              (interior(arc_avoiding(z, f2.v, f1.u, {f2.u, f1.v})) > 0);
    if (with_interior <= 1) return true;
  }
  return false;
}

PairChoice choose_integrable_pair(const CycleSet& c, const std::array<Edge, 3>& fs) {
  for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    auto res = integrate_two_edges(c, fs[a], fs[b]);
    if (auto* tp = std::get_if<TwoPaths>(&res)) return {{a, b}, *tp};
  }
  throw InternalError("no integrable pair among three edges");
}

std::vector<Path> integrate_four_edges(const CycleSet& c, const CycleSet& d, const std::array<Edge, 4>& fs) {
  std::vector<std::pair<int, int>> ok;
  for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
    if (std::holds_alternative<TwoPaths>(integrate_two_edges(c, fs[a], fs[b]))) ok.push_back({a, b});
  ensure(ok.size() >= 2, "fewer than two integrable pairs");
  const auto [p0, p1] = ok[0];
  const auto [q0, q1] = ok[1];
  const int a = (p0 == q0 || p0 == q1) ? p0 : p1;
  int b = -1, cc = -1;
  for (int i = 0; i < 3; ++i)
    if (i != a) (b < 0 ? b : cc) = i;
  for (auto [mine, theirs] : {std::pair{b, cc}, std::pair{cc, b}}) {
    auto rd = integrate_two_edges(d, fs[mine], fs[3]);
    if (auto* td = std::get_if<TwoPaths>(&rd)) {
      auto rc = integrate_two_edges(c, fs[a], fs[theirs]);
      ensure(std::holds_alternative<TwoPaths>(rc), "chosen pair for the first cycle set is exceptional");
      const auto& tc = std::get<TwoPaths>(rc);
      return {tc.p, tc.q, td->p, td->q};
    }
  }
  throw InternalError("no pair with the fourth edge integrates into the second cycle set");
}

}  // namespace oddcover
