#include "oddcover/path_system.hpp"

#include <algorithm>
#include <stdexcept>

#include "oddcover/errors.hpp"
#include "oddcover/two_path_kit.hpp"

namespace oddcover {

std::size_t PathKSystem::total_paths() const {
  std::size_t s = 0;
  for (const auto& c : collections) s += c.size();
  return s;
}

namespace {

Edge terminal_edge(const Path& p, Vertex end) {
  const auto& vs = p.vertices;
  return end == vs.front() ? make_edge(vs[0], vs[1]) : make_edge(vs[vs.size() - 1], vs[vs.size() - 2]);
}

const Path& at(const PathKSystem& sys, PathRef r) { return sys.collections[r.collection][r.index]; }

Vertex other_end(const Path& p, Vertex end) { return end == p.front() ? p.back() : p.front(); }

Path ending_at(Path p, Vertex end) { return p.back() == end ? p : reversed(std::move(p)); }

int type_one_count(const std::map<Vertex, EndpointInfo>& info, const Path& p) {
  int n = 0;
  for (Vertex x : {p.front(), p.back()}) n += info.at(x).type == EndpointType::I;
  return n;
}

}  // namespace

std::map<Vertex, EndpointInfo> classify_endpoints(const PathKSystem& sys) {
  const int n = sys.num_vertices;
  std::vector<int> seen(n, 0);  // appearances in any path
  std::map<Vertex, EndpointInfo> info;
  for (int c = 0; c < sys.k(); ++c) {
    if (sys.collections[c].empty()) throw std::invalid_argument("empty collection");
    std::vector<bool> used(n, false);
    for (int i = 0; i < static_cast<int>(sys.collections[c].size()); ++i) {
      const Path& p = sys.collections[c][i];
      if (!is_valid_path(p, n)) throw std::invalid_argument("member is not a path");
      for (Vertex x : p.vertices) {
        if (used[x]) throw std::invalid_argument("paths of one collection share a vertex");
        used[x] = true;
        ++seen[x];
      }
      info[p.front()].paths.push_back({c, i});
      info[p.back()].paths.push_back({c, i});
    }
  }
  for (auto& [x, e] : info) {
    if (e.paths.size() == 1) {
      e.type = EndpointType::I;
      continue;
    }
    if (e.paths.size() != 2) throw std::invalid_argument("endpoint shared by more than two paths");
    const PathRef a = e.paths[0], b = e.paths[1];
    if (a.collection == b.collection) throw std::invalid_argument("shared endpoint within one collection");
    if (terminal_edge(at(sys, a), x) == terminal_edge(at(sys, b), x))
      throw std::invalid_argument("shared endpoint with equal terminal edges");
    if (seen[x] != 2) throw std::invalid_argument("shared endpoint lies on a third path");
    e.type = EndpointType::II;
  }
  return info;
}

bool is_path_k_system(const PathKSystem& sys) {
  try {
    classify_endpoints(sys);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool is_well_distributed(const PathKSystem& sys) {
  std::map<Vertex, EndpointInfo> info;
  try {
    info = classify_endpoints(sys);
  } catch (const std::invalid_argument&) {
    return false;
  }
  std::vector<int> ones(sys.k(), 0);
  bool singleton_with_two = false;
  for (int c = 0; c < sys.k(); ++c)
    for (const Path& p : sys.collections[c]) {
      const int t = type_one_count(info, p);
      ones[c] += t;
      if (t == 2 && sys.collections[c].size() == 1) singleton_with_two = true;
    }
  if (std::any_of(ones.begin(), ones.end(), [](int x) { return x > 2; })) return false;
  const bool some_two = std::any_of(ones.begin(), ones.end(), [](int x) { return x == 2; });
  if (some_two && std::any_of(ones.begin(), ones.end(), [](int x) { return x == 0; })) return false;
  for (int c = 0; c < sys.k(); ++c)
    for (const Path& p : sys.collections[c])
      if (type_one_count(info, p) == 2 && !singleton_with_two) return false;
  return true;
}

std::vector<Edge> system_edges(const PathKSystem& sys) {
  std::vector<Edge> all;
  for (const auto& c : sys.collections)
    for (const Path& p : c) {
      auto es = path_edges(p);
      all.insert(all.end(), es.begin(), es.end());
    }
  return xor_edge_lists(std::move(all));
}

PathKSystem join(const PathKSystem& sys, Vertex u, Vertex v) {
  const auto info = classify_endpoints(sys);
  auto type_two = [&](Vertex x) {
    auto it = info.find(x);
    if (it == info.end() || it->second.type != EndpointType::II)
      throw std::invalid_argument("join needs type II endpoints");
    return it->second.paths;
  };
  if (u == v) throw std::invalid_argument("join needs two distinct vertices");
  auto pu = type_two(u), pv = type_two(v);
  if (pu[0].collection > pu[1].collection) std::swap(pu[0], pu[1]);
  if (pv[0].collection > pv[1].collection) std::swap(pv[0], pv[1]);
  if (pu[0].collection != pv[0].collection || pu[1].collection != pv[1].collection)
    throw std::invalid_argument("join endpoints are not shared by the same two collections");
  if (pu[0] == pv[0] || pu[1] == pv[1]) throw std::invalid_argument("join needs four distinct paths");

  PathKSystem out = sys;
  for (int s = 0; s < 2; ++s) {
    const Path a = ending_at(at(sys, pu[s]), u);
    const Path b = reversed(ending_at(at(sys, pv[s]), v));
    Path merged = a;
    merged.vertices.insert(merged.vertices.end(), b.vertices.begin(), b.vertices.end());
    auto& col = out.collections[pu[s].collection];
    col[pu[s].index] = merged;
    col.erase(col.begin() + pv[s].index);
  }
  if (!is_well_distributed(out)) throw std::invalid_argument("join would break well-distribution");
  ensure(system_edges(out) == system_edges(sys), "join changed the XOR of the system");
  return out;
}

PathKSystem insert(const PathKSystem& sys, Vertex u, int i, int r) {
  if (sys.k() < 3) throw std::invalid_argument("insert needs k >= 3");
  const auto info = classify_endpoints(sys);
  auto it = info.find(u);
  if (it == info.end() || it->second.type != EndpointType::II)
    throw std::invalid_argument("insert needs a type II endpoint");
  const auto& ps = it->second.paths;
  const int side = ps[0].collection == i ? 0 : ps[1].collection == i ? 1 : -1;
  if (side < 0) throw std::invalid_argument("endpoint is not in the named collection");
  const int j = ps[1 - side].collection;
  if (r < 0 || r >= sys.k() || r == i || r == j) throw std::invalid_argument("insert target collection invalid");
  bool r_has_two = false;
  for (const Path& p : sys.collections[r])
    for (Vertex x : {p.front(), p.back()}) r_has_two |= info.at(x).type == EndpointType::II;
  if (!r_has_two) throw std::invalid_argument("target collection has no type II endpoint");

  PathKSystem out = sys;
  const Vertex fresh = out.num_vertices++;
  Path p = ending_at(at(sys, ps[side]), u);
  const Vertex z = p.vertices[p.vertices.size() - 2];
  p.vertices.back() = fresh;
  out.collections[i][ps[side].index] = p;
  out.collections[r].push_back(Path{{fresh, u}});
  out.subdivisions.push_back({z, u, fresh});

  std::vector<Edge> expect = system_edges(sys);
  expect.erase(std::find(expect.begin(), expect.end(), make_edge(z, u)));
  expect.push_back(make_edge(z, fresh));
  expect.push_back(make_edge(fresh, u));
  std::sort(expect.begin(), expect.end());
  ensure(system_edges(out) == expect, "insert broke the subdivision XOR");
  ensure(is_well_distributed(out), "insert broke well-distribution");
  return out;
}

namespace {

struct View {
  std::map<Vertex, EndpointInfo> info;
  const PathKSystem* sys;
  bool two(Vertex x) const { return info.at(x).type == EndpointType::II; }
  PathRef partner(Vertex x, PathRef self) const {
    const auto& ps = info.at(x).paths;
    ensure(ps.size() == 2, "partner of a type I endpoint");
    return ps[0] == self ? ps[1] : ps[0];
  }
  const Path& path(PathRef r) const { return at(*sys, r); }
};

PathKSystem step_large(const PathKSystem& sys, const View& w, int c1) {
  const auto& col = sys.collections[c1];
  int pi = -1;
  for (int i = 0; i < static_cast<int>(col.size()) && pi < 0; ++i)
    if (w.two(col[i].front()) && w.two(col[i].back())) pi = i;
  ensure(pi >= 0, "no path with two type II endpoints in the largest collection");
  const PathRef P{c1, pi};
  int qi = -1;
  Vertex u = -1;
  for (int i = 0; i < static_cast<int>(col.size()) && qi < 0; ++i) {
    if (i == pi) continue;
    for (Vertex x : {col[i].front(), col[i].back()})
      if (qi < 0 && w.two(x)) {
        qi = i;
        u = x;
      }
  }
  ensure(qi >= 0, "second path of the largest collection has no type II endpoint");
  const PathRef Pp{c1, qi};
  const PathRef Q = w.partner(u, Pp);
  const int i = Q.collection;
  Vertex v = w.path(P).front(), vp = w.path(P).back();
  PathRef R = w.partner(v, P), Rp = w.partner(vp, P);
  for (auto [x, r] : {std::pair{v, R}, std::pair{vp, Rp}}) {
    if (r.collection != i) {
      PathKSystem s = insert(sys, x, r.collection, i);
      return join(s, u, x);
    }
  }
  const Vertex y = other_end(w.path(Q), u);
  if (w.two(y)) {
    if (Q == R) {
      std::swap(v, vp);
      std::swap(R, Rp);
    }
  } else if (!w.two(other_end(w.path(R), v))) {
    std::swap(v, vp);
    std::swap(R, Rp);
  }
  return join(sys, u, v);
}

PathKSystem step_pair(const PathKSystem& sys, const View& w, int c1) {
  const PathRef P{c1, 0}, Pp{c1, 1};
  Vertex u = w.path(P).front(), x = w.path(P).back();
  Vertex v = w.path(Pp).front(), wv = w.path(Pp).back();
  if (!w.two(u)) std::swap(u, x);
  if (!w.two(v)) std::swap(v, wv);
  ensure(w.two(u) && w.two(v), "path of a two-path collection lacks a type II endpoint");
  PathRef Q = w.partner(u, P), R = w.partner(v, Pp);
  if (Q == R && w.two(x)) {
    std::swap(u, x);
    Q = w.partner(u, P);
  }
  if (Q == R && w.two(wv)) {
    std::swap(v, wv);
    R = w.partner(v, Pp);
  }
  if (!(Q == R)) {
    if (Q.collection == R.collection) return join(sys, u, v);
    PathKSystem s = insert(sys, v, R.collection, Q.collection);
    return join(s, u, v);
  }
  const int i = Q.collection;
  const auto& col = sys.collections[i];
  for (int q = 0; q < static_cast<int>(col.size()); ++q) {
    if (q == Q.index) continue;
    Vertex z = col[q].front(), y = col[q].back();
    if (w.two(z)) std::swap(z, y);
    if (!w.two(z) && w.two(y)) {
      PathKSystem s = insert(sys, y, i, c1);
      return join(s, u, s.num_vertices - 1);
    }
  }
  throw InternalError("no path with one type I and one type II endpoint");
}

}  // namespace

PathKSystem reduce_system(PathKSystem sys) {
  if (!is_well_distributed(sys)) throw std::invalid_argument("system is not well-distributed");
  while (sys.total_paths() > static_cast<std::size_t>(sys.k())) {
    const std::size_t before = sys.total_paths();
    int c1 = 0;
    for (int c = 1; c < sys.k(); ++c)
      if (sys.collections[c].size() > sys.collections[c1].size()) c1 = c;
    View w{classify_endpoints(sys), &sys};
    sys = sys.collections[c1].size() >= 3 ? step_large(sys, w, c1) : step_pair(sys, w, c1);
    ensure(sys.total_paths() < before, "reduction step did not shrink the system");
  }
  return sys;
}

}  // namespace oddcover
