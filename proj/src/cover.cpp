#include "oddcover/cover.hpp"

#include <algorithm>
#include <map>

namespace oddcover {

std::vector<Edge> path_edges(const Path& p) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    out.push_back(make_edge(p.vertices[i], p.vertices[i + 1]));
  return out;
}

std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> out;
  const std::size_t k = c.vertices.size();
  for (std::size_t i = 0; i < k; ++i) out.push_back(make_edge(c.vertices[i], c.vertices[(i + 1) % k]));
  return out;
}

namespace {

MemberIssue check_member(const std::vector<Vertex>& vs, int n, std::size_t min_len) {
  if (vs.size() < min_len) return MemberIssue::too_short;
  for (Vertex v : vs)
    if (v < 0 || v >= n) return MemberIssue::out_of_range;
  std::vector<Vertex> s = vs;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return MemberIssue::repeated_vertex;
  return MemberIssue::ok;
}

}  // namespace

bool is_valid_path(const Path& p, int n) { return check_member(p.vertices, n, 2) == MemberIssue::ok; }
bool is_valid_cycle(const Cycle& c, int n) { return check_member(c.vertices, n, 3) == MemberIssue::ok; }

Path reversed(Path p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

std::string to_string(CoverKind k) { return k == CoverKind::path ? "path" : "cycle"; }

OddCover OddCover::of_paths(Graph target, const std::vector<Path>& paths) {
  OddCover c{std::move(target), CoverKind::path, {}};
  for (const auto& p : paths) c.members.push_back(p.vertices);
  return c;
}

OddCover OddCover::of_cycles(Graph target, const std::vector<Cycle>& cycles) {
  OddCover c{std::move(target), CoverKind::cycle, {}};
  for (const auto& z : cycles) c.members.push_back(z.vertices);
  return c;
}

EdgeVector member_edges(const OddCover& cover) {
  const int n = cover.target.num_vertices();
  EdgeVector x(n);
  for (const auto& m : cover.members) {
    auto es = cover.kind == CoverKind::path ? path_edges(Path{m}) : cycle_edges(Cycle{m});
    for (const Edge& e : es) x.flip(e.u, e.v);
  }
  return x;
}

VerificationReport verify_cover(const OddCover& cover) {
  VerificationReport r;
  const int n = cover.target.num_vertices();
  const std::size_t min_len = cover.kind == CoverKind::path ? 2 : 3;
  for (const auto& m : cover.members) {
    r.members.push_back(check_member(m, n, min_len));
    if (r.members.back() != MemberIssue::ok) r.members_valid = false;
  }
  std::map<Edge, int> counts;
  for (const Edge& e : cover.target.edges()) counts[e] += 0;
  for (std::size_t i = 0; i < cover.members.size(); ++i) {
    if (r.members[i] == MemberIssue::out_of_range || r.members[i] == MemberIssue::too_short) continue;
    const auto& m = cover.members[i];
    auto es = cover.kind == CoverKind::path ? path_edges(Path{m}) : cycle_edges(Cycle{m});
    for (const Edge& e : es)
      if (e.u != e.v) ++counts[e];
  }
  r.xor_matches = true;
  for (const auto& [e, c] : counts) {
    EdgeParity p{e, c, cover.target.has_edge(e.u, e.v)};
    r.parity.push_back(p);
    if ((c % 2 == 1) != p.in_target) {
      r.xor_matches = false;
      r.mismatches.push_back(p);
    }
  }
  return r;
}

}  // namespace oddcover
