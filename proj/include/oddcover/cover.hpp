#pragma once

#include <string>
#include <vector>

#include "oddcover/edge_vector.hpp"
#include "oddcover/graph.hpp"

namespace oddcover {

struct Path {
  std::vector<Vertex> vertices;
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool operator==(const Path&) const = default;
};

struct Cycle {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.size(); }
  bool operator==(const Cycle&) const = default;
};

std::vector<Edge> path_edges(const Path& p);
std::vector<Edge> cycle_edges(const Cycle& c);
bool is_valid_path(const Path& p, int n);
bool is_valid_cycle(const Cycle& c, int n);
Path reversed(Path p);

enum class CoverKind { path, cycle };
std::string to_string(CoverKind k);

struct OddCover {
  Graph target;
  CoverKind kind = CoverKind::path;
  std::vector<std::vector<Vertex>> members;

  std::size_t count() const { return members.size(); }
  static OddCover of_paths(Graph target, const std::vector<Path>& paths);
  static OddCover of_cycles(Graph target, const std::vector<Cycle>& cycles);
};

enum class MemberIssue { ok, too_short, repeated_vertex, out_of_range };

struct EdgeParity {
  Edge edge;
  int count = 0;
  bool in_target = false;
};

struct VerificationReport {
  std::vector<MemberIssue> members;
  bool members_valid = true;
  bool xor_matches = false;
  std::vector<EdgeParity> parity;      // every pair touched by a member or the target
  std::vector<EdgeParity> mismatches;  // pairs whose parity disagrees with the target
  bool valid() const { return members_valid && xor_matches; }
};

VerificationReport verify_cover(const OddCover& cover);
EdgeVector member_edges(const OddCover& cover);

}  // namespace oddcover
