#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "oddcover/cover.hpp"
#include "oddcover/graph.hpp"

namespace oddcover {

// "n m" header then m lines "u v"; blank lines and '#' comments skipped
Graph parse_edge_list(std::string_view text);
// single graph6 record; an optional ">>graph6<<" header is accepted
Graph parse_graph6(std::string_view text);
// graph6 when the first meaningful line is one token that is not a number
Graph parse_graph_auto(std::string_view text);
std::string emit_edge_list(const Graph& g);

struct Bounds {
  int lower = 0;
  int upper = 0;
  std::string method;
};

nlohmann::json witness_json(const OddCover& cover, bool valid);
nlohmann::json bounds_json(const Bounds& b);
// chains[i] is the path in the subdivision replacing the i-th edge of g
nlohmann::json subdivision_json(const Graph& g, const std::vector<std::vector<Vertex>>& chains);

struct ParsedWitness {
  int n = 0;
  CoverKind kind = CoverKind::path;
  std::vector<std::vector<Vertex>> members;
  std::optional<std::vector<std::vector<Vertex>>> chains;
};
// throws std::invalid_argument on schema violations
ParsedWitness parse_witness(const nlohmann::json& j);

std::string read_file(const std::string& path);  // IoError
void write_file(const std::string& path, std::string_view data);

}  // namespace oddcover
