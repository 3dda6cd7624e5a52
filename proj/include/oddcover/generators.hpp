#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oddcover/graph.hpp"

namespace oddcover {

Graph gnp(int n, double p, std::uint64_t seed);
// k disjoint cycles of length len
Graph disjoint_cycles(int k, int len);
// k disjoint cycles of length len strung along a path: the path runs through one
// edge of each cycle, with a pendant edge at both ends
Graph cycles_on_path(int k, int len);
Graph complete_graph(int n);
// symmetric difference of random cycles; always all-even
Graph eulerian_random(int n, std::uint64_t seed);

struct FamilySpec {
  std::string name;
  std::vector<std::string> args;
};
// "name(a,b,...)"; throws std::invalid_argument
FamilySpec parse_family(std::string_view text);
// gnp, cycles, cycles-on-path, walecki, counterexample, eulerian-random
Graph generate(const FamilySpec& spec);

}  // namespace oddcover
