#pragma once

#include <cstdint>
#include <vector>

#include "oddcover/cover.hpp"
#include "oddcover/graph.hpp"
#include "oddcover/iso.hpp"
#include "oddcover/oracle.hpp"

namespace oddcover {

// k Hamiltonian cycles partitioning K_{2k+1}; vertex 2k plays infinity
std::vector<Cycle> walecki_cycles(int k);

struct Counterexample {
  int k = 0;
  Graph g;
  std::vector<Path> paths;  // k + 1 paths decomposing E(g)
  LinearForests forests;    // k linear forests decomposing E(g)
  IsoCover iso;             // k paths after adding isolated vertices
  // any k-path odd-cover needs at least `needed` edges in total but k paths on
  // 4k + 2 vertices carry at most `available`
  std::int64_t needed = 0;
  std::int64_t available = 0;
  bool certificate() const { return needed > available; }
};

// k odd, k >= 3
Counterexample gen_counterexample(int k);

}  // namespace oddcover
