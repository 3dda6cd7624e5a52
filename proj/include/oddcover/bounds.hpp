#pragma once

#include "oddcover/graph.hpp"

namespace oddcover {

// max{v_odd/2, ceil(Delta/2)}, optionally also the arboricity density bound (n <= 12)
int lower_bound(const Graph& g, bool with_density = false);

// max over vertex subsets S, |S| >= 2, of ceil(e(S) / (|S| - 1)); n <= 12
int arboricity_density(const Graph& g);

// max{v_odd/2, 2 ceil(Delta/2)}
int path_cover_upper_bound(const Graph& g);

}  // namespace oddcover
