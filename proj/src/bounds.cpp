#include "oddcover/bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace oddcover {

int arboricity_density(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 12) throw std::invalid_argument("density bound needs n <= 12");
  std::vector<unsigned> nbr(n, 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u] |= 1U << e.v;
    nbr[e.v] |= 1U << e.u;
  }
  int best = 0;
  for (unsigned s = 1; s < (1U << n); ++s) {
    const int k = std::popcount(s);
    if (k < 2) continue;
    int twice = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1U) twice += std::popcount(nbr[v] & s);
    const int e = twice / 2;
    best = std::max(best, (e + k - 2) / (k - 1));
  }
  return best;
}

int lower_bound(const Graph& g, bool with_density) {
  const auto p = degree_profile(g);
  int b = std::max(p.v_odd / 2, (p.max_degree + 1) / 2);
  if (with_density) b = std::max(b, arboricity_density(g));
  return b;
}

int path_cover_upper_bound(const Graph& g) {
  const auto p = degree_profile(g);
  return std::max(p.v_odd / 2, 2 * ((p.max_degree + 1) / 2));
}

}  // namespace oddcover
