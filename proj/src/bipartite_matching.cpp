#include "bipartite_matching.hpp"

#include <limits>
#include <queue>

namespace oddcover::detail {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match_l, match_r, dist;
  std::vector<std::size_t> it;

  HopcroftKarp(const std::vector<std::vector<int>>& a, int right)
      : adj(a), match_l(a.size(), -1), match_r(right, -1), dist(a.size()), it(a.size()) {}

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (std::size_t l = 0; l < adj.size(); ++l) {
      if (match_l[l] < 0) {
        dist[l] = 0;
        q.push(static_cast<int>(l));
      } else {
        dist[l] = kInf;
      }
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : adj[l]) {
        int m = match_r[r];
        if (m < 0) {
          found = true;
        } else if (dist[m] == kInf) {
          dist[m] = dist[l] + 1;
          q.push(m);
        }
      }
    }
    return found;
  }

  bool dfs(int l) {
    for (; it[l] < adj[l].size(); ++it[l]) {
      int r = adj[l][it[l]];
      int m = match_r[r];
      if (m < 0 || (dist[m] == dist[l] + 1 && dfs(m))) {
        match_l[l] = r;
        match_r[r] = l;
        ++it[l];
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  }

  void run() {
    while (bfs()) {
      std::fill(it.begin(), it.end(), 0);
      for (std::size_t l = 0; l < adj.size(); ++l)
        if (match_l[l] < 0) dfs(static_cast<int>(l));
    }
  }
};

}  // namespace

std::vector<int> hopcroft_karp(const std::vector<std::vector<int>>& adj, int right_size) {
  HopcroftKarp hk(adj, right_size);
  hk.run();
  return hk.match_l;
}

}  // namespace oddcover::detail
