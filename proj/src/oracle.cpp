#include "oddcover/oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "oddcover/bounds.hpp"
#include "oddcover/errors.hpp"

namespace oddcover {

namespace {

constexpr int kMaxOracleN = 7;

struct Member {
  std::vector<Vertex> seq;
  std::uint32_t mask = 0;
};

std::uint32_t seq_mask(int n, const std::vector<Vertex>& seq, bool closed) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) m ^= 1U << pair_index(n, seq[i], seq[i + 1]);
  if (closed) m ^= 1U << pair_index(n, seq.back(), seq.front());
  return m;
}

// all sequences of distinct vertices of length len, canonical per member kind
void sequences(int n, std::size_t len, bool closed, std::vector<Member>& out) {
  std::vector<Vertex> seq;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    if (seq.size() == len) {
      if (!closed && seq.front() > seq.back()) return;
      if (closed && (seq[1] > seq.back())) return;
      out.push_back({seq, seq_mask(n, seq, closed)});
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (closed && !seq.empty() && v < seq.front()) continue;  // smallest vertex first
      used[v] = true;
      seq.push_back(v);
      self(self);
      seq.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
}

std::vector<Member> members(int n, bool cycles) {
  if (n < 0 || n > kMaxOracleN) throw std::invalid_argument("oracle supports n <= 7");
  std::vector<Member> out;
  for (int len = cycles ? 3 : 2; len <= n; ++len) sequences(n, static_cast<std::size_t>(len), cycles, out);
  return out;
}

struct Table {
  int n = 0;
  int depth = 0;  // distances beyond this were not explored
  std::vector<Member> items;
  std::vector<std::int8_t> dist;
  std::vector<std::uint16_t> parent;

  std::vector<std::vector<Vertex>> unwind(std::uint32_t s) const {
    std::vector<std::vector<Vertex>> out;
    while (s != 0) {
      const Member& m = items[parent[s]];
      out.push_back(m.seq);
      s ^= m.mask;
    }
    return out;
  }
};

Table build(int n, bool cycles, int depth_limit) {
  Table t;
  t.n = n;
  t.items = members(n, cycles);
  const int bits = n * (n - 1) / 2;
  t.dist.assign(std::size_t{1} << bits, -1);
  t.parent.assign(std::size_t{1} << bits, 0);
  t.dist[0] = 0;
  std::vector<std::uint32_t> layer{0};
  int d = 0;
  while (!layer.empty() && d < depth_limit) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t s : layer)
      for (std::size_t i = 0; i < t.items.size(); ++i) {
        const std::uint32_t x = s ^ t.items[i].mask;
        if (t.dist[x] >= 0) continue;
        t.dist[x] = static_cast<std::int8_t>(d + 1);
        t.parent[x] = static_cast<std::uint16_t>(i);
        next.push_back(x);
      }
    layer = std::move(next);
    ++d;
  }
  t.depth = layer.empty() ? 127 : depth_limit;
  return t;
}

const Table& table(int n, bool cycles) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::unique_ptr<Table>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, cycles}];
  // paths at n = 7 only to depth 2; the rest is resolved by meeting in the middle
  if (!slot) slot = std::make_unique<Table>(build(n, cycles, (!cycles && n == 7) ? 2 : 127));
  return *slot;
}

std::optional<ExactResult> lookup(const Graph& g, int max_k, bool cycles) {
  const int n = g.num_vertices();
  if (n > kMaxOracleN) throw std::invalid_argument("oracle supports n <= 7");
  const Table& t = table(n, cycles);
  const std::uint32_t target = mask_of(g);
  const CoverKind kind = cycles ? CoverKind::cycle : CoverKind::path;
  auto result = [&](std::vector<std::vector<Vertex>> ms) -> std::optional<ExactResult> {
    const int k = static_cast<int>(ms.size());
    if (k > max_k) return std::nullopt;
    ExactResult r{k, OddCover{g, kind, std::move(ms)}, 0};
    ensure(verify_cover(r.witness).valid(), "oracle witness does not verify");
    return r;
  };
  if (t.dist[target] >= 0) return result(t.unwind(target));
  if (t.depth >= 127) throw InternalError("target unreachable in a complete search");
  ensure(t.depth == 2, "partial table of unexpected depth");
  // three: one member then a depth-two state
  for (const Member& m : t.items)
    if (t.dist[target ^ m.mask] == 2) {
      auto ms = t.unwind(target ^ m.mask);
      ms.push_back(m.seq);
      return result(std::move(ms));
    }
  if (max_k < 4) return std::nullopt;
  for (std::uint32_t s = 0; s < t.dist.size(); ++s)
    if (t.dist[s] == 2 && t.dist[target ^ s] == 2) {
      auto ms = t.unwind(s);
      auto rest = t.unwind(target ^ s);
      ms.insert(ms.end(), rest.begin(), rest.end());
      return result(std::move(ms));
    }
  if (max_k > 4) throw BudgetExceeded("path search at n = 7 stops at four members");
  return std::nullopt;
}

}  // namespace

Graph graph_from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n * (n - 1) / 2); ++i)
    if (mask >> i & 1U) es.push_back(pair_at(n, i));
  return Graph(n, es);
}

std::uint32_t mask_of(const Graph& g) {
  if (g.num_vertices() > kMaxOracleN) throw std::invalid_argument("mask needs n <= 7");
  std::uint32_t m = 0;
  for (const Edge& e : g.edges()) m |= 1U << pair_index(g.num_vertices(), e.u, e.v);
  return m;
}

std::vector<EdgeVector> enumerate_paths(int n) {
  std::vector<EdgeVector> out;
  for (const Member& m : members(n, false)) out.push_back(EdgeVector::from_edges(n, path_edges(Path{m.seq})));
  return out;
}

std::vector<EdgeVector> enumerate_cycles(int n) {
  std::vector<EdgeVector> out;
  for (const Member& m : members(n, true)) out.push_back(EdgeVector::from_edges(n, cycle_edges(Cycle{m.seq})));
  return out;
}

std::optional<ExactResult> exact_p2(const Graph& g, int max_k) { return lookup(g, max_k, false); }

std::optional<ExactResult> exact_c2(const Graph& g, int max_k) {
  if (!g.all_even()) throw std::invalid_argument("cycle odd-covers need all degrees even");
  auto r = lookup(g, max_k, true);
  if (r) ensure(2 * r->k >= g.max_degree(), "cycle count below Delta/2");
  return r;
}

std::optional<ExactResult> exact_p2_iso(const Graph& g, int extra, int max_k) {
  if (extra < 0 || g.num_vertices() + extra > kMaxOracleN)
    throw std::invalid_argument("padded graph exceeds the oracle's size");
  std::optional<ExactResult> best;
  for (int a = 0; a <= extra; ++a) {
    auto r = exact_p2(g.with_isolated(a), best ? best->k - 1 : max_k);
    if (r) {
      r->added = a;
      best = std::move(r);
    }
  }
  return best;
}

std::optional<LinearForests> exact_linear_forests(const Graph& g, int k, std::uint64_t max_nodes) {
  const int n = g.num_vertices();
  if (n > 10) throw std::invalid_argument("linear forest search needs n <= 10");
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (g.num_edges() == 0) return LinearForests(k);
  if (k == 0 || g.max_degree() > 2 * k) return std::nullopt;
  std::vector<Edge> order = g.edges();
  std::stable_sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
    return g.degree(a.u) + g.degree(a.v) > g.degree(b.u) + g.degree(b.v);
  });
  // per colour: degree and, for path ends, the opposite end
  std::vector<std::vector<int>> deg(k, std::vector<int>(n, 0));
  std::vector<std::vector<Vertex>> end(k, std::vector<Vertex>(n));
  for (auto& e : end) std::iota(e.begin(), e.end(), 0);
  std::vector<int> colour(order.size(), -1);
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t i, int used) -> bool {
    if (++nodes > max_nodes) throw BudgetExceeded("linear forest search exceeded its node budget");
    if (i == order.size()) return true;
    const Edge e = order[i];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      if (deg[c][e.u] == 2 || deg[c][e.v] == 2) continue;
      const Vertex a = end[c][e.u], b = end[c][e.v];
      if (a == e.v) continue;  // closes a cycle
      ++deg[c][e.u];
      ++deg[c][e.v];
      end[c][a] = b;
      end[c][b] = a;
      colour[i] = c;
      if (self(self, i + 1, std::max(used, c + 1))) return true;
      end[c][a] = e.u;
      end[c][b] = e.v;
      --deg[c][e.u];
      --deg[c][e.v];
    }
    return false;
  };
  if (!rec(rec, 0, 0)) return std::nullopt;
  LinearForests out(k);
  for (std::size_t i = 0; i < order.size(); ++i) out[colour[i]].push_back(order[i]);
  for (auto& f : out) std::sort(f.begin(), f.end());
  return out;
}

int linear_arboricity(const Graph& g) {
  for (int k = (g.max_degree() + 1) / 2;; ++k)
    if (exact_linear_forests(g, k)) return k;
}

GapReport scan_bound_gaps(int max_n, bool with_la) {
  if (max_n > 6) throw std::invalid_argument("exhaustive scan supports n <= 6");
  GapReport rep;
  rep.max_n = max_n;
  int worst = -1;
  for (int n = 1; n <= max_n; ++n) {
    const Table& t = table(n, false);
    const std::uint32_t total = 1U << (n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      const Graph g = graph_from_mask(n, mask);
      const int p2 = t.dist[mask];
      const int base = lower_bound(g);
      const int dens = std::max(base, arboricity_density(g));
      ++rep.graphs;
      rep.max_gap_degree = std::max(rep.max_gap_degree, p2 - base);
      rep.max_gap_density = std::max(rep.max_gap_density, p2 - dens);
      rep.above_degree += p2 > base;
      rep.above_density += p2 > dens;
      if (with_la) {
        const int la = std::max(base, linear_arboricity(g));
        rep.max_gap_la = std::max(rep.max_gap_la, p2 - la);
        rep.above_la += p2 > la;
      }
      if (p2 - base > worst) {
        worst = p2 - base;
        rep.worst = GapExample{g, p2, base};
      }
    }
  }
  return rep;
}

}  // namespace oddcover
