#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddcover/cycles.hpp"
#include "oddcover/errors.hpp"
#include "oddcover/two_path_kit.hpp"
#include "support.hpp"

using namespace oddcover;
using namespace testing_support;

namespace {

void check_balanced(const Graph& g, const Orientation& o) {
  std::vector<int> in(g.num_vertices()), out(g.num_vertices());
  std::vector<Edge> und;
  for (const Edge& a : o.arcs) {
    ++out[a.u];
    ++in[a.v];
    und.push_back(make_edge(a.u, a.v));
  }
  std::sort(und.begin(), und.end());
  CHECK(und == g.edges());
  for (int v = 0; v < g.num_vertices(); ++v) {
    CHECK(in[v] == out[v]);
    CHECK(in[v] == g.degree(v) / 2);
  }
}

void check_cover(const Graph& g, const CycleSet& c) {
  CHECK(is_vertex_disjoint(c));
  const int delta = g.max_degree();
  for (const auto& z : c.cycles) {
    CHECK(z.vertices.size() >= 3);
    for (const Edge& e : cycle_edges(z)) CHECK(g.has_edge(e.u, e.v));
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == delta) CHECK(cycle_of(c, v) >= 0);
}

// the undirected graph behind the 7-vertex digraph of the bipartite-matching figure
Graph figure_graph() {
  return graph_of(7, {{0, 1}, {1, 4}, {4, 5}, {5, 3}, {3, 2}, {2, 0},
                      {3, 1}, {5, 6}, {6, 4}, {4, 3}, {1, 2}, {2, 5}});
}

}  // namespace

TEST_CASE("odd matching") {
  CHECK(odd_matching(cycle_graph(5)).empty());
  auto m = odd_matching(graph_of(3, {{0, 1}, {1, 2}}));
  CHECK(m == Matching{{0, 2}});
  CHECK(xor_with(graph_of(3, {{0, 1}, {1, 2}}), m) == complete_graph(3));
  Graph two = graph_of(4, {{0, 1}, {2, 3}});
  CHECK(xor_with(two, odd_matching(two)).all_even());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    Graph g = random_graph(15, 0.3, rng);
    auto mm = odd_matching(g);
    CHECK(static_cast<int>(mm.size()) == degree_profile(g).v_odd / 2);
    Graph e = xor_with(g, mm);
    CHECK(e.all_even());
    const int delta = g.max_degree();
    CHECK(e.max_degree() <= 2 * ((delta + 1) / 2));
  }
}

TEST_CASE("balanced orientation") {
  auto o = balanced_orientation(complete_graph(3));
  check_balanced(complete_graph(3), o);
  Graph c44 = graph_of(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
  check_balanced(c44, balanced_orientation(c44));
  check_balanced(complete_graph(5), balanced_orientation(complete_graph(5)));
  CHECK_THROWS_AS(balanced_orientation(graph_of(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("max degree cycle cover") {
  auto c = max_degree_cycle_cover(cycle_graph(6));
  REQUIRE(c.size() == 1);
  CHECK(c.cycles[0].vertices.size() == 6);
  Graph fig = figure_graph();
  CHECK(fig.all_even());
  auto cf = max_degree_cycle_cover(fig);
  check_cover(fig, cf);
  for (int v = 1; v <= 5; ++v) CHECK(cycle_of(cf, v) >= 0);
  check_cover(complete_graph(5), max_degree_cycle_cover(complete_graph(5)));
  CHECK_THROWS_AS(max_degree_cycle_cover(Graph(4)), std::invalid_argument);
}

TEST_CASE("peel layers") {
  // 4-regular circulant on 9 vertices
  std::vector<Edge> es;
  for (int i = 0; i < 9; ++i) {
    es.push_back(make_edge(i, (i + 1) % 9));
    es.push_back(make_edge(i, (i + 2) % 9));
  }
  Graph g(9, es);
  auto layers = peel_cycle_layers(g);
  CHECK(layers.size() == 2);
  for (const auto& l : layers) CHECK(l.vertices().size() == 9);
  CHECK(peel_cycle_layers(cycle_graph(4)).size() == 1);
  auto k5 = peel_cycle_layers(complete_graph(5));
  REQUIRE(k5.size() == 2);
  std::vector<Edge> all;
  for (const auto& l : k5)
    for (const Edge& e : l.edges()) all.push_back(e);
  std::sort(all.begin(), all.end());
  CHECK(all == complete_graph(5).edges());
}

TEST_CASE("random eulerian layers partition the edges") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    Graph g = random_eulerian(3 + t % 25, rng);
    if (g.num_edges() == 0) continue;
    check_cover(g, max_degree_cycle_cover(g));
    auto layers = peel_cycle_layers(g);
    CHECK(static_cast<int>(layers.size()) == g.max_degree() / 2);
    std::vector<Edge> all;
    for (const auto& l : layers) {
      CHECK(is_vertex_disjoint(l));
      for (const Edge& e : l.edges()) all.push_back(e);
    }
    std::sort(all.begin(), all.end());
    CHECK(all == g.edges());
  }
}
