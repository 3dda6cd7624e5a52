#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddcover/errors.hpp"
#include "oddcover/path_system.hpp"
#include "oddcover/topological.hpp"
#include "oddcover/two_path_kit.hpp"
#include "support.hpp"

using namespace oddcover;
using namespace testing_support;

namespace {

PathKSystem square_system() {
  PathKSystem s;
  s.num_vertices = 4;
  s.collections = {{Path{{0, 1}}, Path{{2, 3}}}, {Path{{1, 2}}, Path{{3, 0}}}};
  return s;
}

int bound_k(const Graph& g) {
  const auto prof = degree_profile(g);
  return std::max(prof.v_odd / 2, (prof.max_degree + 1) / 2);
}

void check_top(const Graph& g, const TopologicalCover& t) {
  CHECK(verify_cover(t.cover).valid());
  CHECK(t.cover.target == t.h);
  CHECK(is_subdivision_of(t.h, g, t.chains));
  CHECK(parity_matches(t.h, t.cover.members, t.cover.kind == CoverKind::cycle));
}

}  // namespace

TEST_CASE("endpoint classification") {
  auto s = square_system();
  auto info = classify_endpoints(s);
  CHECK(info.size() == 4);
  for (const auto& [v, e] : info) CHECK(e.type == EndpointType::II);
  CHECK(is_well_distributed(s));

  PathKSystem bad = s;
  bad.collections[0].push_back(Path{{1, 3}});
  CHECK_FALSE(is_path_k_system(bad));

  PathKSystem same_edge;
  same_edge.num_vertices = 3;
  same_edge.collections = {{Path{{0, 1}}}, {Path{{0, 1}}}};
  CHECK_FALSE(is_path_k_system(same_edge));

  // (iii): a path with two type I ends in a collection of two
  PathKSystem loose;
  loose.num_vertices = 6;
  loose.collections = {{Path{{0, 1}}, Path{{2, 3}}}, {Path{{4, 5}}}};
  CHECK(is_path_k_system(loose));
  CHECK_FALSE(is_well_distributed(loose));
}

TEST_CASE("join") {
  auto s = square_system();
  auto before = system_edges(s);
  auto j = join(s, 1, 3);
  CHECK(j.total_paths() == 2);
  CHECK(system_edges(j) == before);
  CHECK(is_well_distributed(j));
  CHECK_THROWS_AS(join(s, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(join(s, 1, 1), std::invalid_argument);

  PathKSystem with_one = s;
  with_one.num_vertices = 6;
  with_one.collections[0].push_back(Path{{4, 5}});
  CHECK_THROWS_AS(join(with_one, 4, 1), std::invalid_argument);
}

TEST_CASE("insert") {
  Graph g = complete_graph(7);  // Delta 6, k = 3
  PathKSystem s = coloured_system(g);
  REQUIRE(s.k() == 3);
  auto info = classify_endpoints(s);
  bool tried = false;
  for (const auto& [u, e] : info) {
    if (e.type != EndpointType::II) continue;
    const int i = e.paths[0].collection, j = e.paths[1].collection;
    const int r = 3 - i - j;
    auto t = insert(s, u, i, r);
    CHECK(t.num_vertices == s.num_vertices + 1);
    CHECK(t.total_paths() == s.total_paths() + 1);
    CHECK(t.collections[i].size() == s.collections[i].size());
    CHECK(t.collections[r].size() == s.collections[r].size() + 1);
    CHECK(t.subdivisions.size() == 1);
    CHECK(is_well_distributed(t));
    CHECK_THROWS_AS(insert(s, u, i, i), std::invalid_argument);
    CHECK_THROWS_AS(insert(s, u, i, j), std::invalid_argument);
    tried = true;
    break;
  }
  CHECK(tried);
  CHECK_THROWS_AS(insert(square_system(), 1, 0, 1), std::invalid_argument);
}

TEST_CASE("reduce_system") {
  SUBCASE("singletons are left alone") {
    PathKSystem s;
    s.num_vertices = 4;
    s.collections = {{Path{{0, 1, 2}}}, {Path{{2, 3, 0}}}};
    auto r = reduce_system(s);
    CHECK(r.collections == s.collections);
  }
  SUBCASE("square") {
    auto r = reduce_system(square_system());
    CHECK(r.total_paths() == 2);
    CHECK(system_edges(r) == system_edges(square_system()));
  }
  SUBCASE("K4 colouring") {
    auto r = reduce_system(coloured_system(complete_graph(4)));
    CHECK(r.total_paths() == 2);
  }
  CHECK_THROWS_AS(reduce_system(PathKSystem{6, {{Path{{0, 1}}, Path{{2, 3}}}, {Path{{4, 5}}}}, {}}),
                  std::invalid_argument);
}

TEST_CASE("coloured system is well-distributed") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    Graph g = random_graph(2 + it % 19, std::array{0.15, 0.3, 0.6}[it % 3], rng);
    if (bound_k(g) < 2) continue;
    auto s = coloured_system(g);
    CHECK(s.k() == bound_k(g));
    CHECK(is_well_distributed(s));
    CHECK(system_edges(s) == Graph(s.num_vertices, system_edges(s)).edges());
  }
}

TEST_CASE("topological_cover") {
  SUBCASE("path graph is its own cover") {
    Graph g = graph_of(4, {{0, 1}, {1, 2}, {2, 3}});
    auto t = topological_cover(g);
    CHECK(t.h == g);
    CHECK(t.cover.count() == 1);
    check_top(g, t);
  }
  SUBCASE("K4 and K5 need two paths") {
    for (int n : {4, 5}) {
      Graph g = complete_graph(n);
      auto t = topological_cover(g);
      CHECK(t.cover.count() == 2);
      check_top(g, t);
    }
  }
  SUBCASE("exceptional family is rejected") {
    CHECK_THROWS_AS(topological_cover(cycle_graph(5)), std::invalid_argument);
    Graph cp = graph_of(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}});
    CHECK(is_topological_exception(cp));
    CHECK_THROWS_AS(topological_cover(cp), std::invalid_argument);
    Graph two_paths = graph_of(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {5, 6}});
    CHECK_FALSE(is_topological_exception(two_paths));
    auto t = topological_cover(two_paths);
    CHECK(t.cover.count() == 2);
    check_top(two_paths, t);
  }
  SUBCASE("random graphs hit the bound exactly") {
    std::mt19937_64 rng(17);
    int tested = 0;
    for (int it = 0; it < 400; ++it) {
      Graph g = random_graph(1 + it % 20, std::array{0.1, 0.3, 0.5}[it % 3], rng);
      if (is_topological_exception(g)) {
        CHECK_THROWS_AS(topological_cover(g), std::invalid_argument);
        continue;
      }
      auto t = topological_cover(g);
      CHECK(static_cast<int>(t.cover.count()) == bound_k(g));
      check_top(g, t);
      ++tested;
    }
    CHECK(tested > 300);
  }
}

TEST_CASE("cycle_top_cover") {
  SUBCASE("single cycle") {
    auto t = cycle_top_cover(cycle_graph(6));
    CHECK(t.cover.count() == 1);
    check_top(cycle_graph(6), t);
  }
  SUBCASE("K5") {
    auto t = cycle_top_cover(complete_graph(5));
    CHECK(t.cover.count() == 2);
    CHECK(t.cover.kind == CoverKind::cycle);
    check_top(complete_graph(5), t);
  }
  SUBCASE("random Eulerian graphs") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 300; ++it) {
      Graph g = random_eulerian(3 + it % 18, rng);
      const auto comps = edge_components(g);
      if (g.max_degree() == 2 && comps.size() > 1) {
        CHECK_THROWS_AS(cycle_top_cover(g), std::invalid_argument);
        continue;
      }
      auto t = cycle_top_cover(g);
      CHECK(static_cast<int>(t.cover.count()) == g.max_degree() / 2);
      check_top(g, t);
      for (const auto& m : t.cover.members) CHECK(m.size() >= 3);
    }
  }
  CHECK_THROWS_AS(cycle_top_cover(graph_of(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(cycle_top_cover(graph_of(3, {{0, 1}})), std::invalid_argument);
}
