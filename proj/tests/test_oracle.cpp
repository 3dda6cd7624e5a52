#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddcover/bounds.hpp"
#include "oddcover/errors.hpp"
#include "oddcover/oracle.hpp"
#include "oddcover/solver.hpp"
#include "support.hpp"

using namespace oddcover;
using namespace testing_support;

namespace {

bool is_linear_forest(int n, const std::vector<Edge>& es) {
  std::vector<int> deg(n, 0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : es) {
    if (++deg[e.u] > 2 || ++deg[e.v] > 2) return false;
    const int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

void check_forests(const Graph& g, const LinearForests& fs) {
  std::vector<Edge> all;
  for (const auto& f : fs) {
    CHECK(is_linear_forest(g.num_vertices(), f));
    all.insert(all.end(), f.begin(), f.end());
  }
  std::sort(all.begin(), all.end());
  CHECK(all == g.edges());
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_paths(2).size() == 1);
  CHECK(enumerate_paths(3).size() == 6);
  CHECK(enumerate_paths(6).size() == 975);
  CHECK(enumerate_paths(7).size() == 6846);
  CHECK(enumerate_cycles(3).size() == 1);
  CHECK(enumerate_cycles(4).size() == 7);
  CHECK(enumerate_cycles(7).size() == 1172);
  auto ps = enumerate_paths(5);
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK_FALSE(ps[i] == ps[i + 1]);
  CHECK_THROWS_AS(enumerate_paths(8), std::invalid_argument);
}

TEST_CASE("exact_p2 small cases") {
  CHECK(exact_p2(graph_of(4, {{0, 1}, {1, 2}, {2, 3}}), 5)->k == 1);
  CHECK(exact_p2(cycle_graph(4), 5)->k == 2);
  Graph two_triangles = graph_of(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  auto r = exact_p2(two_triangles, 5);
  REQUIRE(r);
  CHECK(r->k == 2);
  CHECK(verify_cover(r->witness).valid());
  auto k4 = exact_p2(complete_graph(4), 5);
  REQUIRE(k4);
  CHECK(k4->k >= 2);
  CHECK(exact_p2(Graph(5), 3)->k == 0);
  CHECK_FALSE(exact_p2(complete_graph(6), 1));
  CHECK_THROWS_AS(exact_p2(Graph(8), 3), std::invalid_argument);
}

TEST_CASE("exact_p2 at n = 7") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 40; ++it) {
    Graph g = random_graph(7, 0.5, rng);
    auto r = exact_p2(g, 4);
    auto c = path_odd_cover(g);
    if (!r) {
      CHECK(c.count() > 4);
      continue;
    }
    CHECK(verify_cover(r->witness).valid());
    CHECK(r->k >= lower_bound(g));
    CHECK(r->k <= static_cast<int>(c.count()));
  }
  CHECK(exact_p2(cycle_graph(7), 4)->k == 2);
}

TEST_CASE("bound chain on small graphs") {
  for (int n = 1; n <= 5; ++n)
    for (std::uint32_t mask = 0; mask < (1U << (n * (n - 1) / 2)); ++mask) {
      Graph g = graph_from_mask(n, mask);
      CHECK(mask_of(g) == mask);
      auto r = exact_p2(g, 10);
      REQUIRE(r);
      const int la = linear_arboricity(g);
      CHECK(r->k >= la);
      CHECK(la >= arboricity_density(g));
      CHECK(r->k >= lower_bound(g));
      CHECK(r->k <= static_cast<int>(path_odd_cover(g).count()));
      if (n <= 4) {
        auto iso = exact_p2_iso(g, 7 - n, 10);
        REQUIRE(iso);
        CHECK(iso->k <= r->k);
        CHECK(iso->k >= la);
        CHECK(verify_cover(iso->witness).valid());
        CHECK(iso->witness.target.num_vertices() == n + iso->added);
      }
    }
}

TEST_CASE("exact_c2") {
  CHECK(exact_c2(cycle_graph(5), 4)->k == 1);
  Graph two_triangles = graph_of(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(exact_c2(two_triangles, 4)->k == 2);
  auto k5 = exact_c2(complete_graph(5), 6);
  REQUIRE(k5);
  CHECK(k5->k >= 2);
  CHECK(k5->witness.kind == CoverKind::cycle);
  CHECK(verify_cover(k5->witness).valid());
  CHECK_THROWS_AS(exact_c2(graph_of(3, {{0, 1}}), 3), std::invalid_argument);
  std::mt19937_64 rng(8);
  for (int it = 0; it < 100; ++it) {
    Graph g = random_eulerian(3 + it % 5, rng);
    auto r = exact_c2(g, 10);
    REQUIRE(r);
    CHECK(2 * r->k >= g.max_degree());
    CHECK(r->k <= static_cast<int>(cycle_odd_cover(g).count()));
  }
}

TEST_CASE("exact_linear_forests") {
  CHECK(exact_linear_forests(cycle_graph(5), 2));
  CHECK_FALSE(exact_linear_forests(cycle_graph(5), 1));
  auto k4 = exact_linear_forests(complete_graph(4), 2);
  REQUIRE(k4);
  check_forests(complete_graph(4), *k4);
  CHECK(linear_arboricity(complete_graph(5)) == 3);
  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    Graph g = random_graph(2 + it % 9, 0.5, rng);
    const int la = linear_arboricity(g);
    auto fs = exact_linear_forests(g, la);
    REQUIRE(fs);
    check_forests(g, *fs);
    if (la > 0) CHECK_FALSE(exact_linear_forests(g, la - 1));
  }
  CHECK_THROWS_AS(exact_linear_forests(Graph(11), 2), std::invalid_argument);
  CHECK_THROWS_AS(exact_linear_forests(complete_graph(10), 5, 10), BudgetExceeded);
}

TEST_CASE("gap scan") {
  auto rep = scan_bound_gaps(4);
  CHECK(rep.graphs == 1 + 2 + 8 + 64);
  CHECK(rep.max_gap_density >= 0);
  CHECK(rep.max_gap_la <= rep.max_gap_density);
  REQUIRE(rep.worst);
}
