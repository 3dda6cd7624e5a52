#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddcover/bounds.hpp"
#include "oddcover/errors.hpp"
#include "oddcover/iso.hpp"
#include "oddcover/oracle.hpp"
#include "support.hpp"

using namespace oddcover;
using namespace testing_support;

namespace {

Graph square() { return cycle_graph(4); }

void check_iso(const Graph& g, const IsoCover& c) {
  CHECK(verify_cover(c.cover).valid());
  CHECK(c.cover.target == g.with_isolated(c.added));
  CHECK(parity_matches(c.cover.target, c.cover.members, c.cover.kind == CoverKind::cycle));
}

}  // namespace

TEST_CASE("meet") {
  // two forests, each two single edges, around a 4-cycle
  IsoState s = iso_state(square(), {{make_edge(0, 1), make_edge(2, 3)}, {make_edge(1, 2), make_edge(0, 3)}});
  const auto before = iso_edges(s);
  CHECK_THROWS_AS(meet(s, 1, 2), std::invalid_argument);  // both partners are the edge 12
  IsoState t = meet(s, 1, 3);
  CHECK(t.num_vertices == 5);
  CHECK(t.forests[0].size() == 1);
  CHECK(iso_edges(t) == before);
  CHECK_THROWS_AS(meet(s, 0, 0), std::invalid_argument);
  IsoState far = iso_state(square(), {{make_edge(0, 1), make_edge(2, 3)}, {make_edge(1, 2), make_edge(0, 3)}});
  far.num_vertices = 6;
  CHECK_THROWS_AS(meet(far, 1, 5), std::invalid_argument);
}

TEST_CASE("iso_cover_from_forests") {
  SUBCASE("cycle split into two forests") {
    Graph g = cycle_graph(6);
    auto c = iso_cover_from_forests(g, {{make_edge(0, 1), make_edge(2, 3), make_edge(4, 5)},
                                        {make_edge(1, 2), make_edge(3, 4), make_edge(0, 5)}});
    CHECK(c.cover.count() == 2);
    check_iso(g, c);
  }
  SUBCASE("forests already single paths") {
    Graph g = cycle_graph(5);
    auto c = iso_cover_from_forests(g, {{make_edge(0, 1), make_edge(1, 2), make_edge(2, 3)},
                                        {make_edge(3, 4), make_edge(0, 4)}});
    CHECK(c.added == 0);
    CHECK(c.cover.count() == 2);
  }
  SUBCASE("random Eulerian graphs reach la") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 150; ++it) {
      Graph g = random_eulerian(3 + it % 8, rng);
      const int la = linear_arboricity(g);
      auto fs = exact_linear_forests(g, la);
      REQUIRE(fs);
      auto c = iso_cover_from_forests(g, *fs);
      CHECK(static_cast<int>(c.cover.count()) == la);
      check_iso(g, c);
      auto z = cycle_iso_cover(g, *fs);
      CHECK(z.cover.kind == CoverKind::cycle);
      CHECK(static_cast<int>(z.cover.count()) == la);
      CHECK(z.added == c.added + 1);
      check_iso(g, z);
    }
  }
  CHECK_THROWS_AS(iso_cover_from_forests(square(), {{make_edge(0, 1)}, {make_edge(1, 2), make_edge(2, 3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(iso_cover_from_forests(square(), {{make_edge(0, 1), make_edge(1, 2), make_edge(2, 3), make_edge(0, 3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(iso_cover_from_forests(graph_of(3, {{0, 1}}), {{make_edge(0, 1)}}), std::invalid_argument);
}

TEST_CASE("two_path_cover_la2") {
  SUBCASE("4-cycle, opposite pairs") {
    auto tp = two_path_cover_la2(square(), {make_edge(0, 1), make_edge(2, 3)}, {make_edge(1, 2), make_edge(0, 3)});
    CHECK(verify_cover(OddCover::of_paths(square(), {tp.p, tp.q})).valid());
  }
  SUBCASE("two disjoint cycles alternating") {
    Graph g = graph_of(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
    auto tp = two_path_cover_la2(g, {make_edge(0, 1), make_edge(2, 3), make_edge(4, 5), make_edge(6, 7)},
                                 {make_edge(1, 2), make_edge(0, 3), make_edge(5, 6), make_edge(4, 7)});
    CHECK(verify_cover(OddCover::of_paths(g, {tp.p, tp.q})).valid());
  }
  SUBCASE("every la-2 Eulerian graph on up to 6 vertices") {
    int count = 0;
    for (int n = 3; n <= 6; ++n)
      for (std::uint32_t mask = 1; mask < (1U << (n * (n - 1) / 2)); ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (!g.all_even()) continue;
        auto fs = exact_linear_forests(g, 2);
        if (!fs || (*fs)[0].empty() || (*fs)[1].empty()) continue;
        auto tp = two_path_cover_la2(g, (*fs)[0], (*fs)[1]);
        CHECK(verify_cover(OddCover::of_paths(g, {tp.p, tp.q})).valid());
        ++count;
      }
    CHECK(count > 100);
  }
  CHECK_THROWS_AS(two_path_cover_la2(Graph(3), {}, {}), std::invalid_argument);
}

TEST_CASE("iso_cover_general") {
  SUBCASE("Eulerian input uses forests only") {
    auto r = iso_cover_general(complete_graph(5));
    CHECK(r.report.budget.t == 0);
    CHECK(r.report.branch == "forests");
    CHECK(r.result.cover.count() == static_cast<std::size_t>(linear_arboricity(complete_graph(5))));
    check_iso(complete_graph(5), r.result);
  }
  SUBCASE("four odd vertices with a degree-3 vertex") {
    Graph g = graph_of(4, {{0, 1}, {0, 2}, {0, 3}});
    auto r = iso_cover_general(g);
    CHECK(r.report.budget.t == 2);
    check_iso(g, r.result);
  }
  SUBCASE("odd-dominated") {
    Graph g = graph_of(10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
    auto r = iso_cover_general(g);
    CHECK(r.report.budget.d < 0);
    CHECK(r.result.cover.count() <= 5);
    check_iso(g, r.result);
  }
  SUBCASE("random graphs stay within 2t + residual") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 300; ++it) {
      Graph g = random_graph(2 + it % 18, std::array{0.15, 0.35, 0.6}[it % 3], rng);
      auto r = iso_cover_general(g);
      check_iso(g, r.result);
      const auto& b = r.report.budget;
      if (b.d >= 0 && r.report.branch != "two-path") {
        CHECK(r.report.matching_paths <= 2 * b.t);
        CHECK(r.report.residual_degree <= b.d);
        if (r.report.residual_exact) CHECK(r.report.residual_paths <= b.d);
        CHECK(static_cast<int>(r.result.cover.count()) <= 2 * b.t + std::max(b.d, 0));
      } else {
        CHECK(static_cast<int>(r.result.cover.count()) <= std::max(2, degree_profile(g).v_odd / 2));
      }
    }
  }
}
