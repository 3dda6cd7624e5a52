#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oddcover/bounds.hpp"
#include "oddcover/counterexample.hpp"
#include "support.hpp"

using namespace oddcover;
using namespace testing_support;

TEST_CASE("walecki partitions the complete graph") {
  for (int k = 1; k <= 8; ++k) {
    const auto cs = walecki_cycles(k);
    REQUIRE(cs.size() == static_cast<std::size_t>(k));
    std::set<Edge> seen;
    for (const Cycle& c : cs) {
      CHECK(c.vertices.size() == static_cast<std::size_t>(2 * k + 1));
      for (const Edge& e : cycle_edges(c)) CHECK(seen.insert(e).second);
    }
    CHECK(seen.size() == static_cast<std::size_t>(k * (2 * k + 1)));
  }
  CHECK_THROWS_AS(walecki_cycles(0), std::invalid_argument);
}

TEST_CASE("counterexample family") {
  for (int k : {3, 5, 7, 9}) {
    CAPTURE(k);
    const Counterexample cx = gen_counterexample(k);
    CHECK(cx.g.num_vertices() == 4 * k + 2);
    CHECK(cx.g.num_edges() == static_cast<std::size_t>(4 * k * k + k - 1));
    CHECK(cx.g.max_degree() == 2 * k);
    CHECK(lower_bound(cx.g) == k);
    CHECK(cx.paths.size() == static_cast<std::size_t>(k + 1));
    CHECK(verify_cover(OddCover::of_paths(cx.g, cx.paths)).valid());
    // the forests decompose E exactly
    REQUIRE(cx.forests.size() == static_cast<std::size_t>(k));
    std::set<Edge> all;
    for (const auto& f : cx.forests)
      for (const Edge& e : f) CHECK(all.insert(e).second);
    CHECK(all.size() == cx.g.num_edges());
    CHECK(cx.certificate());
    CHECK(cx.needed == 4 * k * k + k + 1);
    CHECK(cx.available == k * (4 * k + 1));
    CHECK(verify_cover(cx.iso.cover).valid());
    CHECK(cx.iso.cover.count() == static_cast<std::size_t>(k));
    CHECK(cx.iso.cover.target == cx.g.with_isolated(cx.iso.added));
  }
  CHECK_THROWS_AS(gen_counterexample(4), std::invalid_argument);
  CHECK_THROWS_AS(gen_counterexample(1), std::invalid_argument);
}
