#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oddcover/bounds.hpp"
#include "oddcover/counterexample.hpp"
#include "oddcover/errors.hpp"
#include "oddcover/generators.hpp"
#include "oddcover/io.hpp"

using namespace oddcover;

namespace {

// encoder lives only here; the library reads graph6 but never writes it
std::string graph6_of(const Graph& g) {
  const int n = g.num_vertices();
  std::string s;
  if (n <= 62) {
    s += static_cast<char>(n + 63);
  } else {
    s += static_cast<char>(126);
    for (int sh = 12; sh >= 0; sh -= 6) s += static_cast<char>(((n >> sh) & 63) + 63);
  }
  int acc = 0, used = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = acc << 1 | (g.has_edge(u, v) ? 1 : 0);
      if (++used == 6) {
        s += static_cast<char>(acc + 63);
        acc = used = 0;
      }
    }
  if (used) s += static_cast<char>((acc << (6 - used)) + 63);
  return s;
}

int parse_error_line(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("edge list parsing") {
  const Graph p = parse_edge_list("3 2\n0 1\n1 2");
  CHECK(p.num_vertices() == 3);
  CHECK(p.num_edges() == 2);
  CHECK(p.has_edge(0, 1));
  CHECK(p.has_edge(1, 2));
  CHECK(parse_error_line("3 1\n0 0") == 2);
  CHECK(parse_error_line("4 2\n0 1\n0 1") == 3);
  CHECK(parse_error_line("4 2\n0 1\n1 0") == 3);
  CHECK(parse_error_line("3 1\n0 3") == 2);
  CHECK(parse_error_line("3 1\n0 x") == 2);
  CHECK(parse_error_line("3 2\n0 1") == 2);
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("# header next\n\n3\n") == 3);
  const Graph c = parse_edge_list("# triangle\n3 3\n\n0 1 # first\n2 1\n0 2\n");
  CHECK(c.num_edges() == 3);
  CHECK(c.has_edge(1, 2));
  CHECK(parse_edge_list("5 0\n").num_vertices() == 5);
}

TEST_CASE("graph6 parsing") {
  CHECK(parse_graph6("B_") == parse_edge_list("3 1\n0 1"));
  CHECK(parse_graph6("Bw") == parse_edge_list("3 3\n0 1\n0 2\n1 2"));
  const Graph e5 = parse_graph6("D??");
  CHECK(e5.num_vertices() == 5);
  CHECK(e5.num_edges() == 0);
  CHECK(parse_graph6("C~").num_edges() == 6);
  CHECK(parse_graph6(">>graph6<<C~\n").num_edges() == 6);
  CHECK(parse_graph6("@").num_vertices() == 1);
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK_THROWS_AS(parse_graph6("B "), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);  // padding bit set
  CHECK(parse_graph_auto("C~") == complete_graph(4));
  CHECK(parse_graph_auto("4 0") == Graph(4));
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    const int n = static_cast<int>(rng() % 70);
    const Graph g = gnp(n, (rng() % 100) / 100.0, rng());
    CHECK(parse_edge_list(emit_edge_list(g)) == g);
    CHECK(parse_graph6(graph6_of(g)) == g);
    CHECK(parse_graph_auto(graph6_of(g)) == g);
  }
}

TEST_CASE("witness json") {
  const Graph g = parse_edge_list("3 2\n0 1\n1 2");
  const OddCover c = OddCover::of_paths(g, {Path{{0, 1, 2}}});
  const auto j = witness_json(c, true);
  CHECK(j["n"] == 3);
  CHECK(j["kind"] == "path");
  CHECK(j["count"] == 1);
  CHECK(j["valid"] == true);
  const ParsedWitness w = parse_witness(j);
  CHECK(w.members == c.members);
  CHECK(!w.chains);
  CHECK_THROWS_AS(parse_witness(nlohmann::json{{"n", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_witness(nlohmann::json{{"n", 3}, {"kind", "tree"}, {"members", nlohmann::json::array()}}),
                  std::invalid_argument);
  auto js = j;
  js["subdivision"] = subdivision_json(g, {{0, 1}, {1, 2}});
  CHECK(parse_witness(js).chains->size() == 2);
  CHECK(bounds_json({1, 2, "x"})["upper"] == 2);
}

TEST_CASE("families") {
  const FamilySpec f = parse_family("gnp(10, 0.5, 7)");
  CHECK(f.name == "gnp");
  CHECK(f.args == std::vector<std::string>{"10", "0.5", "7"});
  CHECK(generate(f) == gnp(10, 0.5, 7));
  CHECK_THROWS_AS(parse_family("gnp"), std::invalid_argument);
  CHECK_THROWS_AS(generate(parse_family("gnp(3)")), std::invalid_argument);
  CHECK_THROWS_AS(generate(parse_family("nope(3)")), std::invalid_argument);
  CHECK_THROWS_AS(generate(parse_family("cycles(2,2)")), std::invalid_argument);
  CHECK_THROWS_AS(generate(parse_family("gnp(3,1.5,1)")), std::invalid_argument);
  CHECK_THROWS_AS(generate(parse_family("cycles(a,4)")), std::invalid_argument);

  const Graph c44 = generate(parse_family("cycles(4,4)"));
  CHECK(c44.num_vertices() == 16);
  CHECK(degree_profile(c44).v_odd == 0);
  CHECK(c44.max_degree() == 2);

  for (int k = 1; k <= 5; ++k) {
    const Graph cp = cycles_on_path(k, 5);
    const auto d = degree_profile(cp);
    CHECK(cp.num_edges() == static_cast<std::size_t>(5 * k + k + 1));
    CHECK(d.v_odd == 2 * k + 2);
    CHECK(d.max_degree == 3);
    CHECK(edge_components(cp).size() == 1);
  }

  const Graph cx = generate(parse_family("counterexample(3)"));
  CHECK(cx.num_vertices() == 14);
  CHECK(degree_profile(cx).max_degree == 6);
  CHECK(degree_profile(cx).v_odd == 0);

  CHECK(generate(parse_family("walecki(3)")) == complete_graph(7));
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph e = eulerian_random(3 + static_cast<int>(s % 20), s);
    CHECK(e.all_even());
    CHECK(generate(parse_family("eulerian-random(" + std::to_string(3 + s % 20) + "," + std::to_string(s) + ")")) == e);
  }
}
