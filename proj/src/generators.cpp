#include "oddcover/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "oddcover/counterexample.hpp"

namespace oddcover {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

long long int_arg(const std::string& s) {
  long long x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  require(ec == std::errc() && p == s.data() + s.size(), "expected an integer, got \"" + s + "\"");
  return x;
}

double real_arg(const std::string& s) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == s.size() && !s.empty(), "expected a number, got \"" + s + "\"");
  return x;
}

void add_cycle(std::vector<Edge>& es, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) es.push_back(make_edge(vs[i], vs[(i + 1) % vs.size()]));
}

}  // namespace

Graph gnp(int n, double p, std::uint64_t seed) {
  require(n >= 0 && p >= 0 && p <= 1, "gnp needs n >= 0 and 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.push_back({i, j});
  return Graph(n, es);
}

Graph disjoint_cycles(int k, int len) {
  require(k >= 0 && len >= 3, "cycles needs k >= 0 and len >= 3");
  std::vector<Edge> es;
  for (int c = 0; c < k; ++c) {
    std::vector<Vertex> vs(len);
    std::iota(vs.begin(), vs.end(), c * len);
    add_cycle(es, vs);
  }
  std::sort(es.begin(), es.end());
  return Graph(k * len, es);
}

Graph cycles_on_path(int k, int len) {
  require(k >= 1 && len >= 3, "cycles-on-path needs k >= 1 and len >= 3");
  // vertex 0 and the last vertex are the pendant ends; cycle c owns c*len+1 .. c*len+len
  const int n = k * len + 2;
  std::vector<Edge> es;
  Vertex prev = 0;
  for (int c = 0; c < k; ++c) {
    std::vector<Vertex> vs(len);
    std::iota(vs.begin(), vs.end(), c * len + 1);
    add_cycle(es, vs);
    es.push_back(make_edge(prev, vs.front()));
    prev = vs.back();  // the path continues across the cycle edge front-back
  }
  es.push_back(make_edge(prev, n - 1));
  std::sort(es.begin(), es.end());
  return Graph(n, es);
}

Graph complete_graph(int n) {
  require(n >= 0, "complete graph needs n >= 0");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph(n, es);
}

Graph eulerian_random(int n, std::uint64_t seed) {
  require(n >= 0, "eulerian-random needs n >= 0");
  std::mt19937_64 rng(seed);
  std::set<Edge> es;
  if (n >= 3) {
    std::uniform_int_distribution<int> len(3, n);
    const int count = 1 + n / 2;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int c = 0; c < count; ++c) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Vertex> vs(perm.begin(), perm.begin() + len(rng));
      std::vector<Edge> cyc;
      add_cycle(cyc, vs);
      for (const Edge& e : cyc)
        if (!es.erase(e)) es.insert(e);
    }
  }
  return Graph(n, std::vector<Edge>(es.begin(), es.end()));
}

FamilySpec parse_family(std::string_view text) {
  const auto open = text.find('(');
  require(open != std::string_view::npos && !text.empty() && text.back() == ')',
          "family must look like name(args)");
  FamilySpec f;
  f.name = std::string(text.substr(0, open));
  std::string_view inner = text.substr(open + 1, text.size() - open - 2);
  while (!inner.empty()) {
    const auto comma = inner.find(',');
    std::string a(inner.substr(0, comma));
    a.erase(std::remove_if(a.begin(), a.end(), ::isspace), a.end());
    require(!a.empty(), "empty family argument");
    f.args.push_back(a);
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
    require(!inner.empty(), "trailing comma in family arguments");
  }
  return f;
}

Graph generate(const FamilySpec& f) {
  auto arity = [&](std::size_t k) {
    require(f.args.size() == k, f.name + " takes " + std::to_string(k) + " arguments");
  };
  auto small = [](long long x) {
    require(x >= 0 && x <= 100000, "argument out of range");
    return static_cast<int>(x);
  };
  if (f.name == "gnp") {
    arity(3);
    return gnp(small(int_arg(f.args[0])), real_arg(f.args[1]), static_cast<std::uint64_t>(int_arg(f.args[2])));
  }
  if (f.name == "cycles") {
    arity(2);
    return disjoint_cycles(small(int_arg(f.args[0])), small(int_arg(f.args[1])));
  }
  if (f.name == "cycles-on-path") {
    arity(2);
    return cycles_on_path(small(int_arg(f.args[0])), small(int_arg(f.args[1])));
  }
  if (f.name == "walecki") {
    arity(1);
    const int k = small(int_arg(f.args[0]));
    require(k >= 1, "walecki needs k >= 1");
    return complete_graph(2 * k + 1);
  }
  if (f.name == "counterexample") {
    arity(1);
    return gen_counterexample(small(int_arg(f.args[0]))).g;
  }
  if (f.name == "eulerian-random") {
    arity(2);
    return eulerian_random(small(int_arg(f.args[0])), static_cast<std::uint64_t>(int_arg(f.args[1])));
  }
  throw std::invalid_argument("unknown family " + f.name);
}

}  // namespace oddcover
