#include "oddcover/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "oddcover/errors.hpp"

namespace oddcover {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto a = s.find_first_not_of(ws);
  if (a == std::string_view::npos) return {};
  return s.substr(a, s.find_last_not_of(ws) - a + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view t, long long& out) {
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  return ec == std::errc() && p == t.data() + t.size();
}

// strips comments and whitespace; keeps 1-based line numbers
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view l = text.substr(pos, end - pos);
    if (auto h = l.find('#'); h != std::string_view::npos) l = l.substr(0, h);
    l = trim(l);
    if (!l.empty()) out.emplace_back(line, l);
    pos = end + 1;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing \"n m\" header");
  const auto head = tokens(lines[0].second);
  long long n = 0, m = 0;
  if (head.size() != 2 || !to_int(head[0], n) || !to_int(head[1], m) || n < 0 || m < 0)
    throw ParseError(lines[0].first, "header must be \"n m\" with non-negative integers");
  if (n > 1'000'000) throw ParseError(lines[0].first, "vertex count too large");
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [line, l] = lines[i];
    const auto t = tokens(l);
    long long u = 0, v = 0;
    if (t.size() != 2 || !to_int(t[0], u) || !to_int(t[1], v)) throw ParseError(line, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line, "vertex out of range");
    if (u == v) throw ParseError(line, "self-loop");
    const Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) throw ParseError(line, "duplicate edge");
    edges.push_back(e);
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lines.back().first, "header announces " + std::to_string(m) + " edges, found " +
                                             std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  if (s.starts_with(">>graph6<<")) s = s.substr(10);
  if (s.find('\n') != std::string_view::npos) throw ParseError(1, "more than one graph6 record");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError(1, "malformed graph6 byte");
  if (s.empty()) throw ParseError(1, "empty graph6 record");
  std::size_t pos = 0;
  long long n = 0;
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw ParseError(1, "unsupported graph6 size prefix");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
    pos = 4;
  }
  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(s.size() - pos) != bytes) throw ParseError(1, "graph6 length mismatch");
  std::vector<Edge> edges;
  long long k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = s[pos + k / 6] - 63;
      if (byte >> (5 - k % 6) & 1) edges.push_back({u, v});
    }
  for (; k < bytes * 6; ++k)
    if ((s[pos + k / 6] - 63) >> (5 - k % 6) & 1) throw ParseError(1, "nonzero graph6 padding");
  std::sort(edges.begin(), edges.end());
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph_auto(std::string_view text) {
  const auto lines = content_lines(text);
  if (!lines.empty()) {
    const auto t = tokens(lines[0].second);
    long long x = 0;
    if (t.size() == 1 && !to_int(t[0], x)) return parse_graph6(lines[0].second);
  }
  return parse_edge_list(text);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

nlohmann::json witness_json(const OddCover& cover, bool valid) {
  return {{"n", cover.target.num_vertices()},
          {"kind", to_string(cover.kind)},
          {"members", cover.members},
          {"valid", valid},
          {"count", cover.count()}};
}

nlohmann::json bounds_json(const Bounds& b) {
  return {{"lower", b.lower}, {"upper", b.upper}, {"method", b.method}};
}

nlohmann::json subdivision_json(const Graph& g, const std::vector<std::vector<Vertex>>& chains) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    arr.push_back({{"edge", {g.edges()[i].u, g.edges()[i].v}}, {"chain", chains.at(i)}});
  return {{"original_n", g.num_vertices()}, {"chains", arr}};
}

ParsedWitness parse_witness(const nlohmann::json& j) {
  try {
    ParsedWitness w;
    w.n = j.at("n").get<int>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "path") w.kind = CoverKind::path;
    else if (kind == "cycle") w.kind = CoverKind::cycle;
    else throw std::invalid_argument("unknown witness kind " + kind);
    w.members = j.at("members").get<std::vector<std::vector<Vertex>>>();
    if (j.contains("subdivision")) {
      std::vector<std::vector<Vertex>> chains;
      for (const auto& c : j.at("subdivision").at("chains")) chains.push_back(c.at("chain").get<std::vector<Vertex>>());
      w.chains = std::move(chains);
    }
    if (w.n < 0) throw std::invalid_argument("negative vertex count");
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed witness: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return os.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("error writing " + path);
}

}  // namespace oddcover
