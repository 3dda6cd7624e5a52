#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <random>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddcover/bounds.hpp"
#include "oddcover/counterexample.hpp"
#include "oddcover/errors.hpp"
#include "oddcover/generators.hpp"
#include "oddcover/io.hpp"
#include "oddcover/iso.hpp"
#include "oddcover/oracle.hpp"
#include "oddcover/solver.hpp"
#include "oddcover/topological.hpp"

using namespace oddcover;
using nlohmann::json;

namespace {

enum Exit { ok = 0, invalid = 1, io = 2, internal = 3 };

struct Io {
  std::string input = "-";
  std::string format = "auto";
  std::string output = "-";
  bool pretty = false;
};

Graph load_graph(const std::string& path, const std::string& format) {
  std::string text;
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else {
    text = read_file(path);
  }
  if (format == "edges") return parse_edge_list(text);
  if (format == "graph6") return parse_graph6(text);
  return parse_graph_auto(text);
}

void emit(const Io& io, const std::string& text) {
  if (io.output == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("error writing stdout");
  } else {
    write_file(io.output, text);
  }
}

void emit(const Io& io, const json& j) { emit(io, j.dump(io.pretty ? 2 : -1) + "\n"); }

// refuses to print anything that does not verify
void self_check(const OddCover& c) {
  if (!verify_cover(c).valid()) throw InternalError("constructed cover failed verification");
}

int delta_half(const Graph& g) { return (g.max_degree() + 1) / 2; }

json cover_graph(const Graph& g, const std::string& method) {
  OddCover c = method == "first" ? cover_first_bound(g) : path_odd_cover(g);
  self_check(c);
  json j = witness_json(c, true);
  if (method == "first")
    j["bounds"] = bounds_json({lower_bound(g), g.max_degree() + degree_profile(g).v_odd / 2, "delta-plus-odd"});
  else
    j["bounds"] = bounds_json({lower_bound(g), path_cover_upper_bound(g), "eulerian-plus-matching"});
  return j;
}

json cycle_cover_graph(const Graph& g) {
  OddCover c = cycle_odd_cover(g);
  self_check(c);
  json j = witness_json(c, true);
  j["bounds"] = bounds_json({delta_half(g), g.max_degree(), "cycle-layers"});
  return j;
}

json top_cover_graph(const Graph& g, bool cycles) {
  TopologicalCover t = cycles ? cycle_top_cover(g) : topological_cover(g);
  self_check(t.cover);
  if (!is_subdivision_of(t.h, g, t.chains)) throw InternalError("subdivision map does not match the input graph");
  json j = witness_json(t.cover, true);
  const int lb = cycles ? delta_half(g) : lower_bound(g);
  j["bounds"] = bounds_json({lb, lb, cycles ? "topological-cycles" : "topological"});
  j["subdivision"] = subdivision_json(g, t.chains);
  return j;
}

json iso_cover_graph(const Graph& g) {
  IsoGeneralResult r = iso_cover_general(g);
  self_check(r.result.cover);
  if (r.result.cover.target != g.with_isolated(r.result.added)) throw InternalError("iso cover has the wrong target");
  json j = witness_json(r.result.cover, true);
  j["added"] = r.result.added;
  j["bounds"] = bounds_json({lower_bound(g), static_cast<int>(r.result.cover.count()), r.report.branch});
  j["report"] = {{"branch", r.report.branch},
                 {"t", r.report.budget.t},
                 {"d", r.report.budget.d},
                 {"matching_paths", r.report.matching_paths},
                 {"residual_paths", r.report.residual_paths},
                 {"residual_degree", r.report.residual_degree},
                 {"residual_exact", r.report.residual_exact}};
  return j;
}

json gen_json(const FamilySpec& f, const Graph& g) {
  json j = {{"family", f.name}, {"n", g.num_vertices()}, {"m", g.num_edges()}, {"edges", json::array()}};
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  if (f.name == "walecki") {
    const auto cs = walecki_cycles(static_cast<int>(std::stol(f.args[0])));
    OddCover c = OddCover::of_cycles(g, cs);
    self_check(c);
    j["witness"] = witness_json(c, true);
  } else if (f.name == "counterexample") {
    const Counterexample cx = gen_counterexample(static_cast<int>(std::stol(f.args[0])));
    OddCover paths = OddCover::of_paths(cx.g, cx.paths);
    self_check(paths);
    self_check(cx.iso.cover);
    j["witness"] = witness_json(paths, true);
    json fs = json::array();
    for (const auto& fo : cx.forests) {
      json arr = json::array();
      for (const Edge& e : fo) arr.push_back({e.u, e.v});
      fs.push_back(arr);
    }
    j["forests"] = fs;
    j["iso"] = witness_json(cx.iso.cover, true);
    j["iso"]["added"] = cx.iso.added;
    j["certificate"] = {{"needed", cx.needed}, {"available", cx.available}, {"holds", cx.certificate()}};
  }
  return j;
}

int threads_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* s = std::getenv("ODDCOVER_THREADS")) {
    const int v = std::atoi(s);
    if (v >= 1) return static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(v)));
  }
  return static_cast<int>(hw);
}

struct BenchOpts {
  std::string solver = "cover";
  int instances = 100;
  int min_n = 5;
  int max_n = 40;
  std::vector<double> densities{0.1, 0.3, 0.5};
  std::vector<std::string> families;
  std::uint64_t seed = 1;
  bool ordered = false;
};

json bench_one(const BenchOpts& o, int idx) {
  Graph g;
  std::string source;
  if (!o.families.empty()) {
    source = o.families[idx % o.families.size()];
    g = generate(parse_family(source));
  } else {
    std::mt19937_64 rng(o.seed * 1000003ULL + static_cast<std::uint64_t>(idx));
    const int n = std::uniform_int_distribution<int>(o.min_n, o.max_n)(rng);
    const std::uint64_t s = rng();
    if (o.solver == "cycle-cover") {
      g = eulerian_random(n, s);
      source = "eulerian-random(" + std::to_string(n) + "," + std::to_string(s) + ")";
    } else {
      const double p = o.densities[rng() % o.densities.size()];
      g = gnp(n, p, s);
      source = "gnp(" + std::to_string(n) + "," + json(p).dump() + "," + std::to_string(s) + ")";
    }
  }
  const auto t0 = std::chrono::steady_clock::now();
  json w;
  try {
    if (o.solver == "cover") w = cover_graph(g, "bound");
    else if (o.solver == "cycle-cover") w = cycle_cover_graph(g);
    else if (o.solver == "top-cover") w = top_cover_graph(g, false);
    else w = iso_cover_graph(g);
  } catch (const InternalError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    return {{"instance", idx}, {"source", source}, {"n", g.num_vertices()}, {"m", g.num_edges()}, {"error", e.what()}};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const auto d = degree_profile(g);
  return {{"instance", idx},     {"source", source},      {"n", g.num_vertices()},
          {"m", g.num_edges()},  {"delta", d.max_degree}, {"v_odd", d.v_odd},
          {"count", w["count"]}, {"bounds", w["bounds"]}, {"valid", w["valid"]},
          {"ms", ms}};
}

void run_bench(const BenchOpts& o, const Io& io) {
  if (o.instances < 0 || o.min_n < 0 || o.max_n < o.min_n) throw std::invalid_argument("bad bench sizes");
  std::mutex mu;
  std::atomic<int> next{0};
  std::vector<std::string> lines(o.ordered ? o.instances : 0);
  std::string out;
  std::exception_ptr failure;
  auto worker = [&] {
    for (int i; (i = next++) < o.instances;) {
      try {
        std::string line = bench_one(o, i).dump() + "\n";
        std::lock_guard lock(mu);
        if (o.ordered) lines[i] = std::move(line);
        else if (io.output == "-") std::cout << line << std::flush;
        else out += line;
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::max(1, std::min(threads_cap(), o.instances));
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  if (o.ordered)
    for (auto& l : lines) out += l;
  if (!out.empty()) emit(io, out);
}

json verify_files(const std::string& graph_path, const std::string& witness_path, const std::string& format) {
  const Graph g = load_graph(graph_path, format);
  json raw;
  try {
    raw = json::parse(read_file(witness_path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("witness is not JSON: ") + e.what());
  }
  // gen --json output carries its witness one level down
  if (raw.is_object() && raw.contains("witness") && !raw.contains("members")) raw = raw["witness"];
  const ParsedWitness w = parse_witness(raw);
  Graph target = g;
  json extra = json::object();
  if (w.chains) {
    std::vector<Edge> hes;
    for (const auto& ch : *w.chains) {
      if (ch.size() < 2) throw std::invalid_argument("subdivision chain shorter than one edge");
      for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
        if (ch[i] < 0 || ch[i] >= w.n || ch[i + 1] < 0 || ch[i + 1] >= w.n)
          throw std::invalid_argument("subdivision chain vertex out of range");
        hes.push_back(make_edge(ch[i], ch[i + 1]));
      }
    }
    std::sort(hes.begin(), hes.end());
    if (std::adjacent_find(hes.begin(), hes.end()) != hes.end())
      throw std::invalid_argument("subdivision chains share an edge");
    target = Graph(w.n, hes);
    extra["subdivision_valid"] = is_subdivision_of(target, g, *w.chains);
  } else if (w.n > g.num_vertices()) {
    target = g.with_isolated(w.n - g.num_vertices());
  } else if (w.n < g.num_vertices()) {
    throw std::invalid_argument("witness has fewer vertices than the graph");
  }
  OddCover c{target, w.kind, w.members};
  const VerificationReport r = verify_cover(c);
  bool valid = r.valid() && extra.value("subdivision_valid", true);
  json j = {{"valid", valid}, {"count", c.count()}, {"members_valid", r.members_valid}, {"xor_matches", r.xor_matches}};
  json mm = json::array();
  for (const auto& p : r.mismatches) mm.push_back({{"edge", {p.edge.u, p.edge.v}}, {"count", p.count}, {"in_target", p.in_target}});
  j["mismatches"] = mm;
  j.update(extra);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"odd-covers of graphs by paths and cycles"};
  app.require_subcommand(1);
  Io io;
  auto add_io = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("input", io.input, "graph file, '-' for stdin")->capture_default_str();
    sub->add_option("--format", io.format, "auto, edges or graph6")
        ->check(CLI::IsMember({"auto", "edges", "graph6"}))
        ->capture_default_str();
    sub->add_option("-o,--output", io.output, "output file, '-' for stdout")->capture_default_str();
    sub->add_flag("--pretty", io.pretty, "indent JSON");
  };

  std::string method = "bound";
  auto* cover = app.add_subcommand("cover", "path odd-cover within max{v_odd/2, 2 ceil(Delta/2)}");
  add_io(cover, true);
  cover->add_option("--method", method, "bound or first (Delta + v_odd/2)")
      ->check(CLI::IsMember({"bound", "first"}))
      ->capture_default_str();

  auto* cycle = app.add_subcommand("cycle-cover", "cycle odd-cover with at most Delta cycles");
  add_io(cycle, true);

  bool top_cycles = false;
  auto* top = app.add_subcommand("top-cover", "path cover of a subdivision meeting the lower bound");
  add_io(top, true);
  top->add_flag("--cycles", top_cycles, "cover an all-even graph's subdivision by Delta/2 cycles");

  auto* iso = app.add_subcommand("iso-cover", "path cover after adding isolated vertices");
  add_io(iso, true);

  int max_k = 4, extra = 1;
  std::string kind = "path";
  auto* exact = app.add_subcommand("exact", "minimum odd-cover by exhaustive search (n <= 7)");
  add_io(exact, true);
  exact->add_option("--max-k", max_k, "largest count searched")->capture_default_str();
  exact->add_option("--kind", kind, "path, cycle or iso")
      ->check(CLI::IsMember({"path", "cycle", "iso"}))
      ->capture_default_str();
  exact->add_option("--extra", extra, "isolated vertices added for --kind iso")->capture_default_str();

  std::string witness_path;
  auto* verify = app.add_subcommand("verify", "check a witness file against a graph");
  add_io(verify, true);
  verify->add_option("--witness", witness_path, "witness JSON")->required();

  std::string family;
  bool gen_json_out = false;
  auto* gen = app.add_subcommand("gen", "generate a family member");
  add_io(gen, false);
  gen->add_option("family", family, "gnp(n,p,seed) cycles(k,len) cycles-on-path(k,len) walecki(k) "
                                    "counterexample(k) eulerian-random(n,seed)")
      ->required();
  gen->add_flag("--json", gen_json_out, "JSON with witnesses where the family has them");

  BenchOpts bo;
  auto* bench = app.add_subcommand("bench", "solve many instances, one JSON line each");
  add_io(bench, false);
  bench->add_option("--solver", bo.solver)
      ->check(CLI::IsMember({"cover", "cycle-cover", "top-cover", "iso-cover"}))
      ->capture_default_str();
  bench->add_option("--instances", bo.instances)->capture_default_str();
  bench->add_option("--min-n", bo.min_n)->capture_default_str();
  bench->add_option("--max-n", bo.max_n)->capture_default_str();
  bench->add_option("--p", bo.densities, "edge densities for gnp instances");
  bench->add_option("--family", bo.families, "explicit family specs instead of random graphs");
  bench->add_option("--seed", bo.seed)->capture_default_str();
  bench->add_flag("--ordered", bo.ordered, "print in instance order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : invalid;
  }

  try {
    if (cover->parsed()) {
      emit(io, cover_graph(load_graph(io.input, io.format), method));
    } else if (cycle->parsed()) {
      emit(io, cycle_cover_graph(load_graph(io.input, io.format)));
    } else if (top->parsed()) {
      emit(io, top_cover_graph(load_graph(io.input, io.format), top_cycles));
    } else if (iso->parsed()) {
      emit(io, iso_cover_graph(load_graph(io.input, io.format)));
    } else if (exact->parsed()) {
      const Graph g = load_graph(io.input, io.format);
      std::optional<ExactResult> r = kind == "path"    ? exact_p2(g, max_k)
                                     : kind == "cycle" ? exact_c2(g, max_k)
                                                       : exact_p2_iso(g, extra, max_k);
      json j;
      if (r) {
        self_check(r->witness);
        j = witness_json(r->witness, true);
        j["k"] = r->k;
      } else {
        j = {{"k", nullptr}, {"exceeded", max_k}};
      }
      j["bounds"] = bounds_json({kind == "cycle" ? delta_half(g) : lower_bound(g), r ? r->k : 0, "exact-" + kind});
      if (!r) j["bounds"]["upper"] = nullptr;
      emit(io, j);
    } else if (verify->parsed()) {
      const json j = verify_files(io.input, witness_path, io.format);
      emit(io, j);
      return j["valid"].get<bool>() ? ok : invalid;
    } else if (gen->parsed()) {
      const FamilySpec f = parse_family(family);
      const Graph g = generate(f);
      if (gen_json_out) emit(io, gen_json(f, g));
      else emit(io, emit_edge_list(g));
    } else if (bench->parsed()) {
      run_bench(bo, io);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::io;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return Exit::internal;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::invalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::invalid;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return Exit::internal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return Exit::internal;
  }
  return ok;
}
