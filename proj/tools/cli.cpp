#include "gsp/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <iostream>
#include <map>
#include <sstream>

#include "gsp/engines.hpp"
#include "gsp/verify.hpp"

namespace gsp::cli {
namespace {

struct HelpRequested {
  std::string text;
};

double parse_real(std::string_view s, const char* what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

std::uint64_t parse_seed(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad seed '" + std::string(s) + "'");
  return v;
}

// "LO:HI", or a single value for both ends.
std::pair<std::string_view, std::string_view> split_range(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) return {s, s};
  return {s.substr(0, colon), s.substr(colon + 1)};
}

Algorithm parse_algorithm(std::string_view s) {
  if (s == "eda") return Algorithm::Eda;
  if (s == "embfa") return Algorithm::Embfa;
  if (s == "sta") return Algorithm::Sta;
  throw std::invalid_argument("unknown algorithm '" + std::string(s) + "'");
}

struct SolveOutcome {
  EngineResult result;
  std::optional<PathFunction> function;
};

PathFunction build_function(const Graph& g, const RunConfig& c) {
  return make_function(g, c.function, c.p.value_or(0.0));
}

SolveOutcome solve(const Graph& g, const RunConfig& c) {
  const PathSystem system{c.system, c.source};
  if (c.algorithm == Algorithm::Sta) return {EngineResult{sta(g, c.source), {}}, std::nullopt};
  PathFunction f = build_function(g, c);
  EngineResult r = c.algorithm == Algorithm::Eda ? eda(g, system, f) : embfa(g, system, f);
  return {std::move(r), std::move(f)};
}

Graph load_checked(const RunConfig& c) {
  Graph g = load_graph(c.graph_path);
  if (c.source >= g.vertex_count())
    throw std::invalid_argument("source " + std::to_string(c.source) + " is not a vertex of the graph");
  return g;
}

int cmd_solve(const RunConfig& c, std::ostream& out) {
  const Graph g = load_checked(c);
  const SolveOutcome s = solve(g, c);
  out << format_tree(g, s.result.tree, s.result.stats);
  return kOk;
}

int cmd_oracle(const RunConfig& c, std::ostream& out) {
  const Graph g = load_checked(c);
  const PathFunction f = build_function(g, c);
  const OracleResult r = oracle_min(g, PathSystem{c.system, c.source}, f);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!r.reachable(v)) continue;
    out << v << " value=" << to_string(*r.minimum[v]) << " path=" << format_path(g, *r.witness[v]) << '\n';
  }
  out << "# enumerated=" << r.enumerated_count << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const Graph g = load_checked(c);
  const PathSystem system{c.system, c.source};
  const std::size_t n = g.vertex_count();
  std::vector<PropertyReport> reports;

  if (c.against_oracle) {
    const SolveOutcome s = solve(g, c);
    const PathFunction f = s.function ? *s.function : build_function(g, c);
    reports.push_back(check_tree_structure(g, system, s.result.tree, s.function ? &*s.function : nullptr));
    reports.push_back(compare_tree_to_oracle(s.result.tree, oracle_min(g, system, f), c.tolerance));
  }
  if (!c.properties.empty()) {
    const PathFunction f = build_function(g, c);
    for (const std::string& name : c.properties) {
      if (name == "WISP") {
        reports.push_back(check_wisp(g, system, f, c.tolerance));
      } else if (name == "NoNegativeCircles" || name == "NoNonPositiveCircles") {
        reports.push_back(check_no_negative_circles(g, c.source, f, c.max_roads.value_or(n + 2),
                                                    name == "NoNonPositiveCircles", c.tolerance));
      } else {
        const auto prop = parse_property(name);
        if (!prop) throw std::invalid_argument("unknown property '" + name + "'");
        reports.push_back(check_property(g, system, f, *prop, c.max_roads.value_or(n - 1), c.tolerance));
      }
    }
  }

  bool ok = true;
  for (const PropertyReport& r : reports) {
    out << format_report(g, r) << '\n';
    ok = ok && r.passed();
  }
  out << (ok ? "pass" : "fail") << '\n';
  return ok ? kOk : kVerificationFailed;
}

int cmd_gen(const RunConfig& c, std::ostream& out) {
  out << serialize_graph(generate_random({c.n, c.m, c.weight_low, c.weight_high, c.mode, c.seed_first}));
  return kOk;
}

int cmd_bench(const RunConfig& c, std::ostream& out) {
  for (std::uint64_t seed = c.seed_first; seed <= c.seed_last; ++seed) {
    const Graph g = generate_random({c.n, c.m, c.weight_low, c.weight_high, c.mode, seed});
    const auto start = std::chrono::steady_clock::now();
    const SolveOutcome s = solve(g, c);
    const auto elapsed = std::chrono::steady_clock::now() - start;

    const double n = static_cast<double>(g.vertex_count());
    const double m = static_cast<double>(g.road_count());
    const double delta = static_cast<double>(max_degree(g));
    const double calls = static_cast<double>(s.result.stats.extend_calls);
    out << "seed=" << seed << " n=" << g.vertex_count() << " m=" << g.road_count() << " delta=" << max_degree(g)
        << " extend_calls=" << s.result.stats.extend_calls
        << " wall_us=" << std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count()
        << " ratio_delta_n2=" << format_double(delta > 0 ? calls / (delta * n * n) : 0.0)
        << " ratio_nm=" << format_double(m > 0 ? calls / (n * m) : 0.0) << '\n';
  }
  return kOk;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Generalized single-source shortest paths over path functions"};
  app.require_subcommand(1);

  RunConfig c;
  std::string algorithm = "eda", function = "classic", system = "simple", weights = "0:10", mode = "directed",
              seed = "0", against;
  std::optional<double> p;
  std::optional<std::size_t> max_roads;

  auto* solve = app.add_subcommand("solve", "Run an algorithm and print the shortest path tree");
  auto* oracle = app.add_subcommand("oracle", "Brute-force minima over simple paths");
  auto* verify = app.add_subcommand("verify", "Check an algorithm or a path function property");
  auto* gen = app.add_subcommand("gen", "Write a random graph to stdout");
  auto* bench = app.add_subcommand("bench", "Count extend calls over a range of random graphs");

  for (auto* sub : {solve, oracle, verify}) {
    sub->add_option("--graph", c.graph_path, "Graph file")->required();
    sub->add_option("--source", c.source, "Source vertex");
  }
  for (auto* sub : {solve, oracle, verify, bench}) {
    sub->add_option("--function", function, "classic|antirisk|blocked-cost|expected-cost");
    sub->add_option("--p", p, "Blocking probability for blocked-cost / expected-cost");
    sub->add_option("--system", system, "simple|all");
  }
  for (auto* sub : {solve, verify, bench}) sub->add_option("--algorithm", algorithm, "eda|embfa|sta");
  verify->add_option("--against", against, "oracle");
  verify->add_option("--property", c.properties, "Property to check (repeatable)");
  verify->add_option("--max-roads", max_roads, "Enumeration bound");
  verify->add_option("--tolerance", c.tolerance, "Absolute tolerance");
  for (auto* sub : {gen, bench}) {
    sub->add_option("--n", c.n, "Vertex count");
    sub->add_option("--m", c.m, "Road lines");
    sub->add_option("--weights", weights, "LO:HI");
    sub->add_option("--mode", mode, "directed|undirected|conservative");
    sub->add_option("--seed", seed, gen == sub ? "Seed" : "Seed or FIRST:LAST");
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }

  if (solve->parsed()) c.command = Command::Solve;
  if (oracle->parsed()) c.command = Command::Oracle;
  if (verify->parsed()) c.command = Command::Verify;
  if (gen->parsed()) c.command = Command::Gen;
  if (bench->parsed()) c.command = Command::Bench;

  c.algorithm = parse_algorithm(algorithm);
  c.function = parse_function_kind(function);
  c.system = parse_system_kind(system);
  c.mode = parse_generation_mode(mode);
  c.p = p;
  c.max_roads = max_roads;

  const auto [lo, hi] = split_range(weights);
  c.weight_low = parse_real(lo, "weight");
  c.weight_high = parse_real(hi, "weight");
  const auto [first, last] = split_range(seed);
  c.seed_first = parse_seed(first);
  c.seed_last = parse_seed(last);
  if (c.seed_last < c.seed_first) throw std::invalid_argument("seed range is empty");
  if (c.command == Command::Gen && c.seed_first != c.seed_last) throw std::invalid_argument("gen takes one seed");

  const bool uses_function = c.command != Command::Gen && !(c.algorithm == Algorithm::Sta && c.command == Command::Solve);
  if (uses_function && needs_probability(c.function) && !c.p)
    throw std::invalid_argument("--function " + function + " requires --p");
  if (c.p && !needs_probability(c.function))
    throw std::invalid_argument("--p only applies to blocked-cost and expected-cost");
  if (c.p && !(*c.p > 0.0 && *c.p < 1.0)) throw std::invalid_argument("--p must lie in (0, 1)");

  if (c.command == Command::Verify) {
    if (!against.empty() && against != "oracle") throw std::invalid_argument("--against only accepts 'oracle'");
    c.against_oracle = against == "oracle";
    if (!c.against_oracle && c.properties.empty())
      throw std::invalid_argument("verify needs --against oracle or --property");
  }
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Solve: return cmd_solve(config, out);
      case Command::Oracle: return cmd_oracle(config, out);
      case Command::Verify: return cmd_verify(config, out);
      case Command::Gen: return cmd_gen(config, out);
      case Command::Bench: return cmd_bench(config, out);
    }
  } catch (const NegativeCircleDetected& e) {
    err << "error: " << e.what() << '\n';
    return kNegativeCircle;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kOk;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  return run(config, out, err);
}

}  // namespace gsp::cli
