#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>

namespace gsp::testing {

Graph diamond() {
  return parse_graph(
      "g 4 5\n"
      "v 0 s\nv 1 a\nv 2 b\nv 3 t\n"
      "edge 0 1 1\n"
      "edge 0 2 2\n"
      "edge 1 2 1\n"
      "edge 1 3 1\n"
      "edge 2 3 2\n");
}

namespace {

void extend_simple(const Graph& g, std::vector<bool>& on_path, Path& current, std::vector<Path>& out) {
  out.push_back(current);
  const VertexId at = current.roads.empty() ? current.source : g.road(current.roads.back()).to;
  for (const Road& r : g.roads()) {
    if (r.from != at || on_path[r.to]) continue;
    on_path[r.to] = true;
    current.roads.push_back(r.key);
    extend_simple(g, on_path, current, out);
    current.roads.pop_back();
    on_path[r.to] = false;
  }
}

}  // namespace

std::vector<Path> brute_simple_paths(const Graph& g, VertexId s) {
  std::vector<Path> out;
  std::vector<bool> on_path(g.vertex_count(), false);
  on_path[s] = true;
  Path current{s, {}};
  extend_simple(g, on_path, current, out);
  return out;
}

double resum(const Graph& g, const Path& p) {
  double total = 0.0;
  for (RoadKey k : p.roads) total += g.road(k).weight;
  return total;
}

ExtendedReal brute_detour(const Graph& g, RoadKey deleted, VertexId origin, VertexId target) {
  double best = std::numeric_limits<double>::infinity();
  for (const Path& p : brute_simple_paths(g, origin)) {
    if (std::find(p.roads.begin(), p.roads.end(), deleted) != p.roads.end()) continue;
    const VertexId end = p.roads.empty() ? origin : g.road(p.roads.back()).to;
    if (end == target) best = std::min(best, resum(g, p));
  }
  return ExtendedReal(best);
}

std::vector<std::optional<double>> brute_classic_minima(const Graph& g, VertexId s) {
  std::vector<std::optional<double>> best(g.vertex_count());
  for (const Path& p : brute_simple_paths(g, s)) {
    const VertexId end = p.roads.empty() ? s : g.road(p.roads.back()).to;
    const double d = resum(g, p);
    if (!best[end] || d < *best[end]) best[end] = d;
  }
  return best;
}

ExtendedReal direct_anti_risk(const Graph& g, const Path& p) {
  const std::size_t k = p.roads.size();
  if (k == 0) return ExtendedReal(0.0);
  const VertexId s = p.source;
  auto road_at = [&](std::size_t i) { return g.road(p.roads[i - 1]); };  // road (v_{i-1}, v_i), 1-based
  auto suffix_weight = [&](std::size_t i) {  // d(v_i, ..., v_k)
    double total = 0.0;
    for (std::size_t j = i + 1; j <= k; ++j) total += road_at(j).weight;
    return total;
  };

  ExtendedReal r = ExtendedReal(resum(g, p));
  r = max(r, brute_detour(g, road_at(k).key, s, road_at(k).to));
  for (std::size_t i = 1; i + 1 <= k; ++i)
    r = max(r, ExtendedReal(suffix_weight(i)) + brute_detour(g, road_at(i).key, s, road_at(i).to));
  return r;
}

std::optional<double> min_simple_cycle_weight(const Graph& g) {
  std::optional<double> best;
  // Each simple cycle is found from its smallest vertex.
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    std::vector<bool> on_path(g.vertex_count(), false);
    std::function<void(VertexId, double)> go = [&](VertexId at, double sum) {
      for (const Road& r : g.roads()) {
        if (r.from != at || r.to < start) continue;
        if (r.to == start) {
          const double total = sum + r.weight;
          if (!best || total < *best) best = total;
          continue;
        }
        if (on_path[r.to]) continue;
        on_path[r.to] = true;
        go(r.to, sum + r.weight);
        on_path[r.to] = false;
      }
    };
    on_path[start] = true;
    go(start, 0.0);
  }
  return best;
}

std::vector<std::size_t> incidence_degrees(const Graph& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const Road& r : g.roads()) {
    ++deg[r.from];
    ++deg[r.to];
  }
  return deg;
}

PathFunction parity_function() {
  return PathFunction(
      "parity", ExtendedReal(0.0),
      [](ExtendedReal, PathView parent, const Road&) {
        return ExtendedReal(static_cast<double>((parent.roads.size() + 1) % 2));
      },
      {});
}

Graph random_nonnegative(std::uint64_t seed, std::size_t n_lo, std::size_t n_hi) {
  std::mt19937_64 rng(seed * 7919 + 17);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(n_lo, n_hi)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(n, 3 * n)(rng);
  return generate_random({n, m, 0.0, 10.0, GenerationMode::Directed, seed});
}

bool all_detours_finite(const Graph& g) {
  return std::all_of(g.roads().begin(), g.roads().end(),
                     [&](const Road& r) { return brute_detour(g, r.key, r.from, r.to).is_finite(); });
}

}  // namespace gsp::testing
