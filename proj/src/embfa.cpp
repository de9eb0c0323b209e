#include "gsp/engines.hpp"

namespace gsp {

EngineResult embfa(const Graph& g, const PathSystem& system, const PathFunction& f, EngineOptions options) {
  if (!options.force) require_properties(f, system.kind, embfa_requirements(), "EMBFA");
  const std::size_t n = g.vertex_count();
  const VertexId s = system.source;
  if (s >= n) throw GraphError("source out of range");

  EngineResult result;
  RunStats& stats = result.stats;

  // P_T(v) is stored whole, as in the relaxation rule P_T(v) <- P_T(u) + (u,v).
  // A vertex without a path stands for the (s, inf, v) placeholder and loses
  // to every real path, including one whose value is inf.
  std::vector<std::optional<Path>> paths(n);
  std::vector<ExtendedReal> value(n, ExtendedReal::infinity());
  paths[s] = Path{s, {}};
  value[s] = f.base();

  for (std::size_t round = 1; round <= n; ++round) {
    ++stats.iterations;
    for (const Road& road : g.roads()) {
      const auto& pu = paths[road.from];
      if (!pu || !extension_is_member(g, system, pu->view(), road)) continue;
      ++stats.extend_calls;
      const ExtendedReal cand = f.extend(value[road.from], pu->view(), road);
      auto& pv = paths[road.to];
      if (pv && !(cand < value[road.to])) continue;

      if (road.to == s)
        throw NegativeCircleDetected("negative circle: a circle through source " + std::to_string(s) +
                                     " lowers f below f((s,s))");
      if (round == n)
        throw NegativeCircleDetected("negative circle: vertex " + std::to_string(road.to) +
                                     " still improves in round " + std::to_string(n));
      pv = son(*pu, road.key);
      value[road.to] = cand;
      ++stats.relaxations;
    }
  }

  ShortestPathTree& tree = result.tree;
  tree.source = s;
  tree.parent.assign(n, std::nullopt);
  tree.value = std::move(value);
  for (VertexId v = 0; v < n; ++v) {
    if (v == s || !paths[v]) continue;
    const Road& last = g.road(paths[v]->roads.back());
    tree.parent[v] = TreeLink{last.from, last.key};
  }
  return result;
}

}  // namespace gsp
