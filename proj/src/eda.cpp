#include "gsp/engines.hpp"

namespace gsp {
namespace {

struct Candidate {
  ExtendedReal value;
  VertexId from = 0;
  RoadKey road = 0;
};

// Tie-break among equal values: smaller tail vertex, then smaller road key.
bool improves(const std::optional<Candidate>& best, ExtendedReal value, VertexId from, RoadKey road) {
  if (!best) return true;
  if (value != best->value) return value < best->value;
  return from < best->from || (from == best->from && road < best->road);
}

}  // namespace

EngineResult eda(const Graph& g, const PathSystem& system, const PathFunction& f, EngineOptions options) {
  if (!options.force) require_properties(f, system.kind, eda_requirements(), "EDA");
  const std::size_t n = g.vertex_count();
  const VertexId s = system.source;
  if (s >= n) throw GraphError("source out of range");

  EngineResult result;
  ShortestPathTree& tree = result.tree;
  RunStats& stats = result.stats;
  tree.source = s;
  tree.parent.assign(n, std::nullopt);
  tree.value.assign(n, ExtendedReal::infinity());
  tree.value[s] = f.base();
  tree.order.push_back(s);

  std::vector<bool> covered(n, false);
  std::vector<Path> paths(n);
  std::vector<std::optional<Candidate>> frontier(n);
  covered[s] = true;
  paths[s] = Path{s, {}};

  // Tree paths never change once a vertex is covered, so each frontier pair is
  // evaluated once, when its tail joins the tree.
  auto scan = [&](VertexId u) {
    const PathView pu = paths[u].view();
    for (RoadKey key : g.out_roads(u)) {
      const Road& road = g.road(key);
      if (covered[road.to] || !extension_is_member(g, system, pu, road)) continue;
      ++stats.extend_calls;
      const ExtendedReal value = f.extend(tree.value[u], pu, road);
      if (improves(frontier[road.to], value, u, key)) {
        frontier[road.to] = Candidate{value, u, key};
        ++stats.relaxations;
      }
    }
  };

  scan(s);
  while (true) {
    std::optional<VertexId> next;
    for (VertexId v = 0; v < n; ++v) {
      if (covered[v] || !frontier[v]) continue;
      if (!next || frontier[v]->value < frontier[*next]->value) next = v;
    }
    if (!next) break;
    const VertexId v = *next;
    const Candidate& c = *frontier[v];
    covered[v] = true;
    tree.parent[v] = TreeLink{c.from, c.road};
    tree.value[v] = c.value;
    tree.order.push_back(v);
    paths[v] = son(paths[c.from], c.road);
    ++stats.iterations;
    scan(v);
  }
  return result;
}

}  // namespace gsp
