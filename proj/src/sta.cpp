#include "gsp/engines.hpp"

namespace gsp {

ShortestPathTree sta(const Graph& g, VertexId s) {
  const std::size_t n = g.vertex_count();
  if (s >= n) throw GraphError("source out of range");

  ShortestPathTree tree;
  tree.source = s;
  tree.parent.assign(n, std::nullopt);
  tree.order.push_back(s);

  // Best frontier road into each uncovered vertex: smallest tail, then key.
  std::vector<std::optional<TreeLink>> frontier(n);
  std::vector<bool> covered(n, false);
  covered[s] = true;

  auto scan = [&](VertexId u) {
    for (RoadKey key : g.out_roads(u)) {
      const VertexId v = g.road(key).to;
      if (covered[v]) continue;
      auto& best = frontier[v];
      if (!best || u < best->parent || (u == best->parent && key < best->road)) best = TreeLink{u, key};
    }
  };

  scan(s);
  for (std::size_t k = 1; k < n; ++k) {
    std::optional<VertexId> next;
    for (VertexId v = 0; v < n && !next; ++v)
      if (!covered[v] && frontier[v]) next = v;
    if (!next) {
      for (VertexId v = 0; v < n; ++v)
        if (!covered[v]) throw UnreachableVertex(v);
    }
    covered[*next] = true;
    tree.parent[*next] = frontier[*next];
    tree.order.push_back(*next);
    scan(*next);
  }
  return tree;
}

}  // namespace gsp
