#include "gsp/engines.hpp"

namespace gsp {

std::vector<ExtendedReal> dijkstra_classic(const Graph& g, VertexId s, std::optional<RoadKey> skip) {
  const std::size_t n = g.vertex_count();
  if (s >= n) throw GraphError("source out of range");
  if (!g.has_nonnegative_weights()) throw GraphError("dijkstra_classic: negative weight present");

  std::vector<ExtendedReal> dist(n, ExtendedReal::infinity());
  std::vector<bool> done(n, false);
  dist[s] = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<VertexId> next;
    for (VertexId v = 0; v < n; ++v)
      if (!done[v] && dist[v].is_finite() && (!next || dist[v] < dist[*next])) next = v;
    if (!next) break;
    const VertexId u = *next;
    done[u] = true;
    for (RoadKey key : g.out_roads(u)) {
      if (skip && key == *skip) continue;
      const Road& r = g.road(key);
      const ExtendedReal cand = dist[u] + ExtendedReal(r.weight);
      if (cand < dist[r.to]) dist[r.to] = cand;
    }
  }
  return dist;
}

}  // namespace gsp
