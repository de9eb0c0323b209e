#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "gsp/extended_real.hpp"
#include "gsp/graph.hpp"

namespace gsp {

// Detour distances d_{G\road}(origin, target): classic shortest distance from
// origin to target once a single road is deleted. Rows are filled on demand,
// one Dijkstra run per (road, origin), and never invalidated.
//
// Safe for concurrent use. Two threads missing the same row both compute it
// and the later insert wins; the values are identical.
class DetourTable {
 public:
  // The graph must have nonnegative weights.
  explicit DetourTable(Graph g);

  const Graph& graph() const { return graph_; }

  // Throws GraphError for an unknown road key.
  ExtendedReal distance(RoadKey deleted, VertexId origin, VertexId target) const;

  std::size_t cached_rows() const;

 private:
  using Row = std::shared_ptr<const std::vector<ExtendedReal>>;

  Graph graph_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<RoadKey, VertexId>, Row> rows_;
};

inline ExtendedReal detour_distance(const DetourTable& table, RoadKey deleted, VertexId origin, VertexId target) {
  return table.distance(deleted, origin, target);
}

}  // namespace gsp
