#include "gsp/detour.hpp"

#include <mutex>

#include "gsp/engines.hpp"

namespace gsp {

DetourTable::DetourTable(Graph g) : graph_(std::move(g)) {
  if (!graph_.has_nonnegative_weights()) throw GraphError("detour distances need nonnegative weights");
}

ExtendedReal DetourTable::distance(RoadKey deleted, VertexId origin, VertexId target) const {
  if (!graph_.has_road(deleted)) throw GraphError("unknown road key " + std::to_string(deleted));
  if (origin >= graph_.vertex_count() || target >= graph_.vertex_count())
    throw GraphError("detour endpoint out of range");

  const auto key = std::make_pair(deleted, origin);
  {
    std::shared_lock lock(mutex_);
    if (auto it = rows_.find(key); it != rows_.end()) return (*it->second)[target];
  }
  auto row = std::make_shared<const std::vector<ExtendedReal>>(dijkstra_classic(graph_, origin, deleted));
  const ExtendedReal out = (*row)[target];
  std::unique_lock lock(mutex_);
  rows_[key] = std::move(row);
  return out;
}

std::size_t DetourTable::cached_rows() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

}  // namespace gsp
