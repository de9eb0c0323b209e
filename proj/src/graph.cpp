#include "gsp/graph.hpp"

#include <algorithm>
#include <cmath>

namespace gsp {

Graph::Graph(std::size_t vertex_count, std::vector<Road> roads, std::vector<std::string> labels)
    : labels_(std::move(labels)), roads_(std::move(roads)) {
  if (labels_.empty()) labels_.resize(vertex_count);
  if (labels_.size() != vertex_count) throw GraphError("label count does not match vertex count");

  std::sort(roads_.begin(), roads_.end(), [](const Road& a, const Road& b) { return a.key < b.key; });
  RoadKey max_key = roads_.empty() ? 0 : roads_.back().key;
  index_by_key_.assign(roads_.empty() ? 0 : max_key + 1, -1);
  out_.assign(vertex_count, {});
  degree_.assign(vertex_count, 0);

  for (std::size_t i = 0; i < roads_.size(); ++i) {
    const Road& r = roads_[i];
    if (r.from >= vertex_count || r.to >= vertex_count) throw GraphError("road endpoint out of range");
    if (r.from == r.to) throw GraphError("self-loop road");
    if (!std::isfinite(r.weight)) throw GraphError("non-finite weight");
    if (index_by_key_[r.key] != -1) throw GraphError("duplicate road key " + std::to_string(r.key));
    index_by_key_[r.key] = static_cast<std::ptrdiff_t>(i);
    out_[r.from].push_back(r.key);
    ++degree_[r.from];
    ++degree_[r.to];
  }
}

bool Graph::has_road(RoadKey key) const {
  return key < index_by_key_.size() && index_by_key_[key] != -1;
}

const Road& Graph::road(RoadKey key) const {
  if (!has_road(key)) throw GraphError("unknown road key " + std::to_string(key));
  return roads_[static_cast<std::size_t>(index_by_key_[key])];
}

bool Graph::has_nonnegative_weights() const {
  return std::all_of(roads_.begin(), roads_.end(), [](const Road& r) { return r.weight >= 0.0; });
}

Graph remove_road(const Graph& g, RoadKey key) {
  if (!g.has_road(key)) throw GraphError("unknown road key " + std::to_string(key));
  std::vector<Road> kept;
  kept.reserve(g.road_count() - 1);
  for (const Road& r : g.roads())
    if (r.key != key) kept.push_back(r);
  std::vector<std::string> labels;
  labels.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
  return Graph(g.vertex_count(), std::move(kept), std::move(labels));
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

}  // namespace gsp
