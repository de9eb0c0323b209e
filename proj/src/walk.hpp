#pragma once

#include <functional>
#include <vector>

#include "gsp/path_function.hpp"

namespace gsp::detail {

// Current path of a depth-first walk. values[d] is f of the prefix with d
// roads; vertices[d] its terminal.
struct WalkState {
  VertexId source = 0;
  std::vector<RoadKey> roads;
  std::vector<ExtendedReal> values;
  std::vector<VertexId> vertices;

  PathView view() const { return {source, roads}; }
};

using PathVisitor = std::function<void(const WalkState&)>;

void walk_paths(const Graph& g, const PathSystem& system, std::size_t max_roads, const PathFunction& f,
                const PathVisitor& visit);

}  // namespace gsp::detail
