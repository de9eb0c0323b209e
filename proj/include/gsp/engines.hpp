#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp/extended_real.hpp"
#include "gsp/graph.hpp"
#include "gsp/path.hpp"
#include "gsp/path_function.hpp"

namespace gsp {

class PropertyRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegativeCircleDetected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnreachableVertex : public std::runtime_error {
 public:
  explicit UnreachableVertex(VertexId v)
      : std::runtime_error("vertex " + std::to_string(v) + " unreachable from source"), vertex_(v) {}
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

struct TreeLink {
  VertexId parent = 0;
  RoadKey road = 0;
  friend bool operator==(const TreeLink&, const TreeLink&) = default;
};

// Arborescence rooted at `source`. A vertex is covered iff it is the source
// or has a parent link.
struct ShortestPathTree {
  VertexId source = 0;
  std::vector<std::optional<TreeLink>> parent;
  // f(P_T(v)); empty for structural trees (STA). Uncovered vertices hold inf.
  std::vector<ExtendedReal> value;
  // Discovery order v(0) = s, v(1), ...; empty for EMBFA.
  std::vector<VertexId> order;

  std::size_t vertex_count() const { return parent.size(); }
  bool has_values() const { return !value.empty(); }
  bool is_covered(VertexId v) const { return v == source || parent[v].has_value(); }
  std::vector<VertexId> covered() const;

  // P_T(v) by walking parent links. Throws std::logic_error on a parent cycle
  // or an uncovered vertex.
  Path path_to(const Graph& g, VertexId v) const;

  friend bool operator==(const ShortestPathTree&, const ShortestPathTree&) = default;
};

struct RunStats {
  std::uint64_t extend_calls = 0;
  std::uint64_t iterations = 0;   // EMBFA rounds, or EDA/STA selection steps
  std::uint64_t relaxations = 0;  // successful label updates

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

struct EngineResult {
  ShortestPathTree tree;
  RunStats stats;
};

struct EngineOptions {
  // Run even if f does not declare the required properties. Results are then
  // unspecified.
  bool force = false;
};

PropertySet eda_requirements();
PropertySet embfa_requirements();

// Throws PropertyRefused naming the missing properties.
void require_properties(const PathFunction& f, SystemKind system, const PropertySet& required,
                        std::string_view algorithm);

// Spanning arborescence of a graph in which s reaches every vertex. Among the
// frontier roads it picks the smallest head, then smallest tail, then key.
// Throws UnreachableVertex naming the smallest unreachable vertex.
ShortestPathTree sta(const Graph& g, VertexId s);

// Extended Dijkstra. Needs SOPSP, WISP and NDSP.
EngineResult eda(const Graph& g, const PathSystem& system, const PathFunction& f, EngineOptions options = {});

// Extended Moore-Bellman-Ford. Needs OP and NoNegativeCircles. Throws
// NegativeCircleDetected if a relaxation still succeeds in round n.
EngineResult embfa(const Graph& g, const PathSystem& system, const PathFunction& f, EngineOptions options = {});

// Classic O(n^2) Dijkstra over nonnegative weights, optionally ignoring one
// road. Unreachable vertices get inf. Throws GraphError on a negative weight.
std::vector<ExtendedReal> dijkstra_classic(const Graph& g, VertexId s, std::optional<RoadKey> skip = std::nullopt);

// One line per covered vertex, "<v> value=<x> path=<path>", then
// "# extend_calls=<n> relaxations=<n> rounds=<n>".
std::string format_tree(const Graph& g, const ShortestPathTree& tree, const RunStats& stats);

}  // namespace gsp
