#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gsp {

using VertexId = std::size_t;
using RoadKey = std::size_t;

// A directed road (u, i, v). Parallel roads are told apart by key.
struct Road {
  RoadKey key = 0;
  VertexId from = 0;
  VertexId to = 0;
  double weight = 0.0;

  friend bool operator==(const Road&, const Road&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : GraphError(what + ", line " + std::to_string(line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Immutable directed multigraph. Roads are kept in ascending key order; keys
// need not be dense (remove_road leaves a gap).
class Graph {
 public:
  Graph() = default;
  // Throws GraphError on bad endpoints, self-loops, duplicate keys or
  // non-finite weights. Roads are sorted by key.
  Graph(std::size_t vertex_count, std::vector<Road> roads, std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t road_count() const { return roads_.size(); }

  const std::vector<Road>& roads() const { return roads_; }
  bool has_road(RoadKey key) const;
  const Road& road(RoadKey key) const;

  // Outgoing road keys of v, ascending.
  std::span<const RoadKey> out_roads(VertexId v) const { return out_[v]; }
  // Number of roads incident to v in either direction, |delta(v)|.
  std::size_t degree(VertexId v) const { return degree_[v]; }

  const std::string& label(VertexId v) const { return labels_[v]; }
  bool has_nonnegative_weights() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.roads_ == b.roads_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Road> roads_;
  std::vector<std::ptrdiff_t> index_by_key_;
  std::vector<std::vector<RoadKey>> out_;
  std::vector<std::size_t> degree_;
};

Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

// One `arc` line per road. Weights use the shortest round-trip form, so
// parse_graph(serialize_graph(g)) reproduces g bit for bit when keys are dense.
std::string serialize_graph(const Graph& g);

// Copy of g without the road `key`; the remaining keys are unchanged.
Graph remove_road(const Graph& g, RoadKey key);

// Delta(G), the largest vertex degree.
std::size_t max_degree(const Graph& g);

enum class GenerationMode { Directed, Undirected, Conservative };

struct GeneratorParams {
  std::size_t n = 2;
  std::size_t m = 1;  // arc/edge lines, as in the file header
  double weight_low = 0.0;
  double weight_high = 1.0;
  GenerationMode mode = GenerationMode::Directed;
  std::uint64_t seed = 0;
};

// Deterministic random multigraph without self-loops. Conservative mode draws
// costs in [low, high] and vertex potentials pi, then uses
// w(u,v) = c(u,v) + pi(u) - pi(v), so every directed circle sums to >= 0.
Graph generate_random(const GeneratorParams& params);

GenerationMode parse_generation_mode(std::string_view name);

}  // namespace gsp
