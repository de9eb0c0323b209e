#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gsp/graph.hpp"

namespace gsp {

class PathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-owning view of a path: a source and the road keys taken from it.
struct PathView {
  VertexId source = 0;
  std::span<const RoadKey> roads;
};

// A path from `source` as an ordered road sequence. No roads is the special
// path (s,s).
struct Path {
  VertexId source = 0;
  std::vector<RoadKey> roads;

  bool is_trivial() const { return roads.empty(); }
  std::size_t size() const { return roads.size(); }
  PathView view() const { return {source, roads}; }

  friend bool operator==(const Path&, const Path&) = default;
};

// Throws PathError if a road is unknown or the chain is broken.
void validate_path(const Graph& g, PathView p);

// s = v0, v1, ..., vk. Assumes a valid chain.
std::vector<VertexId> path_vertices(const Graph& g, PathView p);
VertexId terminal(const Graph& g, PathView p);

// The path without its last road; nullopt for (s,s).
std::optional<Path> father(const Path& p);
Path son(const Path& p, RoadKey road);

// a < b: a's roads are a strict prefix of b's (same source).
bool is_strict_prefix(const Path& a, const Path& b);
inline bool is_prefix(const Path& a, const Path& b) { return a == b || is_strict_prefix(a, b); }

bool has_repeated_vertex(const Graph& g, PathView p);

enum class SystemKind { SimplePaths, AllPaths };

SystemKind parse_system_kind(std::string_view name);
std::string_view to_string(SystemKind kind);

// Which paths from `source` belong to the system.
struct PathSystem {
  SystemKind kind = SystemKind::SimplePaths;
  VertexId source = 0;
};

// Membership of a chained path. A broken chain or wrong source is not a member.
bool is_member(const Graph& g, const PathSystem& system, PathView p);

// Whether p + road stays in the system, given p is already a member.
// For simple paths this means road.to does not occur on p.
bool extension_is_member(const Graph& g, const PathSystem& system, PathView p, const Road& road);

// "s=0 -> 1[k3] -> 4[k7]"
std::string format_path(const Graph& g, PathView p);
inline std::string format_path(const Graph& g, const Path& p) { return format_path(g, p.view()); }

}  // namespace gsp
