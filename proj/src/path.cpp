#include "gsp/path.hpp"

#include <algorithm>
#include <sstream>

namespace gsp {

void validate_path(const Graph& g, PathView p) {
  if (p.source >= g.vertex_count()) throw PathError("path source out of range");
  VertexId at = p.source;
  for (RoadKey key : p.roads) {
    if (!g.has_road(key)) throw PathError("unknown road key " + std::to_string(key) + " in path");
    const Road& r = g.road(key);
    if (r.from != at) throw PathError("road chain broken at key " + std::to_string(key));
    at = r.to;
  }
}

std::vector<VertexId> path_vertices(const Graph& g, PathView p) {
  std::vector<VertexId> out;
  out.reserve(p.roads.size() + 1);
  out.push_back(p.source);
  for (RoadKey key : p.roads) out.push_back(g.road(key).to);
  return out;
}

VertexId terminal(const Graph& g, PathView p) {
  return p.roads.empty() ? p.source : g.road(p.roads.back()).to;
}

std::optional<Path> father(const Path& p) {
  if (p.roads.empty()) return std::nullopt;
  Path f{p.source, p.roads};
  f.roads.pop_back();
  return f;
}

Path son(const Path& p, RoadKey road) {
  Path s = p;
  s.roads.push_back(road);
  return s;
}

bool is_strict_prefix(const Path& a, const Path& b) {
  return a.source == b.source && a.roads.size() < b.roads.size() &&
         std::equal(a.roads.begin(), a.roads.end(), b.roads.begin());
}

bool has_repeated_vertex(const Graph& g, PathView p) {
  std::vector<VertexId> vs = path_vertices(g, p);
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) != vs.end();
}

SystemKind parse_system_kind(std::string_view name) {
  if (name == "simple") return SystemKind::SimplePaths;
  if (name == "all") return SystemKind::AllPaths;
  throw std::invalid_argument("unknown path system '" + std::string(name) + "'");
}

std::string_view to_string(SystemKind kind) {
  return kind == SystemKind::SimplePaths ? "simple" : "all";
}

bool is_member(const Graph& g, const PathSystem& system, PathView p) {
  if (p.source != system.source) return false;
  try {
    validate_path(g, p);
  } catch (const PathError&) {
    return false;
  }
  return system.kind == SystemKind::AllPaths || !has_repeated_vertex(g, p);
}

bool extension_is_member(const Graph& g, const PathSystem& system, PathView p, const Road& road) {
  if (system.kind == SystemKind::AllPaths) return true;
  if (road.to == p.source) return false;
  return std::none_of(p.roads.begin(), p.roads.end(),
                      [&](RoadKey k) { return g.road(k).to == road.to; });
}

std::string format_path(const Graph& g, PathView p) {
  std::ostringstream out;
  out << "s=" << p.source;
  for (RoadKey key : p.roads) out << " -> " << g.road(key).to << "[k" << key << ']';
  return out.str();
}

}  // namespace gsp
