#include "gsp/verify.hpp"
#include "walk.hpp"

namespace gsp {

void detail::walk_paths(const Graph& g, const PathSystem& system, std::size_t max_roads, const PathFunction& f,
                        const PathVisitor& visit) {
  const VertexId s = system.source;
  if (s >= g.vertex_count()) throw GraphError("source out of range");

  WalkState st;
  st.source = s;
  st.values.push_back(f.base());
  st.vertices.push_back(s);
  std::vector<std::size_t> visits(g.vertex_count(), 0);
  visits[s] = 1;

  // Explicit stack of (vertex, next out-road index) keeps deep AllPaths walks
  // off the call stack.
  std::vector<std::size_t> cursor{0};
  visit(st);
  while (!cursor.empty()) {
    const VertexId at = st.vertices.back();
    const auto out = g.out_roads(at);
    std::size_t& i = cursor.back();
    if (st.roads.size() >= max_roads || i >= out.size()) {
      cursor.pop_back();
      if (!st.roads.empty()) {
        --visits[at];
        st.roads.pop_back();
        st.values.pop_back();
        st.vertices.pop_back();
      }
      continue;
    }
    const Road& road = g.road(out[i++]);
    if (system.kind == SystemKind::SimplePaths && visits[road.to] > 0) continue;
    const ExtendedReal value = f.extend(st.values.back(), PathView{s, st.roads}, road);
    st.roads.push_back(road.key);
    st.values.push_back(value);
    st.vertices.push_back(road.to);
    ++visits[road.to];
    cursor.push_back(0);
    visit(st);
  }
}

void for_each_path(const Graph& g, const PathSystem& system, std::size_t max_roads, const PathFunction& f,
                   const std::function<void(PathView, ExtendedReal)>& visit) {
  detail::walk_paths(g, system, max_roads, f,
                     [&](const detail::WalkState& st) { visit(st.view(), st.values.back()); });
}

std::vector<Path> enumerate_paths(const Graph& g, const PathSystem& system, std::size_t max_roads) {
  const PathFunction length("length", ExtendedReal(0.0),
                            [](ExtendedReal v, PathView, const Road&) { return v + ExtendedReal(1.0); }, {});
  std::vector<Path> out;
  for_each_path(g, system, max_roads, length, [&](PathView p, ExtendedReal) {
    out.push_back(Path{p.source, {p.roads.begin(), p.roads.end()}});
  });
  return out;
}

OracleResult oracle_min(const Graph& g, const PathSystem& system, const PathFunction& f) {
  const std::size_t n = g.vertex_count();
  OracleResult r;
  r.source = system.source;
  r.minimum.assign(n, std::nullopt);
  r.witness.assign(n, std::nullopt);
  // Simple paths belong to every supported system and are enough for the
  // minimum when f has no negative circles.
  const PathSystem simple{SystemKind::SimplePaths, system.source};
  detail::walk_paths(g, simple, n == 0 ? 0 : n - 1, f, [&](const detail::WalkState& st) {
    ++r.enumerated_count;
    const VertexId v = st.vertices.back();
    const ExtendedReal value = st.values.back();
    if (!r.minimum[v] || value < *r.minimum[v]) {
      r.minimum[v] = value;
      r.witness[v] = Path{st.source, st.roads};
    }
  });
  return r;
}

std::vector<std::optional<ExtendedReal>> bounded_minimum(const Graph& g, const PathSystem& system,
                                                         const PathFunction& f, std::size_t max_roads) {
  std::vector<std::optional<ExtendedReal>> best(g.vertex_count());
  detail::walk_paths(g, system, max_roads, f, [&](const detail::WalkState& st) {
    auto& slot = best[st.vertices.back()];
    if (!slot || st.values.back() < *slot) slot = st.values.back();
  });
  return best;
}

}  // namespace gsp
