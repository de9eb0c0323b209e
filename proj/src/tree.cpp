#include <algorithm>
#include <sstream>

#include "gsp/engines.hpp"

namespace gsp {

std::vector<VertexId> ShortestPathTree::covered() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (is_covered(v)) out.push_back(v);
  return out;
}

Path ShortestPathTree::path_to(const Graph& g, VertexId v) const {
  if (v >= vertex_count() || !is_covered(v)) throw std::logic_error("vertex " + std::to_string(v) + " not in tree");
  Path p{source, {}};
  VertexId at = v;
  while (at != source) {
    if (p.roads.size() >= vertex_count()) throw std::logic_error("parent links contain a cycle");
    const auto& link = parent[at];
    if (!link) throw std::logic_error("tree path leaves the tree at vertex " + std::to_string(at));
    if (g.road(link->road).to != at || g.road(link->road).from != link->parent)
      throw std::logic_error("parent link does not match its road");
    p.roads.push_back(link->road);
    at = link->parent;
  }
  std::reverse(p.roads.begin(), p.roads.end());
  return p;
}

PropertySet eda_requirements() { return {Property::SOPSP, Property::WISP, Property::NDSP}; }
PropertySet embfa_requirements() { return {Property::OP, Property::NoNegativeCircles}; }

void require_properties(const PathFunction& f, SystemKind system, const PropertySet& required,
                        std::string_view algorithm) {
  const auto missing = implied_properties(f.declared_properties(), system).missing_from(required);
  if (missing.empty()) return;
  std::string names;
  for (Property p : missing) {
    if (!names.empty()) names += ", ";
    names += to_string(p);
  }
  throw PropertyRefused(std::string(algorithm) + " refuses path function '" + f.name() + "' on " +
                        std::string(to_string(system)) + " paths: missing " + names);
}

std::string format_tree(const Graph& g, const ShortestPathTree& tree, const RunStats& stats) {
  std::ostringstream out;
  for (VertexId v : tree.covered()) {
    out << v << " value=" << (tree.has_values() ? to_string(tree.value[v]) : "-")
        << " path=" << format_path(g, tree.path_to(g, v)) << '\n';
  }
  out << "# extend_calls=" << stats.extend_calls << " relaxations=" << stats.relaxations
      << " rounds=" << stats.iterations << '\n';
  return out.str();
}

}  // namespace gsp
