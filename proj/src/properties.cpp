#include <functional>
#include <sstream>
#include <stdexcept>

#include "gsp/verify.hpp"
#include "walk.hpp"

namespace gsp {
namespace {

struct Evaluated {
  Path path;
  ExtendedReal value;
};

PropertyReport violation(std::string property, std::size_t max_roads, Witness w) {
  PropertyReport r;
  r.property = std::move(property);
  r.verdict = Verdict::Violated;
  r.witness = std::move(w);
  r.max_roads = max_roads;
  return r;
}

PropertyReport clean(std::string property, std::size_t max_roads) {
  PropertyReport r;
  r.property = std::move(property);
  r.max_roads = max_roads;
  return r;
}

bool is_minimum(const OracleResult& oracle, VertexId v, ExtendedReal value, double tol) {
  return oracle.minimum[v] && approx_equal(value, *oracle.minimum[v], tol);
}

// One extension road applied to every enumerated path ending at its tail.
struct Extension {
  const Evaluated* base;
  ExtendedReal extended;
};

}  // namespace

std::string_view to_string(Verdict v) { return v == Verdict::Violated ? "violated" : "no-violation-found"; }

std::string format_report(const Graph& g, const PropertyReport& report) {
  std::ostringstream out;
  out << "property=" << report.property << " verdict=" << to_string(report.verdict)
      << " scope=max_roads:" << report.max_roads << " witness=";
  if (!report.witness) {
    out << '-';
    return out.str();
  }
  const Witness& w = *report.witness;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " | ";
    first = false;
  };
  if (w.vertex) {
    sep();
    out << "vertex " << *w.vertex;
  }
  for (std::size_t i = 0; i < w.paths.size(); ++i) {
    sep();
    out << format_path(g, w.paths[i]) << " (f=" << to_string(w.values[i]) << ')';
  }
  if (!w.note.empty()) {
    sep();
    out << w.note;
  }
  return out.str();
}

PropertyReport check_property(const Graph& g, const PathSystem& system, const PathFunction& f, Property property,
                              std::size_t max_roads, double tol) {
  using P = Property;
  const std::string name(to_string(property));
  const bool shortest_only = property == P::NDSP || property == P::INSP || property == P::SOPSP ||
                             property == P::OPSP || property == P::WOPSP;
  const bool son_check = property == P::NDSP || property == P::INSP;
  const bool semi = property == P::SOP || property == P::SOPSP;
  const bool weak_or_full = property == P::WOP || property == P::WOPSP || property == P::OP || property == P::OPSP;
  const bool full = property == P::OP || property == P::OPSP;
  if (!son_check && !semi && !weak_or_full)
    throw std::invalid_argument("check_property: unsupported property " + name);

  const OracleResult oracle = oracle_min(g, system, f);

  std::vector<std::vector<Evaluated>> by_terminal(g.vertex_count());
  detail::walk_paths(g, system, max_roads, f, [&](const detail::WalkState& st) {
    by_terminal[st.vertices.back()].push_back({Path{st.source, st.roads}, st.values.back()});
  });

  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto& group = by_terminal[u];
    for (RoadKey key : g.out_roads(u)) {
      const Road& road = g.road(key);
      std::vector<Extension> ext;
      for (const Evaluated& e : group) {
        if (!extension_is_member(g, system, e.path.view(), road)) continue;
        ext.push_back({&e, f.extend(e.value, e.path.view(), road)});
      }

      if (son_check) {
        for (const Extension& x : ext) {
          if (!is_minimum(oracle, u, x.base->value, tol)) continue;
          const bool ok = property == P::NDSP ? approx_less_equal(x.base->value, x.extended, tol)
                                              : x.base->value < x.extended;
          if (!ok)
            return violation(name, max_roads,
                             Witness{{x.base->path, son(x.base->path, key)},
                                     {x.base->value, x.extended},
                                     u,
                                     "minimum path and its son"});
        }
        continue;
      }

      for (const Extension& a : ext) {
        if (shortest_only && !is_minimum(oracle, u, a.base->value, tol)) continue;
        for (const Extension& b : ext) {
          if (a.base == b.base) continue;
          const ExtendedReal fa = a.base->value, fb = b.base->value;
          bool broken = false;
          std::string why;
          if (semi && approx_less_equal(fa, fb, tol) && !approx_less_equal(a.extended, b.extended, tol)) {
            broken = true;
            why = "f(P) <= f(P') but f(P+r) > f(P'+r)";
          } else if (weak_or_full && clearly_less(fa, fb, tol) && !(a.extended < b.extended)) {
            broken = true;
            why = "f(P) < f(P') but f(P+r) >= f(P'+r)";
          } else if (full && approx_equal(fa, fb, tol) && !approx_equal(a.extended, b.extended, tol)) {
            broken = true;
            why = "f(P) = f(P') but f(P+r) != f(P'+r)";
          }
          if (broken)
            return violation(name, max_roads,
                             Witness{{a.base->path, son(a.base->path, key), b.base->path, son(b.base->path, key)},
                                     {fa, a.extended, fb, b.extended},
                                     u,
                                     why});
        }
      }
    }
  }
  return clean(name, max_roads);
}

PropertyReport check_no_negative_circles(const Graph& g, VertexId s, const PathFunction& f, std::size_t max_roads,
                                         bool strict, double tol) {
  const std::string name = strict ? "NoNonPositiveCircles" : "NoNegativeCircles";
  std::optional<PropertyReport> found;
  detail::walk_paths(g, PathSystem{SystemKind::AllPaths, s}, max_roads, f, [&](const detail::WalkState& st) {
    if (found) return;
    const std::size_t d = st.roads.size();
    const ExtendedReal with_circle = st.values[d];
    for (std::size_t j = 0; j < d; ++j) {
      if (st.vertices[j] != st.vertices[d]) continue;
      const ExtendedReal without = st.values[j];
      const bool ok = strict ? without < with_circle : approx_less_equal(without, with_circle, tol);
      if (ok) continue;
      Path prefix{st.source, {st.roads.begin(), st.roads.begin() + static_cast<std::ptrdiff_t>(j)}};
      found = violation(name, max_roads,
                        Witness{{prefix, Path{st.source, st.roads}}, {without, with_circle}, st.vertices[d],
                                "P and P + C"});
      return;
    }
  });
  return found ? *found : clean(name, max_roads);
}

PropertyReport check_wisp(const Graph& g, const PathSystem& system, const PathFunction& f, double tol) {
  const std::size_t n = g.vertex_count();
  const std::size_t bound = n == 0 ? 0 : n - 1;
  const OracleResult oracle = oracle_min(g, system, f);

  // Simple paths grown only through minimum prefixes.
  std::vector<bool> has_witness(n, false);
  std::vector<bool> on_path(n, false);
  std::vector<RoadKey> roads;
  std::function<void(VertexId, ExtendedReal)> grow = [&](VertexId at, ExtendedReal value) {
    on_path[at] = true;
    for (RoadKey key : g.out_roads(at)) {
      const Road& road = g.road(key);
      if (on_path[road.to]) continue;
      const ExtendedReal next = f.extend(value, PathView{system.source, roads}, road);
      if (!is_minimum(oracle, road.to, next, tol)) continue;
      has_witness[road.to] = true;
      roads.push_back(key);
      grow(road.to, next);
      roads.pop_back();
    }
    on_path[at] = false;
  };
  grow(system.source, f.base());

  for (VertexId v = 0; v < n; ++v) {
    if (v == system.source || !oracle.reachable(v) || has_witness[v]) continue;
    return violation("WISP", bound, Witness{{}, {}, v, "no path with all prefixes minimal"});
  }
  return clean("WISP", bound);
}

PropertyReport compare_tree_to_oracle(const ShortestPathTree& tree, const OracleResult& oracle, double tol) {
  if (tree.source != oracle.source) throw std::invalid_argument("tree and oracle have different sources");
  if (tree.vertex_count() != oracle.minimum.size())
    throw std::invalid_argument("tree and oracle have different vertex counts");

  PropertyReport report = clean("tree-vs-oracle", tree.vertex_count() == 0 ? 0 : tree.vertex_count() - 1);
  std::optional<VertexId> worst;
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    if (tree.is_covered(v) != oracle.reachable(v)) {
      return violation(report.property, report.max_roads,
                       Witness{{}, {}, v, tree.is_covered(v) ? "covered but unreachable" : "reachable but not covered"});
    }
    if (!tree.is_covered(v) || !tree.has_values()) continue;
    const double dev = deviation(tree.value[v], *oracle.minimum[v]);
    if (!worst || dev > report.worst_deviation) {
      report.worst_deviation = dev;
      worst = v;
    }
  }
  if (worst && report.worst_deviation > tol) {
    std::ostringstream note;
    note << "tree value " << tree.value[*worst] << " vs minimum " << *oracle.minimum[*worst];
    Witness w{{}, {}, *worst, note.str()};
    if (oracle.witness[*worst]) {
      w.paths.push_back(*oracle.witness[*worst]);
      w.values.push_back(*oracle.minimum[*worst]);
    }
    auto r = violation(report.property, report.max_roads, std::move(w));
    r.worst_deviation = report.worst_deviation;
    return r;
  }
  return report;
}

PropertyReport check_tree_structure(const Graph& g, const PathSystem& system, const ShortestPathTree& tree,
                                    const PathFunction* f) {
  const std::size_t n = g.vertex_count();
  const std::string name = "tree-structure";
  auto fail = [&](std::optional<VertexId> v, std::string why) {
    return violation(name, n == 0 ? 0 : n - 1, Witness{{}, {}, v, std::move(why)});
  };

  if (tree.vertex_count() != n) return fail(std::nullopt, "tree size differs from graph");
  if (tree.source != system.source) return fail(tree.source, "tree rooted away from the system source");
  if (tree.parent[tree.source]) return fail(tree.source, "source has a parent");
  if (tree.has_values() && tree.value.size() != n) return fail(std::nullopt, "value vector size differs");

  std::vector<std::size_t> position(n, n);
  if (!tree.order.empty()) {
    if (tree.order.front() != tree.source) return fail(tree.order.front(), "order does not start at the source");
    for (std::size_t i = 0; i < tree.order.size(); ++i) {
      const VertexId v = tree.order[i];
      if (v >= n || !tree.is_covered(v) || position[v] != n) return fail(v, "order is not a covered permutation");
      position[v] = i;
    }
    if (tree.order.size() != tree.covered().size()) return fail(std::nullopt, "order misses covered vertices");
  }

  for (VertexId v = 0; v < n; ++v) {
    if (!tree.is_covered(v)) continue;
    if (v != tree.source) {
      const TreeLink& link = *tree.parent[v];
      if (!g.has_road(link.road)) return fail(v, "parent road does not exist");
      const Road& road = g.road(link.road);
      if (road.to != v || road.from != link.parent) return fail(v, "parent link does not match its road");
      if (!tree.is_covered(link.parent)) return fail(v, "parent is not covered");
      if (!tree.order.empty() && position[link.parent] >= position[v]) return fail(v, "parent discovered later");
    }
    Path p;
    try {
      p = tree.path_to(g, v);
    } catch (const std::logic_error& e) {
      return fail(v, e.what());
    }
    if (!is_member(g, system, p.view())) return fail(v, "tree path is not a member of the system");
    if (f && tree.has_values()) {
      const ExtendedReal folded = path_value(g, *f, p);
      if (!(folded == tree.value[v])) {
        auto r = fail(v, "stored value " + to_string(tree.value[v]) + " differs from folded value");
        r.witness->paths.push_back(p);
        r.witness->values.push_back(folded);
        return r;
      }
    }
  }
  return clean(name, n == 0 ? 0 : n - 1);
}

}  // namespace gsp
