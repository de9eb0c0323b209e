#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsp/engines.hpp"
#include "gsp/extended_real.hpp"
#include "gsp/graph.hpp"
#include "gsp/path.hpp"
#include "gsp/path_function.hpp"

namespace gsp {

inline constexpr double kDefaultTolerance = 1e-9;

// Depth-first over the system's paths with at most max_roads roads, trying
// roads in key order. (s,s) comes first. The visitor gets each path together
// with its folded value.
void for_each_path(const Graph& g, const PathSystem& system, std::size_t max_roads, const PathFunction& f,
                   const std::function<void(PathView, ExtendedReal)>& visit);
std::vector<Path> enumerate_paths(const Graph& g, const PathSystem& system, std::size_t max_roads);

// m_f(v) as the minimum of f over simple paths, with the first minimizing path
// met in enumeration order as witness. Exact when f has no negative circles.
struct OracleResult {
  VertexId source = 0;
  std::vector<std::optional<ExtendedReal>> minimum;  // nullopt: unreachable
  std::vector<std::optional<Path>> witness;
  std::uint64_t enumerated_count = 0;

  bool reachable(VertexId v) const { return minimum[v].has_value(); }
};

OracleResult oracle_min(const Graph& g, const PathSystem& system, const PathFunction& f);

// Minimum over paths of the system with at most max_roads roads (circles
// allowed under all-paths). Used to watch bounded minima converge.
std::vector<std::optional<ExtendedReal>> bounded_minimum(const Graph& g, const PathSystem& system,
                                                         const PathFunction& f, std::size_t max_roads);

enum class Verdict { NoViolationFound, Violated };

std::string_view to_string(Verdict v);

struct Witness {
  std::vector<Path> paths;
  std::vector<ExtendedReal> values;  // values[i] = f(paths[i])
  std::optional<VertexId> vertex;
  std::string note;
};

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::NoViolationFound;
  std::optional<Witness> witness;
  std::size_t max_roads = 0;
  double worst_deviation = 0.0;

  bool passed() const { return verdict == Verdict::NoViolationFound; }
};

// "property=<name> verdict=<...> scope=max_roads:<L> witness=<... or ->"
std::string format_report(const Graph& g, const PropertyReport& report);

// Exhaustive check of one extension property (NDSP, INSP, SOP, SOPSP,
// OP, OPSP, WOP, WOPSP) over paths with at most max_roads roads and their
// one-road extensions. Comparisons use `tol`: hypotheses must hold clearly,
// conclusions are allowed `tol` slack, and strict conclusions are exact.
// Throws std::invalid_argument for other properties.
PropertyReport check_property(const Graph& g, const PathSystem& system, const PathFunction& f, Property property,
                              std::size_t max_roads, double tol = kDefaultTolerance);

// Appending a circle C to P: f(P + C) - f(P) >= 0 (or > 0 when strict), over
// all paths of at most max_roads roads.
PropertyReport check_no_negative_circles(const Graph& g, VertexId s, const PathFunction& f, std::size_t max_roads,
                                         bool strict = false, double tol = kDefaultTolerance);

// Every reachable v != s has a simple path whose every nonempty prefix is a
// minimum path.
PropertyReport check_wisp(const Graph& g, const PathSystem& system, const PathFunction& f,
                          double tol = kDefaultTolerance);

// Same covered set as the oracle and |value - minimum| <= tol everywhere.
// Throws std::invalid_argument when the sources differ.
PropertyReport compare_tree_to_oracle(const ShortestPathTree& tree, const OracleResult& oracle,
                                      double tol = kDefaultTolerance);

// Structural checks on an engine output: one root without parent, every other
// covered vertex with exactly one parent road, no parent cycle, every P_T(v) a
// member of the system and, when values exist, value(v) == f(P_T(v)) exactly.
PropertyReport check_tree_structure(const Graph& g, const PathSystem& system, const ShortestPathTree& tree,
                                    const PathFunction* f = nullptr);

}  // namespace gsp
