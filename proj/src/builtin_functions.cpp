#include "gsp/builtin_functions.hpp"

#include <stdexcept>

namespace gsp {
namespace {

void require_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("probability p must lie in (0, 1)");
}

// p * d, where an infinite detour stays infinite.
ExtendedReal weighted_detour(double p, ExtendedReal detour) { return scale(p, detour); }

}  // namespace

PathFunction classic_distance(const Graph& g) {
  using P = Property;
  PropertySet props = g.has_nonnegative_weights()
                          ? PropertySet{P::NDSP, P::SOP, P::OP, P::NoNegativeCircles}
                          : PropertySet{P::OP, P::NoNegativeCircles};
  return PathFunction(
      "classic", ExtendedReal(0.0),
      [](ExtendedReal parent, PathView, const Road& road) { return parent + ExtendedReal(road.weight); }, props,
      "O(1) per extension");
}

PathFunction anti_risk(std::shared_ptr<const DetourTable> table) {
  using P = Property;
  return PathFunction(
      "antirisk", ExtendedReal(0.0),
      [table](ExtendedReal parent, PathView path, const Road& road) {
        const ExtendedReal blocked = table->distance(road.key, path.source, road.to);
        return max(blocked, ExtendedReal(road.weight) + parent);
      },
      PropertySet{P::NDSP, P::SOP, P::WISP}, "one detour lookup; O(n^2) Dijkstra on first use of a road");
}

PathFunction blocked_cost(std::shared_ptr<const DetourTable> table, double p) {
  using P = Property;
  require_probability(p);
  return PathFunction(
      "blocked-cost", ExtendedReal(0.0),
      [table, p](ExtendedReal parent, PathView, const Road& road) {
        return weighted_detour(p, table->distance(road.key, road.from, road.to)) + ExtendedReal(road.weight) +
               parent;
      },
      PropertySet{P::NDSP, P::SOP, P::WISP}, "one detour lookup; O(n^2) Dijkstra on first use of a road");
}

PathFunction expected_cost(std::shared_ptr<const DetourTable> table, double p) {
  require_probability(p);
  return PathFunction(
      "expected-cost", ExtendedReal(0.0),
      [table, p](ExtendedReal parent, PathView, const Road& road) {
        return weighted_detour(p, table->distance(road.key, road.from, road.to)) +
               scale(1.0 - p, ExtendedReal(road.weight) + parent);
      },
      PropertySet{Property::OP}, "one detour lookup; O(n^2) Dijkstra on first use of a road");
}

FunctionKind parse_function_kind(std::string_view name) {
  if (name == "classic") return FunctionKind::Classic;
  if (name == "antirisk") return FunctionKind::AntiRisk;
  if (name == "blocked-cost") return FunctionKind::BlockedCost;
  if (name == "expected-cost") return FunctionKind::ExpectedCost;
  throw std::invalid_argument("unknown path function '" + std::string(name) + "'");
}

std::string_view to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::Classic: return "classic";
    case FunctionKind::AntiRisk: return "antirisk";
    case FunctionKind::BlockedCost: return "blocked-cost";
    case FunctionKind::ExpectedCost: return "expected-cost";
  }
  return "?";
}

bool needs_probability(FunctionKind kind) {
  return kind == FunctionKind::BlockedCost || kind == FunctionKind::ExpectedCost;
}

PathFunction make_function(const Graph& g, FunctionKind kind, double p) {
  if (kind == FunctionKind::Classic) return classic_distance(g);
  auto table = std::make_shared<const DetourTable>(g);
  switch (kind) {
    case FunctionKind::AntiRisk: return anti_risk(table);
    case FunctionKind::BlockedCost: return blocked_cost(table, p);
    default: return expected_cost(table, p);
  }
}

}  // namespace gsp
