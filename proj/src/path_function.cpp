#include "gsp/path_function.hpp"

#include <array>

namespace gsp {
namespace {

constexpr std::array<std::string_view, kPropertyCount> kNames = {
    "NDSP", "INSP", "SOP", "SOPSP", "OP", "OPSP", "WOP", "WOPSP", "WISP", "NoNegativeCircles", "NoNonPositiveCircles",
};

}  // namespace

std::string_view to_string(Property p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<Property> parse_property(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<Property>(i);
  return std::nullopt;
}

std::vector<Property> PropertySet::missing_from(const PropertySet& required) const {
  std::vector<Property> out;
  for (std::size_t i = 0; i < kPropertyCount; ++i) {
    const auto p = static_cast<Property>(i);
    if (required.contains(p) && !contains(p)) out.push_back(p);
  }
  return out;
}

std::string PropertySet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < kPropertyCount; ++i) {
    if (!bits_.test(i)) continue;
    if (!out.empty()) out += ',';
    out += kNames[i];
  }
  return out.empty() ? "-" : out;
}

PropertySet implied_properties(const PropertySet& declared, SystemKind system) {
  using P = Property;
  PropertySet s = declared;
  if (system == SystemKind::SimplePaths) {
    s.insert(P::NoNonPositiveCircles);
    s.insert(P::NoNegativeCircles);
  }
  for (PropertySet before; before != s;) {
    before = s;
    if (s.contains(P::OP)) {
      s.insert(P::WOP);
      s.insert(P::SOP);
      s.insert(P::OPSP);
    }
    if (s.contains(P::OPSP)) {
      s.insert(P::WOPSP);
      s.insert(P::SOPSP);
    }
    if (s.contains(P::WOP)) s.insert(P::WOPSP);
    if (s.contains(P::SOP)) s.insert(P::SOPSP);
    if (s.contains(P::INSP)) s.insert(P::NDSP);
    if (s.contains(P::NoNonPositiveCircles)) s.insert(P::NoNegativeCircles);
    if (s.contains(P::NoNonPositiveCircles) && s.contains(P::SOPSP)) s.insert(P::WISP);
    if (s.contains(P::NoNegativeCircles) && s.contains(P::OPSP)) s.insert(P::WISP);
    if (s.contains(P::NoNegativeCircles) && s.contains(P::SOPSP) && s.contains(P::INSP)) s.insert(P::WISP);
  }
  return s;
}

ExtendedReal path_value(const Graph& g, const PathFunction& f, PathView p) {
  validate_path(g, p);
  ExtendedReal value = f.base();
  for (std::size_t i = 0; i < p.roads.size(); ++i) {
    const PathView parent{p.source, p.roads.first(i)};
    value = f.extend(value, parent, g.road(p.roads[i]));
  }
  return value;
}

}  // namespace gsp
