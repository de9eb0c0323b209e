#pragma once

#include <bitset>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsp/extended_real.hpp"
#include "gsp/graph.hpp"
#include "gsp/path.hpp"

namespace gsp {

// Structural properties a path function may declare.
//   NDSP/INSP    extending a minimum path never decreases / always increases f
//   SOP/SOPSP    extension preserves <= between same-terminal paths
//   WOP/WOPSP    extension preserves <
//   OP/OPSP      extension preserves both < and =
//   WISP         every reachable vertex has a minimum path whose prefixes are all minimum
//   NoNegativeCircles / NoNonPositiveCircles   appending a circle never decreases / always increases f
// The *SP forms only constrain pairs whose smaller member is a minimum path.
enum class Property {
  NDSP,
  INSP,
  SOP,
  SOPSP,
  OP,
  OPSP,
  WOP,
  WOPSP,
  WISP,
  NoNegativeCircles,
  NoNonPositiveCircles,
};

inline constexpr std::size_t kPropertyCount = 11;

std::string_view to_string(Property p);
std::optional<Property> parse_property(std::string_view name);

class PropertySet {
 public:
  PropertySet() = default;
  PropertySet(std::initializer_list<Property> props) {
    for (Property p : props) insert(p);
  }

  void insert(Property p) { bits_.set(static_cast<std::size_t>(p)); }
  bool contains(Property p) const { return bits_.test(static_cast<std::size_t>(p)); }
  bool contains_all(const PropertySet& o) const { return (bits_ & o.bits_) == o.bits_; }
  std::vector<Property> missing_from(const PropertySet& required) const;
  std::string to_string() const;

  friend bool operator==(const PropertySet&, const PropertySet&) = default;

 private:
  std::bitset<kPropertyCount> bits_;
};

// Closes a declared set under the implications that hold by definition or
// were established for path functions in general:
//   OP -> WOP, SOP; OPSP -> WOPSP, SOPSP; X -> X-in-shortest-path; INSP -> NDSP
//   NoNonPositiveCircles -> NoNegativeCircles
//   simple-path systems have no circles, so both circle properties hold vacuously
//   NoNonPositiveCircles & SOPSP -> WISP
//   NoNegativeCircles & OPSP -> WISP (every minimum path inherits)
//   NoNegativeCircles & SOPSP & INSP -> WISP
PropertySet implied_properties(const PropertySet& declared, SystemKind system);

// A path function given by its value on (s,s) and the value of P + road
// computed from f(P), P and the road. Folding `extend` along a path gives f.
class PathFunction {
 public:
  using ExtendFn = std::function<ExtendedReal(ExtendedReal parent_value, PathView parent, const Road& road)>;

  PathFunction(std::string name, ExtendedReal base, ExtendFn extend, PropertySet declared,
               std::string eval_cost_note = {})
      : name_(std::move(name)),
        base_(base),
        extend_(std::move(extend)),
        declared_(declared),
        eval_cost_note_(std::move(eval_cost_note)) {}

  const std::string& name() const { return name_; }
  ExtendedReal base() const { return base_; }
  ExtendedReal extend(ExtendedReal parent_value, PathView parent, const Road& road) const {
    return extend_(parent_value, parent, road);
  }
  const PropertySet& declared_properties() const { return declared_; }
  // Cost of one extend call, M(n) in the complexity bounds.
  const std::string& eval_cost_note() const { return eval_cost_note_; }

 private:
  std::string name_;
  ExtendedReal base_;
  ExtendFn extend_;
  PropertySet declared_;
  std::string eval_cost_note_;
};

// Folds f.extend over p. Throws PathError on a broken chain.
ExtendedReal path_value(const Graph& g, const PathFunction& f, PathView p);
inline ExtendedReal path_value(const Graph& g, const PathFunction& f, const Path& p) {
  return path_value(g, f, p.view());
}

}  // namespace gsp
