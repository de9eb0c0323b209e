#pragma once

#include <memory>
#include <string_view>

#include "gsp/detour.hpp"
#include "gsp/path_function.hpp"

namespace gsp {

// d(P) = sum of road weights. Declares NDSP, SOP, OP and NoNegativeCircles when
// every weight is nonnegative, otherwise treats the weights as conservative and
// declares only OP and NoNegativeCircles.
PathFunction classic_distance(const Graph& g);

// Worst-case cost of P when at most one road may be blocked:
//   r((s,s)) = 0
//   r(P + (u,v)) = max( d_{G\(u,v)}(s, v), w(u,v) + r(P) )
// The recurrence reproduces the closed form
//   r(P) = max{ d(P), d_{G\last}(s, t(P)), d(P_i) + d_{G\(v_{i-1},v_i)}(s, v_i) }
// with P_i the suffix of P starting at v_i.
PathFunction anti_risk(std::shared_ptr<const DetourTable> table);

// c(P + (u,v)) = p * d_{G\(u,v)}(u, v) + w(u,v) + c(P), c((s,s)) = 0.
// Throws std::invalid_argument unless 0 < p < 1.
PathFunction blocked_cost(std::shared_ptr<const DetourTable> table, double p);

// e(P + (u,v)) = p * d_{G\(u,v)}(u, v) + (1 - p) * (w(u,v) + e(P)), e((s,s)) = 0.
PathFunction expected_cost(std::shared_ptr<const DetourTable> table, double p);

enum class FunctionKind { Classic, AntiRisk, BlockedCost, ExpectedCost };

FunctionKind parse_function_kind(std::string_view name);
std::string_view to_string(FunctionKind kind);
bool needs_probability(FunctionKind kind);

// Builds the named function for g, creating a detour table when needed.
PathFunction make_function(const Graph& g, FunctionKind kind, double p = 0.0);

}  // namespace gsp
