#include <cmath>
#include <random>

#include "gsp/graph.hpp"

namespace gsp {
namespace {

double draw(std::mt19937_64& rng, double low, double high) {
  if (low == high) return low;
  return std::uniform_real_distribution<double>(low, high)(rng);
}

}  // namespace

GenerationMode parse_generation_mode(std::string_view name) {
  if (name == "directed") return GenerationMode::Directed;
  if (name == "undirected") return GenerationMode::Undirected;
  if (name == "conservative") return GenerationMode::Conservative;
  throw GraphError("unknown generation mode '" + std::string(name) + "'");
}

Graph generate_random(const GeneratorParams& p) {
  if (p.n < 2) throw GraphError("generator needs n >= 2");
  if (!std::isfinite(p.weight_low) || !std::isfinite(p.weight_high) || p.weight_low > p.weight_high)
    throw GraphError("generator needs finite weight_low <= weight_high");
  if (p.mode == GenerationMode::Conservative && p.weight_low < 0.0)
    throw GraphError("conservative mode needs nonnegative base costs");

  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<VertexId> pick(0, p.n - 1);
  std::uniform_int_distribution<VertexId> pick_other(0, p.n - 2);

  std::vector<double> potential(p.n, 0.0);
  if (p.mode == GenerationMode::Conservative)
    for (double& pi : potential) pi = draw(rng, 0.0, p.weight_high);

  std::vector<Road> roads;
  roads.reserve(p.mode == GenerationMode::Undirected ? 2 * p.m : p.m);
  for (std::size_t i = 0; i < p.m; ++i) {
    const VertexId u = pick(rng);
    VertexId v = pick_other(rng);
    if (v >= u) ++v;  // uniform over vertices other than u
    const double cost = draw(rng, p.weight_low, p.weight_high);
    switch (p.mode) {
      case GenerationMode::Directed:
        roads.push_back({roads.size(), u, v, cost});
        break;
      case GenerationMode::Undirected:
        roads.push_back({roads.size(), u, v, cost});
        roads.push_back({roads.size(), v, u, cost});
        break;
      case GenerationMode::Conservative:
        roads.push_back({roads.size(), u, v, cost + potential[u] - potential[v]});
        break;
    }
  }
  return Graph(p.n, std::move(roads));
}

}  // namespace gsp
