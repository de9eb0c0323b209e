#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "gsp/extended_real.hpp"
#include "gsp/graph.hpp"

namespace gsp {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits off the next whitespace-delimited token.
std::string_view next_token(std::string_view& rest) {
  rest = trim(rest);
  const auto end = rest.find_first_of(" \t");
  std::string_view tok = rest.substr(0, end);
  rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
  return tok;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(std::string("syntax error: expected ") + what, line);
  return out;
}

double parse_weight(std::string_view tok, std::size_t line) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("syntax error: expected weight", line);
  if (!std::isfinite(out)) throw ParseError("non-finite weight", line);
  return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::size_t road_lines = 0;
  std::vector<std::string> labels;
  std::vector<bool> seen;
  std::size_t seen_count = 0;
  std::vector<Road> roads;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view rest = raw;
    if (const auto hash = rest.find('#'); hash != std::string_view::npos) rest = rest.substr(0, hash);
    const std::string_view kind = next_token(rest);
    if (kind.empty()) continue;

    if (kind == "g") {
      if (n) throw ParseError("syntax error: duplicate header", line);
      n = parse_count(next_token(rest), line, "vertex count");
      declared_m = parse_count(next_token(rest), line, "road count");
      if (*n == 0) throw ParseError("graph needs at least one vertex", line);
      labels.assign(*n, {});
      seen.assign(*n, false);
    } else if (!n) {
      throw ParseError("syntax error: missing header", line);
    } else if (kind == "v") {
      const VertexId id = parse_count(next_token(rest), line, "vertex id");
      if (id >= *n) throw ParseError("vertex id out of range", line);
      if (seen[id]) throw ParseError("duplicate vertex id", line);
      seen[id] = true;
      ++seen_count;
      labels[id] = std::string(trim(rest));
      continue;
    } else if (kind == "arc" || kind == "edge") {
      const VertexId u = parse_count(next_token(rest), line, "vertex id");
      const VertexId v = parse_count(next_token(rest), line, "vertex id");
      const double w = parse_weight(next_token(rest), line);
      if (u >= *n || v >= *n) throw ParseError("road endpoint out of range", line);
      if (u == v) throw ParseError("self-loop", line);
      roads.push_back({roads.size(), u, v, w});
      if (kind == "edge") roads.push_back({roads.size(), v, u, w});
      ++road_lines;
    } else {
      throw ParseError("syntax error: unknown line kind '" + std::string(kind) + "'", line);
    }
    if (!trim(rest).empty()) throw ParseError("syntax error: trailing tokens", line);
  }

  if (!n) throw ParseError("syntax error: missing header", line);
  if (seen_count != *n) throw ParseError("expected " + std::to_string(*n) + " vertex lines", line);
  if (road_lines != declared_m)
    throw ParseError("header declares " + std::to_string(declared_m) + " roads, found " +
                         std::to_string(road_lines),
                     line);
  return Graph(*n, std::move(roads), std::move(labels));
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "g " << g.vertex_count() << ' ' << g.road_count() << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "v " << v;
    if (!g.label(v).empty()) out << ' ' << g.label(v);
    out << '\n';
  }
  for (const Road& r : g.roads()) out << "arc " << r.from << ' ' << r.to << ' ' << format_double(r.weight) << '\n';
  return out.str();
}

}  // namespace gsp
