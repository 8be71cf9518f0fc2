#include "maxkcut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

namespace maxkcut {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

WeightedGraph::WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ == 0) throw GraphError("graph must have at least one vertex");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : edges_) {
    if (e.u >= num_vertices_ || e.v >= num_vertices_) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has an endpoint out of range");
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (!std::isfinite(e.w) || e.w < 0.0) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has a negative or non-finite weight");
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw GraphError("duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    total_weight_ += e.w;
  }
  if (!std::isfinite(total_weight_)) throw GraphError("total edge weight is not finite");
}

double WeightedGraph::max_weighted_degree() const {
  std::vector<double> degree(num_vertices_, 0.0);
  for (const Edge& e : edges_) {
    degree[e.u] += e.w;
    degree[e.v] += e.w;
  }
  return *std::max_element(degree.begin(), degree.end());
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view field, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

double parse_weight(std::string_view field, std::size_t line) {
  // strtod is locale-sensitive, istringstream with the classic locale is not.
  std::istringstream ss{std::string(field)};
  ss.imbue(std::locale::classic());
  double w = 0.0;
  ss >> w;
  if (ss.fail() || !ss.eof()) {
    throw ParseError(line, "malformed weight '" + std::string(field) + "'");
  }
  return w;
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (!have_header) {
      if (fields.size() != 2) throw ParseError(line_no, "header must be 'n m'");
      n = parse_count(fields[0], line_no, "vertex count");
      m = parse_count(fields[1], line_no, "edge count");
      if (n == 0) throw ParseError(line_no, "vertex count must be positive");
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) throw ParseError(line_no, "more edge lines than declared (" + std::to_string(m) + ")");
    if (fields.size() != 3) throw ParseError(line_no, "edge line must be 'u v w'");
    const std::size_t u = parse_count(fields[0], line_no, "vertex index");
    const std::size_t v = parse_count(fields[1], line_no, "vertex index");
    const double w = parse_weight(fields[2], line_no);
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (!std::isfinite(w) || w < 0.0) throw ParseError(line_no, "negative or non-finite weight");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.push_back({u - 1, v - 1, w});
  }
  if (!have_header) throw ParseError(line_no, "missing header 'n m'");
  if (edges.size() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::string serialize_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  out << std::setprecision(17);
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
  return out.str();
}

WeightedGraph complete_graph(std::size_t k, double w) {
  if (k < 2) throw GraphError("complete graph needs k >= 2");
  std::vector<Edge> edges;
  edges.reserve(k * (k - 1) / 2);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) edges.push_back({u, v, w});
  return WeightedGraph(k, std::move(edges));
}

double cut_value(const WeightedGraph& g, std::span<const Label> labels) {
  if (labels.size() != g.num_vertices()) {
    throw std::invalid_argument("partition has " + std::to_string(labels.size()) + " labels for " +
                                std::to_string(g.num_vertices()) + " vertices");
  }
  double value = 0.0;
  for (const Edge& e : g.edges())
    if (labels[e.u] != labels[e.v]) value += e.w;
  return value;
}

}  // namespace maxkcut
