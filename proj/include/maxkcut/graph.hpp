#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace maxkcut {

using Vertex = std::size_t;
using Label = int;

struct Edge {
  Vertex u;
  Vertex v;
  double w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Error raised while reading the edge-list format; carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/**
 * Undirected graph with nonnegative edge weights and 0-based vertex ids.
 *
 * Construction validates everything: endpoints in range, no self-loops,
 * finite nonnegative weights, and no repeated unordered pair. The object is
 * immutable afterwards.
 */
class WeightedGraph {
 public:
  WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  double total_weight() const { return total_weight_; }

  /// Largest sum of incident edge weights over all vertices.
  double max_weighted_degree() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t num_vertices_;
  std::vector<Edge> edges_;
  double total_weight_ = 0.0;
};

WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(std::string_view text);
WeightedGraph read_graph_file(const std::string& path);

/// Writes the 1-based edge-list format accepted by parse_graph.
std::string serialize_graph(const WeightedGraph& g);

WeightedGraph complete_graph(std::size_t k, double w = 1.0);

/// Total weight of edges whose endpoints carry different labels.
double cut_value(const WeightedGraph& g, std::span<const Label> labels);

}  // namespace maxkcut
