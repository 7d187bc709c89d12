#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stc {

using Vertex = int;

// Undirected edge between vertex indices; always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge &) const = default;
};

using LabelPair = std::pair<std::string, std::string>;

/// Simple undirected graph with string labels and positive integer vertex
/// weights.
///
/// Vertices are kept in lexicographic label order, so vertex index i is the
/// rank of its label. Edges are kept sorted as (min, max) index pairs, which
/// coincides with lexicographic order of the canonical label pairs. A Graph
/// is immutable once built.
class Graph {
public:
  Graph() = default;

  /// Throws input_error on duplicate labels, empty labels, self-loops,
  /// duplicate edges, unknown endpoints or non-positive weights. `weights`
  /// is either empty (all 1) or parallel to `labels`.
  Graph(std::vector<std::string> labels, const std::vector<LabelPair> &edges,
        std::vector<std::int64_t> weights = {});

  /// Builds from already sorted, distinct labels and index edges.
  static Graph from_indices(std::vector<std::string> sorted_labels,
                            std::vector<Edge> edges,
                            std::vector<std::int64_t> weights = {});

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(Vertex v) const { return labels_[v]; }
  std::optional<Vertex> find(std::string_view label) const;
  /// Throws input_error for unknown labels.
  Vertex index_of(std::string_view label) const;

  const std::vector<Vertex> &adjacent(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const {
    return a != b && edge_id_[index(a, b)] >= 0;
  }
  /// Position of edge ab in edges(), or -1.
  int edge_id(Vertex a, Vertex b) const {
    return a == b ? -1 : edge_id_[index(a, b)];
  }
  const std::vector<Edge> &edges() const { return edges_; }
  LabelPair edge_labels(const Edge &e) const { return {labels_[e.u], labels_[e.v]}; }

  std::int64_t weight(Vertex v) const { return weights_[v]; }
  const std::vector<std::int64_t> &weights() const { return weights_; }
  std::int64_t edge_weight(const Edge &e) const { return weights_[e.u] * weights_[e.v]; }
  bool unit_weights() const;

  bool operator==(const Graph &other) const;

private:
  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b);
  }
  void build_adjacency();

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> weights_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> edge_id_;
};

/// Labels adjacent to `label`, in lexicographic order.
std::vector<std::string> neighbors(const Graph &g, std::string_view label);

/// Connected components as induced subgraphs, ordered by smallest label.
std::vector<Graph> connected_components(const Graph &g);

/// Vertex index sets of the connected components, same order as above.
std::vector<std::vector<Vertex>> component_vertex_sets(const Graph &g);

Graph induced_subgraph(const Graph &g, const std::vector<std::string> &labels);
Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

struct TwinPartition {
  /// Classes sorted by representative; members sorted.
  std::vector<std::vector<std::string>> classes;
  std::vector<std::string> representative;
};

/// True-twin classes: u ~ v iff N[u] == N[v].
TwinPartition twin_classes(const Graph &g);

struct TwinContraction {
  Graph graph;
  TwinPartition partition;
  /// Number of original edges inside twin classes.
  std::int64_t intra_twin_value = 0;
};

/// Keeps one representative per twin class, weighted by the class size.
/// Requires unit weights.
TwinContraction contract_twins(const Graph &g);

} // namespace stc
