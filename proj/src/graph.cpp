#include "stc/graph.hpp"

#include "stc/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace stc {

Graph::Graph(std::vector<std::string> labels, const std::vector<LabelPair> &edges,
             std::vector<std::int64_t> weights) {
  if (!weights.empty() && weights.size() != labels.size())
    throw input_error("weight list does not match vertex list");
  if (weights.empty())
    weights.assign(labels.size(), 1);

  std::vector<std::size_t> perm(labels.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });

  std::vector<std::string> sorted;
  std::vector<std::int64_t> sorted_w;
  sorted.reserve(labels.size());
  sorted_w.reserve(labels.size());
  for (std::size_t i : perm) {
    if (labels[i].empty())
      throw input_error("empty vertex label");
    if (!sorted.empty() && sorted.back() == labels[i])
      throw input_error("duplicate vertex '" + labels[i] + "'");
    sorted.push_back(std::move(labels[i]));
    sorted_w.push_back(weights[i]);
  }

  std::unordered_map<std::string_view, Vertex> lookup;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    lookup.emplace(sorted[i], static_cast<Vertex>(i));
  auto resolve = [&](const std::string &s) {
    auto it = lookup.find(s);
    if (it == lookup.end())
      throw input_error("edge endpoint '" + s + "' is not a vertex");
    return it->second;
  };

  std::vector<Edge> idx_edges;
  idx_edges.reserve(edges.size());
  for (const auto &[a, b] : edges) {
    Vertex u = resolve(a), v = resolve(b);
    if (u == v)
      throw input_error("self-loop at '" + a + "'");
    idx_edges.emplace_back(u, v);
  }
  *this = from_indices(std::move(sorted), std::move(idx_edges), std::move(sorted_w));
}

Graph Graph::from_indices(std::vector<std::string> sorted_labels, std::vector<Edge> edges,
                          std::vector<std::int64_t> weights) {
  Graph g;
  const auto n = sorted_labels.size();
  for (std::size_t i = 1; i < n; ++i)
    if (!(sorted_labels[i - 1] < sorted_labels[i]))
      throw input_error("labels must be sorted and distinct");
  if (weights.empty())
    weights.assign(n, 1);
  if (weights.size() != n)
    throw input_error("weight list does not match vertex list");
  for (std::size_t i = 0; i < n; ++i)
    if (weights[i] < 1)
      throw input_error("weight of '" + sorted_labels[i] + "' must be >= 1");

  g.labels_ = std::move(sorted_labels);
  g.weights_ = std::move(weights);
  g.edges_ = std::move(edges);
  for (const Edge &e : g.edges_)
    if (e.u == e.v || e.u < 0 || static_cast<std::size_t>(e.v) >= n)
      throw input_error("invalid edge");
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw input_error("duplicate edge '" + g.labels_[dup->u] + "' '" + g.labels_[dup->v] + "'");
  g.build_adjacency();
  return g;
}

void Graph::build_adjacency() {
  const auto n = labels_.size();
  adj_.assign(n, {});
  edge_id_.assign(n * n, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge &e = edges_[i];
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    edge_id_[index(e.u, e.v)] = static_cast<int>(i);
    edge_id_[index(e.v, e.u)] = static_cast<int>(i);
  }
  for (auto &list : adj_)
    std::sort(list.begin(), list.end());
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Vertex Graph::index_of(std::string_view label) const {
  if (auto v = find(label))
    return *v;
  throw input_error("unknown vertex '" + std::string(label) + "'");
}

bool Graph::unit_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 1; });
}

bool Graph::operator==(const Graph &other) const {
  return labels_ == other.labels_ && edges_ == other.edges_ && weights_ == other.weights_;
}

std::vector<std::string> neighbors(const Graph &g, std::string_view label) {
  std::vector<std::string> out;
  for (Vertex u : g.adjacent(g.index_of(label)))
    out.push_back(g.label(u));
  return out;
}

std::vector<std::vector<Vertex>> component_vertex_sets(const Graph &g) {
  const auto n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  // Vertex indices follow label order, so scanning by index yields components
  // ordered by their smallest label.
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0)
      continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex u : g.adjacent(v))
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::vector<Graph> connected_components(const Graph &g) {
  std::vector<Graph> out;
  for (const auto &vs : component_vertex_sets(g))
    out.push_back(induced_subgraph(g, vs));
  return out;
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices) {
  std::vector<Vertex> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw input_error("repeated vertex in induced subgraph request");
  std::vector<int> pos(g.num_vertices(), -1);
  std::vector<std::string> labels;
  std::vector<std::int64_t> weights;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || static_cast<std::size_t>(vs[i]) >= g.num_vertices())
      throw input_error("vertex index out of range");
    pos[vs[i]] = static_cast<int>(i);
    labels.push_back(g.label(vs[i]));
    weights.push_back(g.weight(vs[i]));
  }
  std::vector<Edge> edges;
  for (const Edge &e : g.edges())
    if (pos[e.u] >= 0 && pos[e.v] >= 0)
      edges.emplace_back(pos[e.u], pos[e.v]);
  return Graph::from_indices(std::move(labels), std::move(edges), std::move(weights));
}

Graph induced_subgraph(const Graph &g, const std::vector<std::string> &labels) {
  std::vector<Vertex> vs;
  vs.reserve(labels.size());
  for (const auto &l : labels)
    vs.push_back(g.index_of(l));
  return induced_subgraph(g, std::span<const Vertex>(vs));
}

namespace {

// Class id per vertex; classes numbered in order of their smallest member.
std::vector<int> twin_class_ids(const Graph &g, int &num_classes) {
  std::map<std::vector<Vertex>, int> seen;
  std::vector<int> cls(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::vector<Vertex> closed = g.adjacent(static_cast<Vertex>(v));
    closed.insert(std::upper_bound(closed.begin(), closed.end(), static_cast<Vertex>(v)),
                  static_cast<Vertex>(v));
    auto [it, inserted] = seen.emplace(std::move(closed), static_cast<int>(seen.size()));
    cls[v] = it->second;
  }
  num_classes = static_cast<int>(seen.size());
  return cls;
}

} // namespace

TwinPartition twin_classes(const Graph &g) {
  int k = 0;
  auto cls = twin_class_ids(g, k);
  TwinPartition tp;
  tp.classes.resize(k);
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    tp.classes[cls[v]].push_back(g.label(static_cast<Vertex>(v)));
  for (auto &c : tp.classes)
    tp.representative.push_back(c.front());
  return tp;
}

TwinContraction contract_twins(const Graph &g) {
  if (!g.unit_weights())
    throw contract_violation("contract_twins requires a unit-weight graph");
  int k = 0;
  auto cls = twin_class_ids(g, k);

  TwinContraction out;
  out.partition = twin_classes(g);
  std::vector<Vertex> reps;
  for (const auto &r : out.partition.representative)
    reps.push_back(g.index_of(r));

  std::vector<std::int64_t> size(k, 0);
  for (int c : cls)
    ++size[c];
  for (auto s : size)
    out.intra_twin_value += s * (s - 1) / 2;

  // Class ids are assigned in order of smallest member, so representatives
  // are already sorted and class id == contracted vertex index.
  std::vector<std::string> labels;
  for (Vertex r : reps)
    labels.push_back(g.label(r));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (g.has_edge(reps[i], reps[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  out.graph = Graph::from_indices(std::move(labels), std::move(edges), std::move(size));
  return out;
}

} // namespace stc
