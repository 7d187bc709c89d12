#include "stc/incompat.hpp"

#include "stc/errors.hpp"

#include <algorithm>

namespace stc {

bool IncompatGraph::conflict(int a, int b) const {
  return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

IncompatGraph build_incompat(const Graph &g) {
  IncompatGraph h;
  h.nodes = g.edges();
  h.node_weight.reserve(h.nodes.size());
  for (const Edge &e : h.nodes)
    h.node_weight.push_back(g.edge_weight(e));
  h.adj.assign(h.nodes.size(), {});

  // Every open wedge a - center - b yields one conflict.
  for (std::size_t c = 0; c < g.num_vertices(); ++c) {
    const auto &nb = g.adjacent(static_cast<Vertex>(c));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j]))
          continue;
        int x = g.edge_id(static_cast<Vertex>(c), nb[i]);
        int y = g.edge_id(static_cast<Vertex>(c), nb[j]);
        h.adj[x].push_back(y);
        h.adj[y].push_back(x);
        h.conflicts.emplace_back(std::min(x, y), std::max(x, y));
      }
  }
  for (auto &l : h.adj)
    std::sort(l.begin(), l.end());
  std::sort(h.conflicts.begin(), h.conflicts.end());
  return h;
}

StrongWeakLabeling make_labeling(const Graph &g, std::vector<Edge> strong) {
  std::vector<char> is_strong(g.num_edges(), 0);
  for (const Edge &e : strong) {
    int id = g.edge_id(e.u, e.v);
    if (id < 0)
      throw input_error("strong edge is not an edge of the graph");
    if (is_strong[id])
      throw input_error("strong edge listed twice");
    is_strong[id] = 1;
  }
  StrongWeakLabeling lab;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge &e = g.edges()[i];
    if (is_strong[i]) {
      lab.strong.push_back(e);
      lab.value += g.edge_weight(e);
    } else {
      lab.weak.push_back(e);
    }
  }
  return lab;
}

std::optional<StcViolation> validate_stc(const Graph &g, const StrongWeakLabeling &lab) {
  std::vector<char> state(g.num_edges(), 0); // 1 strong, 2 weak
  auto mark = [&](const std::vector<Edge> &list, char s) {
    for (const Edge &e : list) {
      int id = g.edge_id(e.u, e.v);
      if (id < 0)
        throw input_error("labeled pair '" + g.label(e.u) + "' '" + g.label(e.v) +
                          "' is not an edge");
      if (state[id] != 0)
        throw input_error("edge '" + g.label(e.u) + "' '" + g.label(e.v) +
                          "' labeled more than once");
      state[id] = s;
    }
  };
  mark(lab.strong, 1);
  mark(lab.weak, 2);
  if (std::find(state.begin(), state.end(), 0) != state.end())
    throw input_error("labeling does not cover every edge");

  // N_S[v] must be a clique for every v.
  std::vector<Vertex> strong_nb;
  for (std::size_t c = 0; c < g.num_vertices(); ++c) {
    const Vertex v = static_cast<Vertex>(c);
    strong_nb.clear();
    for (Vertex u : g.adjacent(v))
      if (state[g.edge_id(v, u)] == 1)
        strong_nb.push_back(u);
    for (std::size_t i = 0; i < strong_nb.size(); ++i)
      for (std::size_t j = i + 1; j < strong_nb.size(); ++j)
        if (!g.has_edge(strong_nb[i], strong_nb[j]))
          return StcViolation{strong_nb[i], v, strong_nb[j]};
  }
  return std::nullopt;
}

StrongWeakLabeling labeling_from_independent_set(const Graph &g, const IncompatGraph &h,
                                                 std::span<const int> nodes) {
  if (h.size() != g.num_edges())
    throw contract_violation("incompatibility graph does not belong to this graph");
  std::vector<char> chosen(h.size(), 0);
  for (int x : nodes) {
    if (x < 0 || static_cast<std::size_t>(x) >= h.size())
      throw contract_violation("node index out of range");
    chosen[x] = 1;
  }
  std::vector<Edge> strong;
  for (int x : nodes) {
    for (int y : h.adj[x])
      if (chosen[y])
        throw contract_violation("node set is not independent");
    strong.push_back(h.nodes[x]);
  }
  return make_labeling(g, std::move(strong));
}

std::vector<int> independent_set_from_labeling(const Graph &g, const StrongWeakLabeling &lab) {
  std::vector<int> out;
  for (const Edge &e : lab.strong) {
    int id = g.edge_id(e.u, e.v);
    if (id < 0)
      throw input_error("strong pair is not an edge");
    out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StrongWeakLabeling expand_labeling(const Graph &original, const TwinContraction &contraction,
                                   const StrongWeakLabeling &contracted_lab) {
  const Graph &small = contraction.graph;
  const auto &tp = contraction.partition;
  if (tp.classes.size() != small.num_vertices() || tp.representative.size() != tp.classes.size())
    throw input_error("twin partition does not match contracted graph");

  std::vector<int> cls(original.num_vertices(), -1);
  for (std::size_t c = 0; c < tp.classes.size(); ++c) {
    if (small.label(static_cast<Vertex>(c)) != tp.representative[c])
      throw input_error("contracted graph is not labeled by class representatives");
    for (const auto &l : tp.classes[c]) {
      Vertex v = original.index_of(l);
      if (cls[v] >= 0)
        throw input_error("vertex '" + l + "' appears in two twin classes");
      cls[v] = static_cast<int>(c);
    }
  }
  if (std::find(cls.begin(), cls.end(), -1) != cls.end())
    throw input_error("twin partition does not cover the graph");

  std::vector<char> strong_small(small.num_edges(), 0);
  std::int64_t small_value = 0;
  for (const Edge &e : contracted_lab.strong) {
    int id = small.edge_id(e.u, e.v);
    if (id < 0)
      throw input_error("contracted labeling refers to a non-edge");
    strong_small[id] = 1;
    small_value += small.edge_weight(e);
  }

  std::vector<Edge> strong;
  for (const Edge &e : original.edges()) {
    const int a = cls[e.u], b = cls[e.v];
    if (a == b) {
      strong.push_back(e);
      continue;
    }
    int id = small.edge_id(a, b);
    if (id < 0)
      throw input_error("original edge between classes with no contracted edge");
    if (strong_small[id])
      strong.push_back(e);
  }
  auto lab = make_labeling(original, std::move(strong));
  if (original.unit_weights() &&
      lab.value != small_value + contraction.intra_twin_value)
    throw contract_violation("expanded value disagrees with contracted value");
  return lab;
}

} // namespace stc
