#include "stc/ordering.hpp"

#include "stc/errors.hpp"

#include <algorithm>
#include <numeric>

namespace stc {

namespace {

std::vector<int> positions_of(const Graph &g, std::span<const Vertex> order) {
  const auto n = g.num_vertices();
  if (order.size() != n)
    throw input_error("ordering length differs from vertex count");
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || pos[v] >= 0)
      throw input_error("ordering is not a permutation of the vertices");
    pos[v] = static_cast<int>(i);
  }
  return pos;
}

} // namespace

std::optional<UmbrellaViolation> verify_umbrella(const Graph &g, std::span<const Vertex> order) {
  const auto pos = positions_of(g, order);
  const int n = static_cast<int>(order.size());
  // Umbrella holds iff every closed neighborhood is a contiguous block of
  // positions; scan each vertex's span for a hole.
  for (int i = 0; i < n; ++i) {
    const Vertex x = order[i];
    int lo = i, hi = i;
    for (Vertex u : g.adjacent(x)) {
      lo = std::min(lo, pos[u]);
      hi = std::max(hi, pos[u]);
    }
    for (int j = i + 1; j < hi; ++j)
      if (!g.has_edge(x, order[j]))
        return UmbrellaViolation{x, order[j], order[hi]};
    for (int j = lo + 1; j < i; ++j)
      if (!g.has_edge(x, order[j]))
        return UmbrellaViolation{order[lo], order[j], x};
  }
  return std::nullopt;
}

ProperIntervalOrdering make_ordering(const Graph &g, std::vector<Vertex> order) {
  if (verify_umbrella(g, order))
    throw contract_violation("order violates the umbrella property");
  ProperIntervalOrdering o;
  o.position = positions_of(g, order);
  const int n = static_cast<int>(order.size());
  o.left_reach.resize(n);
  o.right_reach.resize(n);
  for (int i = 0; i < n; ++i) {
    int lo = i, hi = i;
    for (Vertex u : g.adjacent(order[i])) {
      lo = std::min(lo, o.position[u]);
      hi = std::max(hi, o.position[u]);
    }
    o.left_reach[i] = lo;
    o.right_reach[i] = hi;
  }
  o.order = std::move(order);
  return o;
}

std::vector<Vertex> lexbfs(const Graph &g, std::span<const Vertex> vertices, Vertex start,
                           std::span<const int> tie_rank) {
  std::vector<std::vector<Vertex>> slices;
  if (!vertices.empty())
    slices.emplace_back(vertices.begin(), vertices.end());
  std::vector<Vertex> out;
  out.reserve(vertices.size());
  bool first = true;
  while (!slices.empty()) {
    auto &head = slices.front();
    auto pick = head.begin();
    if (first) {
      pick = std::find(head.begin(), head.end(), start);
      if (pick == head.end())
        throw contract_violation("lexbfs start vertex not in vertex set");
      first = false;
    } else {
      pick = std::min_element(head.begin(), head.end(),
                              [&](Vertex a, Vertex b) { return tie_rank[a] < tie_rank[b]; });
    }
    const Vertex v = *pick;
    head.erase(pick);
    out.push_back(v);

    std::vector<std::vector<Vertex>> refined;
    refined.reserve(slices.size() * 2);
    for (auto &s : slices) {
      std::vector<Vertex> in, out_part;
      for (Vertex u : s)
        (g.has_edge(u, v) ? in : out_part).push_back(u);
      if (!in.empty())
        refined.push_back(std::move(in));
      if (!out_part.empty())
        refined.push_back(std::move(out_part));
    }
    slices = std::move(refined);
  }
  return out;
}

std::vector<Vertex> lexbfs_candidate(const Graph &g) {
  const auto n = g.num_vertices();
  std::vector<int> label_rank(n);
  std::iota(label_rank.begin(), label_rank.end(), 0);

  std::vector<Vertex> result;
  result.reserve(n);
  std::vector<int> rank(n);
  for (const auto &comp : component_vertex_sets(g)) {
    // Sweep 1 starts at the smallest label; sweeps 2 and 3 are LexBFS+:
    // start at the previous sweep's last vertex and break ties towards
    // vertices that came later in it.
    auto sweep = lexbfs(g, comp, comp.front(), label_rank);
    for (int round = 0; round < 2; ++round) {
      for (std::size_t i = 0; i < sweep.size(); ++i)
        rank[sweep[i]] = -static_cast<int>(i);
      sweep = lexbfs(g, comp, sweep.back(), rank);
    }
    result.insert(result.end(), sweep.begin(), sweep.end());
  }
  return result;
}

std::optional<ProperIntervalOrdering> recognize(const Graph &g) {
  auto candidate = lexbfs_candidate(g);
  if (verify_umbrella(g, candidate))
    return std::nullopt;
  return make_ordering(g, std::move(candidate));
}

ProperIntervalOrdering reverse(const ProperIntervalOrdering &o) {
  const int n = static_cast<int>(o.size());
  ProperIntervalOrdering r;
  r.order.assign(o.order.rbegin(), o.order.rend());
  r.position.resize(o.position.size());
  for (int i = 0; i < n; ++i)
    r.position[r.order[i]] = i;
  r.left_reach.resize(n);
  r.right_reach.resize(n);
  for (int i = 0; i < n; ++i) {
    r.left_reach[i] = n - 1 - o.right_reach[n - 1 - i];
    r.right_reach[i] = n - 1 - o.left_reach[n - 1 - i];
  }
  return r;
}

} // namespace stc
