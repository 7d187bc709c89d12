#include "stc/classes.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace stc {

namespace {

// Classifies the subgraph induced by q; fills `out` in pattern order.
template <class Adj>
std::optional<QuartetKind> classify(const std::array<int, 4> &q, Adj &&adj,
                                    std::array<int, 4> &out) {
  int deg[4] = {0, 0, 0, 0};
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (adj(q[i], q[j])) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
  auto neighbor_in = [&](int i, int skip) {
    for (int j = 0; j < 4; ++j)
      if (j != i && j != skip && adj(q[i], q[j]))
        return j;
    return -1;
  };
  if (edges == 3 && std::count(deg, deg + 4, 1) == 2 && std::count(deg, deg + 4, 2) == 2) {
    int a = static_cast<int>(std::find(deg, deg + 4, 1) - deg);
    int b = neighbor_in(a, -1);
    int c = neighbor_in(b, a);
    int d = neighbor_in(c, b);
    out = {q[a], q[b], q[c], q[d]};
    return QuartetKind::p4;
  }
  if (edges == 4 && std::all_of(deg, deg + 4, [](int d) { return d == 2; })) {
    int b = neighbor_in(0, -1);
    int c = neighbor_in(b, 0);
    int d = neighbor_in(c, b);
    out = {q[0], q[b], q[c], q[d]};
    return QuartetKind::c4;
  }
  if (edges == 2 && std::all_of(deg, deg + 4, [](int d) { return d == 1; })) {
    int b = neighbor_in(0, -1);
    std::array<int, 2> rest{};
    int k = 0;
    for (int j = 1; j < 4; ++j)
      if (j != b)
        rest[k++] = j;
    out = {q[0], q[b], q[rest[0]], q[rest[1]]};
    return QuartetKind::two_k2;
  }
  return std::nullopt;
}

template <class Adj, class Accept>
std::optional<Quartet> scan_quartets(int n, Adj &&adj, Accept &&accept) {
  std::array<int, 4> out{};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          auto kind = classify({a, b, c, d}, adj, out);
          if (kind && accept(*kind))
            return Quartet{*kind, out};
        }
  return std::nullopt;
}

} // namespace

std::optional<Quartet> find_p4_or_c4(const Graph &g) {
  return scan_quartets(
      static_cast<int>(g.num_vertices()), [&](int a, int b) { return g.has_edge(a, b); },
      [](QuartetKind k) { return k != QuartetKind::two_k2; });
}

std::optional<std::array<int, 4>> find_induced_p4(const std::vector<std::vector<int>> &adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int u : adj[i])
      m[static_cast<std::size_t>(i) * n + u] = 1;
  auto q = scan_quartets(
      n, [&](int a, int b) { return m[static_cast<std::size_t>(a) * n + b] != 0; },
      [](QuartetKind k) { return k == QuartetKind::p4; });
  if (!q)
    return std::nullopt;
  return q->nodes;
}

bool is_trivially_perfect(const Graph &g) { return !find_p4_or_c4(g); }

BipartiteCheck check_bipartite(const Graph &g) {
  const auto n = g.num_vertices();
  BipartiteCheck res;
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] >= 0)
      continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(static_cast<Vertex>(s));
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex u : g.adjacent(v)) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          parent[u] = v;
          depth[u] = depth[v] + 1;
          q.push(u);
        } else if (color[u] == color[v]) {
          // Walk both tree paths up to their meeting point.
          std::vector<Vertex> left{v}, right{u};
          Vertex a = v, b = u;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          res.odd_cycle = left;
          res.odd_cycle.insert(res.odd_cycle.end(), right.rbegin(), right.rend());
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  res.color = std::move(color);
  return res;
}

std::optional<SplitPartition> split_partition(const Graph &g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<Vertex> byd(n);
  std::iota(byd.begin(), byd.end(), 0);
  std::stable_sort(byd.begin(), byd.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(g.degree(byd[i])) >= i)
      m = i + 1;
  SplitPartition sp;
  sp.clique.assign(byd.begin(), byd.begin() + m);
  sp.independent.assign(byd.begin() + m, byd.end());
  for (std::size_t i = 0; i < sp.clique.size(); ++i)
    for (std::size_t j = i + 1; j < sp.clique.size(); ++j)
      if (!g.has_edge(sp.clique[i], sp.clique[j]))
        return std::nullopt;
  for (std::size_t i = 0; i < sp.independent.size(); ++i)
    for (std::size_t j = i + 1; j < sp.independent.size(); ++j)
      if (g.has_edge(sp.independent[i], sp.independent[j]))
        return std::nullopt;
  std::sort(sp.clique.begin(), sp.clique.end());
  std::sort(sp.independent.begin(), sp.independent.end());
  return sp;
}

std::optional<std::vector<Vertex>> split_obstruction(const Graph &g) {
  const int n = static_cast<int>(g.num_vertices());
  auto adj = [&](int a, int b) { return g.has_edge(a, b); };
  if (auto q = scan_quartets(n, adj, [](QuartetKind k) { return k != QuartetKind::p4; }))
    return std::vector<Vertex>(q->nodes.begin(), q->nodes.end());
  // Induced C5: five vertices, five edges, all of degree two.
  int pick[5];
  for (pick[0] = 0; pick[0] < n; ++pick[0])
    for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1])
      for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2])
        for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3])
          for (pick[4] = pick[3] + 1; pick[4] < n; ++pick[4]) {
            int deg[5] = {0, 0, 0, 0, 0};
            for (int i = 0; i < 5; ++i)
              for (int j = i + 1; j < 5; ++j)
                if (adj(pick[i], pick[j])) {
                  ++deg[i];
                  ++deg[j];
                }
            if (!std::all_of(deg, deg + 5, [](int d) { return d == 2; }))
              continue;
            std::vector<Vertex> cycle{pick[0]};
            std::vector<char> used(5, 0);
            used[0] = 1;
            for (int step = 1; step < 5; ++step)
              for (int j = 0; j < 5; ++j)
                if (!used[j] && adj(cycle.back(), pick[j])) {
                  used[j] = 1;
                  cycle.push_back(pick[j]);
                  break;
                }
            return cycle;
          }
  return std::nullopt;
}

} // namespace stc
