#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace oracle {

using stc::Edge;
using stc::Vertex;

std::vector<std::pair<int, int>> open_wedge_pairs(const Graph &g) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(g.num_vertices());
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (a == c || b == c)
          continue;
        if (g.has_edge(a, c) && g.has_edge(b, c) && !g.has_edge(a, b)) {
          int x = g.edge_id(a, c), y = g.edge_id(b, c);
          out.emplace_back(std::min(x, y), std::max(x, y));
        }
      }
  std::sort(out.begin(), out.end());
  return out;
}

bool stc_holds(const Graph &g, const std::vector<char> &strong) {
  const int n = static_cast<int>(g.num_vertices());
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (a == c || b == c || g.has_edge(a, b))
          continue;
        int x = g.edge_id(a, c), y = g.edge_id(b, c);
        if (x >= 0 && y >= 0 && strong[x] && strong[y])
          return false;
      }
  return true;
}

std::int64_t max_stc(const Graph &g) {
  const int m = static_cast<int>(g.num_edges());
  std::vector<std::vector<int>> earlier(m);
  for (auto [a, b] : open_wedge_pairs(g))
    earlier[b].push_back(a);
  std::vector<std::int64_t> w(m), suffix(m + 1, 0);
  for (int i = 0; i < m; ++i)
    w[i] = g.edge_weight(g.edges()[i]);
  for (int i = m - 1; i >= 0; --i)
    suffix[i] = suffix[i + 1] + w[i];

  std::vector<char> chosen(m, 0);
  std::int64_t best = 0;
  std::function<void(int, std::int64_t)> go = [&](int i, std::int64_t value) {
    if (value + suffix[i] <= best)
      return;
    if (i == m) {
      best = value;
      return;
    }
    bool ok = std::none_of(earlier[i].begin(), earlier[i].end(), [&](int j) { return chosen[j]; });
    if (ok) {
      chosen[i] = 1;
      go(i + 1, value + w[i]);
      chosen[i] = 0;
    }
    go(i + 1, value);
  };
  go(0, 0);
  return best;
}

std::int64_t max_stc_enumerate(const Graph &g) {
  const int m = static_cast<int>(g.num_edges());
  std::int64_t best = 0;
  std::vector<char> strong(m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::int64_t value = 0;
    for (int i = 0; i < m; ++i) {
      strong[i] = (mask >> i) & 1;
      if (strong[i])
        value += g.edge_weight(g.edges()[i]);
    }
    if (value > best && stc_holds(g, strong))
      best = value;
  }
  return best;
}

bool umbrella_holds(const Graph &g, const std::vector<int> &order) {
  const int n = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (g.has_edge(order[i], order[k]) &&
            (!g.has_edge(order[i], order[j]) || !g.has_edge(order[j], order[k])))
          return false;
  return true;
}

bool proper_interval_exhaustive(const Graph &g) {
  std::vector<int> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  do {
    if (umbrella_holds(g, order))
      return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

std::int64_t mwis_subsets(const std::vector<std::int64_t> &w,
                          const std::vector<std::vector<int>> &adj) {
  const int n = static_cast<int>(w.size());
  std::vector<std::uint32_t> nb(n, 0);
  for (int i = 0; i < n; ++i)
    for (int u : adj[i])
      nb[i] |= 1u << u;
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::int64_t value = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if ((mask >> i) & 1) {
        ok = (nb[i] & mask) == 0;
        value += w[i];
      }
    if (ok)
      best = std::max(best, value);
  }
  return best;
}

namespace {

bool is_path4(const std::vector<std::vector<char>> &m, const std::array<int, 4> &q) {
  std::array<int, 4> p = q;
  std::sort(p.begin(), p.end());
  do {
    if (m[p[0]][p[1]] && m[p[1]][p[2]] && m[p[2]][p[3]] && !m[p[0]][p[2]] && !m[p[1]][p[3]] &&
        !m[p[0]][p[3]])
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool is_cycle4(const std::vector<std::vector<char>> &m, const std::array<int, 4> &q) {
  std::array<int, 4> p = q;
  std::sort(p.begin(), p.end());
  do {
    if (m[p[0]][p[1]] && m[p[1]][p[2]] && m[p[2]][p[3]] && m[p[3]][p[0]] && !m[p[0]][p[2]] &&
        !m[p[1]][p[3]])
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

template <class F> bool any_quartet(int n, F &&f) {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (f(std::array<int, 4>{a, b, c, d}))
            return true;
  return false;
}

} // namespace

bool has_induced_p4(const std::vector<std::vector<int>> &adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int u : adj[i])
      m[i][u] = 1;
  return any_quartet(n, [&](const auto &q) { return is_path4(m, q); });
}

bool has_induced_p4_or_c4(const Graph &g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (const Edge &e : g.edges())
    m[e.u][e.v] = m[e.v][e.u] = 1;
  return any_quartet(n, [&](const auto &q) { return is_path4(m, q) || is_cycle4(m, q); });
}

int max_matching(const Graph &g) {
  const auto &edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<char> used(g.num_vertices(), 0);
  int best = 0;
  std::function<void(int, int)> go = [&](int i, int size) {
    best = std::max(best, size);
    if (i == m || size + (m - i) <= best)
      return;
    const Edge &e = edges[i];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      go(i + 1, size + 1);
      used[e.u] = used[e.v] = 0;
    }
    go(i + 1, size);
  };
  go(0, 0);
  return best;
}

int max_packing(const std::vector<std::array<int, 3>> &triplets) {
  const int t = static_cast<int>(triplets.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
    std::set<int> seen;
    int count = 0;
    bool ok = true;
    for (int i = 0; i < t && ok; ++i)
      if ((mask >> i) & 1) {
        ++count;
        for (int x : triplets[i])
          ok = ok && seen.insert(x).second;
      }
    if (ok)
      best = std::max(best, count);
  }
  return best;
}

bool true_twins(const Graph &g, Vertex u, Vertex v) {
  if (u == v)
    return true;
  if (!g.has_edge(u, v))
    return false;
  auto closed = [&](Vertex x) {
    std::set<std::string> s;
    s.insert(g.label(x));
    for (Vertex y : g.adjacent(x))
      s.insert(g.label(y));
    return s;
  };
  return closed(u) == closed(v);
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back("v" + std::to_string(i));
  std::vector<stc::LabelPair> lp;
  for (auto [a, b] : edges)
    lp.emplace_back(labels[a], labels[b]);
  return Graph(labels, lp);
}

Graph random_graph(int n, double p, std::mt19937_64 &rng) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (static_cast<double>(rng() >> 11) * 0x1p-53 < p)
        edges.emplace_back(a, b);
  return graph_from_edges(n, edges);
}

namespace {

using Matrix = std::vector<std::vector<char>>;

std::uint64_t code_of(const Matrix &m, const std::vector<int> &perm) {
  const int n = static_cast<int>(perm.size());
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      code = (code << 1) | static_cast<std::uint64_t>(m[perm[i]][perm[j]]);
  return code;
}

// Smallest adjacency code over vertex orders that list colour classes of a
// stable colour refinement in colour order.
std::uint64_t canonical_code(const Matrix &m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v)
    colour[v] = static_cast<int>(std::count(m[v].begin(), m[v].end(), 1));
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int u = 0; u < n; ++u)
        if (m[v][u])
          sig[v].second.push_back(colour[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                 sorted.begin());
    const int before = static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
    colour = next;
    if (static_cast<int>(sorted.size()) == before)
      break;
  }

  std::vector<int> slots(n);
  std::iota(slots.begin(), slots.end(), 0);
  std::stable_sort(slots.begin(), slots.end(), [&](int a, int b) { return colour[a] < colour[b]; });
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(int)> place = [&](int pos) {
    if (pos == n) {
      best = std::min(best, code_of(m, perm));
      return;
    }
    const int want = colour[slots[pos]];
    for (int v = 0; v < n; ++v)
      if (!used[v] && colour[v] == want) {
        used[v] = 1;
        perm[pos] = v;
        place(pos + 1);
        used[v] = 0;
      }
  };
  place(0);
  return best;
}

} // namespace

std::vector<Graph> connected_graphs_up_to_iso(int max_edges) {
  std::vector<Graph> out;
  if (max_edges < 1)
    return out;
  std::vector<Matrix> level{Matrix{{0, 1}, {1, 0}}};
  for (int m = 1;; ++m) {
    for (const Matrix &mat : level) {
      const int n = static_cast<int>(mat.size());
      std::vector<std::pair<int, int>> edges;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (mat[a][b])
            edges.emplace_back(a, b);
      out.push_back(graph_from_edges(n, edges));
    }
    if (m == max_edges)
      break;
    std::set<std::pair<int, std::uint64_t>> seen;
    std::vector<Matrix> next;
    auto offer = [&](Matrix mat) {
      const int n = static_cast<int>(mat.size());
      if (seen.insert({n, canonical_code(mat)}).second)
        next.push_back(std::move(mat));
    };
    for (const Matrix &mat : level) {
      const int n = static_cast<int>(mat.size());
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (!mat[a][b]) {
            Matrix x = mat;
            x[a][b] = x[b][a] = 1;
            offer(std::move(x));
          }
      for (int a = 0; a < n; ++a) {
        Matrix x = mat;
        for (auto &row : x)
          row.push_back(0);
        x.emplace_back(n + 1, 0);
        x[a][n] = x[n][a] = 1;
        offer(std::move(x));
      }
    }
    level = std::move(next);
  }
  return out;
}

} // namespace oracle
