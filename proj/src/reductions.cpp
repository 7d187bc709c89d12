#include "stc/reductions.hpp"

#include "stc/errors.hpp"
#include "stc/incompat.hpp"
#include "stc/mwis.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

namespace stc {

void validate(const SetPackingInstance &sp) {
  if (sp.universe_size < 0)
    throw input_error("universe size must be non-negative");
  std::set<std::array<int, 3>> seen;
  for (auto t : sp.triplets) {
    for (int x : t)
      if (x < 1 || x > sp.universe_size)
        throw input_error("triplet element " + std::to_string(x) + " outside 1.." +
                          std::to_string(sp.universe_size));
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
      throw input_error("triplet elements must be distinct");
    if (!seen.insert(t).second)
      throw input_error("triplet listed twice");
  }
}

int max_set_packing(const SetPackingInstance &sp) {
  validate(sp);
  const int m = static_cast<int>(sp.triplets.size());
  int best = 0;
  std::vector<char> used(sp.universe_size + 1, 0);
  auto dfs = [&](auto &&self, int i, int size) -> void {
    best = std::max(best, size);
    if (i == m || size + (m - i) <= best)
      return;
    const auto &t = sp.triplets[i];
    if (!used[t[0]] && !used[t[1]] && !used[t[2]]) {
      for (int x : t)
        used[x] = 1;
      self(self, i + 1, size + 1);
      for (int x : t)
        used[x] = 0;
    }
    self(self, i + 1, size);
  };
  dfs(dfs, 0, 0);
  return best;
}

bool is_split_partition(const SplitInstance &si) {
  const Graph &g = si.graph;
  std::vector<int> side(g.num_vertices(), -1);
  std::vector<Vertex> c, in;
  for (const auto &l : si.clique_side) {
    auto v = g.find(l);
    if (!v || side[*v] >= 0)
      return false;
    side[*v] = 0;
    c.push_back(*v);
  }
  for (const auto &l : si.independent_side) {
    auto v = g.find(l);
    if (!v || side[*v] >= 0)
      return false;
    side[*v] = 1;
    in.push_back(*v);
  }
  if (std::find(side.begin(), side.end(), -1) != side.end())
    return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.has_edge(c[i], c[j]))
        return false;
  for (std::size_t i = 0; i < in.size(); ++i)
    for (std::size_t j = i + 1; j < in.size(); ++j)
      if (g.has_edge(in[i], in[j]))
        return false;
  return true;
}

namespace {

std::string name(char prefix, int i) { return std::string(1, prefix) + std::to_string(i); }

SplitInstance make_split(std::vector<std::string> clique, std::vector<std::string> independent,
                         const std::vector<LabelPair> &edges) {
  std::vector<std::string> all = clique;
  all.insert(all.end(), independent.begin(), independent.end());
  SplitInstance si{Graph(std::move(all), edges), std::move(clique), std::move(independent)};
  std::sort(si.clique_side.begin(), si.clique_side.end());
  std::sort(si.independent_side.begin(), si.independent_side.end());
  if (!is_split_partition(si))
    throw contract_violation("generated graph is not split with the intended partition");
  return si;
}

} // namespace

SplitInstance gen_disjointnn_from_3sp(const SetPackingInstance &sp) {
  validate(sp);
  const int n = sp.universe_size;
  std::vector<std::string> clique, independent;
  std::vector<LabelPair> edges;
  for (int a = 1; a <= n; ++a) {
    clique.push_back(name('c', a));
    for (int b = a + 1; b <= n; ++b)
      edges.emplace_back(name('c', a), name('c', b));
  }
  for (std::size_t i = 0; i < sp.triplets.size(); ++i) {
    const auto &t = sp.triplets[i];
    const auto w = name('w', static_cast<int>(i) + 1);
    independent.push_back(w);
    for (int a = 1; a <= n; ++a)
      if (std::find(t.begin(), t.end(), a) == t.end())
        edges.emplace_back(w, name('c', a));
  }
  return make_split(std::move(clique), std::move(independent), edges);
}

std::vector<std::string> non_neighbors_in_clique(const SplitInstance &si, const std::string &w) {
  const Graph &g = si.graph;
  const Vertex v = g.index_of(w);
  std::vector<std::string> out;
  for (const auto &c : si.clique_side)
    if (!g.has_edge(v, g.index_of(c)))
      out.push_back(c);
  return out;
}

namespace {

std::vector<std::vector<int>> missing_sets(const SplitInstance &si) {
  const Graph &g = si.graph;
  std::vector<std::vector<int>> out;
  for (const auto &w : si.independent_side) {
    const Vertex v = g.index_of(w);
    std::vector<int> miss;
    for (std::size_t i = 0; i < si.clique_side.size(); ++i)
      if (!g.has_edge(v, g.index_of(si.clique_side[i])))
        miss.push_back(static_cast<int>(i));
    if (miss.size() != 3)
      throw input_error("independent vertex '" + w + "' misses " + std::to_string(miss.size()) +
                        " clique vertices; exactly 3 are required");
    out.push_back(std::move(miss));
  }
  return out;
}

} // namespace

DisjointNNResult brute_disjointnn(const SplitInstance &si, std::size_t cap) {
  if (si.independent_side.size() > cap)
    throw unsupported_error("independent side has " + std::to_string(si.independent_side.size()) +
                            " vertices, above the cap of " + std::to_string(cap));
  if (!is_split_partition(si))
    throw input_error("instance is not a split partition");
  const auto miss = missing_sets(si);
  const int m = static_cast<int>(miss.size());
  std::vector<char> used(si.clique_side.size(), 0);
  std::vector<int> current, best;

  // Include-first DFS with strict improvement keeps the lexicographically
  // smallest maximum witness.
  auto dfs = [&](auto &&self, int i) -> void {
    if (current.size() > best.size())
      best = current;
    if (i == m || current.size() + static_cast<std::size_t>(m - i) <= best.size())
      return;
    const auto &b = miss[i];
    if (!used[b[0]] && !used[b[1]] && !used[b[2]]) {
      for (int x : b)
        used[x] = 1;
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
      for (int x : b)
        used[x] = 0;
    }
    self(self, i + 1);
  };
  dfs(dfs, 0);

  DisjointNNResult res;
  res.size = static_cast<int>(best.size());
  for (int i : best)
    res.witness.push_back(si.independent_side[i]);
  return res;
}

std::int64_t stc_threshold(int n, int k) {
  const std::int64_t nn = n;
  return nn * (2 * nn - 1) + nn / 2 + (k + 1) / 2;
}

std::vector<std::pair<int, std::int64_t>> StcReduction::threshold_table() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (int k = 0; k <= source_independent; ++k)
    out.emplace_back(k, threshold(k));
  return out;
}

StcReduction gen_maxstc_from_disjointnn(const SplitInstance &si) {
  if (!is_split_partition(si))
    throw input_error("instance is not a split partition");
  missing_sets(si);
  const Graph &g = si.graph;
  const int n = static_cast<int>(si.clique_side.size());
  for (int i = 1; i <= n; ++i)
    for (char p : {'x', 'y'})
      if (g.find(name(p, i)))
        throw input_error("label '" + name(p, i) + "' already used by the source instance");

  std::vector<LabelPair> edges;
  for (const Edge &e : g.edges())
    edges.push_back(g.edge_labels(e));
  std::vector<std::string> clique = si.clique_side, independent = si.independent_side;
  for (int i = 1; i <= n; ++i) {
    const auto y = name('y', i), x = name('x', i);
    for (const auto &c : si.clique_side) {
      edges.emplace_back(y, c);
      edges.emplace_back(x, c);
    }
    for (int j = 1; j <= n; ++j) {
      if (j > i)
        edges.emplace_back(y, name('y', j));
      if (j != i)
        edges.emplace_back(x, name('y', j));
    }
    for (const auto &w : si.independent_side)
      edges.emplace_back(y, w);
  }
  for (int i = 1; i <= n; ++i) {
    clique.push_back(name('y', i));
    independent.push_back(name('x', i));
  }
  StcReduction red;
  red.instance = make_split(std::move(clique), std::move(independent), edges);
  red.n = n;
  red.source_independent = static_cast<int>(si.independent_side.size());
  return red;
}

CertificationReport certify_reduction(const SetPackingInstance &sp, std::size_t edge_cap) {
  CertificationReport rep;
  rep.set_packing = max_set_packing(sp);
  const auto split = gen_disjointnn_from_3sp(sp);
  rep.disjointnn = brute_disjointnn(split).size;
  rep.packing_equivalent = rep.set_packing == rep.disjointnn;

  const auto red = gen_maxstc_from_disjointnn(split);
  const Graph &g = red.instance.graph;
  rep.reduced_vertices = g.num_vertices();
  rep.reduced_edges = g.num_edges();
  if (g.num_edges() > edge_cap)
    throw unsupported_error("reduced graph has " + std::to_string(g.num_edges()) +
                            " edges, above the certification cap of " + std::to_string(edge_cap));
  const auto h = build_incompat(g);
  rep.optimum = brute_mwis(h, MwisOptions{edge_cap, true, false}).value;

  rep.threshold_equivalent = true;
  for (const auto &[k, t] : red.threshold_table()) {
    CertificationRow row{k, t, rep.optimum >= t, rep.disjointnn >= k};
    rep.threshold_equivalent = rep.threshold_equivalent && row.stc_reaches == row.packing_reaches;
    rep.rows.push_back(row);
  }
  return rep;
}

namespace {

// Portable draws: only the raw engine output is standardized.
std::uint64_t below(std::mt19937_64 &rng, std::uint64_t bound) { return rng() % bound; }
double unit(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<std::string> vertex_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i)
    out.push_back(name('v', i));
  return out;
}

} // namespace

Graph gen_random_proper_interval(int n, std::uint64_t seed, double spread) {
  if (n < 0)
    throw input_error("vertex count must be non-negative");
  constexpr std::int64_t length = 4;
  std::mt19937_64 rng(seed);
  const auto range = static_cast<std::uint64_t>(std::max(0.0, n * length * spread)) + 1;
  std::vector<std::int64_t> left(n);
  for (auto &l : left)
    l = static_cast<std::int64_t>(below(rng, range));
  auto names = vertex_names(n);
  std::vector<LabelPair> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(left[i] - left[j]) <= length)
        edges.emplace_back(names[i], names[j]);
  return Graph(std::move(names), edges);
}

Graph gen_random_trivially_perfect(int n, std::uint64_t seed) {
  if (n < 0)
    throw input_error("vertex count must be non-negative");
  std::mt19937_64 rng(seed);
  // parent[i] < i or -1 for a root; vertices are adjacent iff one is an
  // ancestor of the other.
  std::vector<int> parent(n, -1);
  for (int i = 1; i < n; ++i)
    parent[i] = static_cast<int>(below(rng, static_cast<std::uint64_t>(i) + 1)) - 1;
  auto names = vertex_names(n);
  std::vector<LabelPair> edges;
  for (int i = 0; i < n; ++i)
    for (int a = parent[i]; a >= 0; a = parent[a])
      edges.emplace_back(names[a], names[i]);
  return Graph(std::move(names), edges);
}

Graph gen_random_bipartite(int n, std::uint64_t seed, double edge_probability) {
  if (n < 0)
    throw input_error("vertex count must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<int> side(n);
  for (auto &s : side)
    s = static_cast<int>(below(rng, 2));
  auto names = vertex_names(n);
  std::vector<LabelPair> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (side[i] != side[j] && unit(rng) < edge_probability)
        edges.emplace_back(names[i], names[j]);
  return Graph(std::move(names), edges);
}

} // namespace stc
