#include "stc/solvers.hpp"

#include "stc/classes.hpp"
#include "stc/errors.hpp"
#include "stc/mwis.hpp"

#include <algorithm>

namespace stc {

std::string_view to_string(SolverKind kind) {
  switch (kind) {
  case SolverKind::oracle:
    return "oracle";
  case SolverKind::pig_dp:
    return "pig-dp";
  case SolverKind::trivially_perfect:
    return "trivially-perfect";
  case SolverKind::bipartite_matching:
    return "bipartite-matching";
  case SolverKind::mixed:
    return "mixed";
  }
  return "unknown";
}

namespace {

// Maps edges of an induced subgraph back to the parent graph by label.
void lift_edges(const Graph &parent, const Graph &part, const std::vector<Edge> &edges,
                std::vector<Edge> &out) {
  for (const Edge &e : edges)
    out.emplace_back(parent.index_of(part.label(e.u)), parent.index_of(part.label(e.v)));
}

SolveResult finish(const Graph &g, std::vector<Edge> strong, SolverKind kind) {
  SolveResult res;
  res.labeling = make_labeling(g, std::move(strong));
  if (auto bad = validate_stc(g, res.labeling))
    throw contract_violation(std::string(to_string(kind)) +
                             " produced a labeling violating strong triadic closure at '" +
                             g.label(bad->v) + "'");
  res.value = res.labeling.value;
  res.solver = kind;
  return res;
}

TwinContraction identity_contraction(const Graph &g) {
  TwinContraction c;
  c.graph = g;
  for (const auto &l : g.labels()) {
    c.partition.classes.push_back({l});
    c.partition.representative.push_back(l);
  }
  return c;
}

// Weighted twin contraction only makes sense on unit-weight input; weighted
// graphs are taken as already contracted.
TwinContraction contract_if_unit(const Graph &g) {
  return g.unit_weights() ? contract_twins(g) : identity_contraction(g);
}

// Prefix-clique recurrence over one block [lo, hi) of a proper interval
// ordering. State (a, b, r): vertices before position a are gone, positions
// a..b form a clique whose edges are all strong, and no strong edge leaves
// a..b towards a position beyond r. An empty prefix is represented as
// (a, a, right_reach(a)).
class PrefixCliqueDp {
public:
  PrefixCliqueDp(const Graph &g, const ProperIntervalOrdering &o, int lo, int hi)
      : o_(o), lo_(lo), hi_(hi) {
    const int n = hi - lo;
    w_.resize(n);
    reach_.resize(n);
    sum_.assign(n + 1, 0);
    sq_.assign(n + 1, 0);
    offset_.assign(n + 1, 0);
    for (int p = 0; p < n; ++p) {
      w_[p] = g.weight(o.order[lo + p]);
      reach_[p] = o.right_reach[lo + p] - lo;
      if (reach_[p] >= n || reach_[p] < p)
        throw contract_violation("ordering block is not closed under neighborhoods");
      sum_[p + 1] = sum_[p] + w_[p];
      sq_[p + 1] = sq_[p] + w_[p] * w_[p];
      const std::int64_t k = reach_[p] - p + 1;
      offset_[p + 1] = offset_[p] + static_cast<std::size_t>(k * k);
    }
    value_.assign(offset_[n], 0);
    choice_.assign(offset_[n], -1);
  }

  std::int64_t solve() {
    const int n = hi_ - lo_;
    for (int a = n - 1; a >= 0; --a)
      for (int r = a; r <= reach_[a]; ++r)
        for (int b = a; b <= r; ++b) {
          const auto at = slot(a, b, r);
          if (b < r) {
            std::int64_t best = -1;
            int arg = -1;
            for (int j = b; j <= r; ++j) {
              const std::int64_t next = j == a ? empty(a + 1) : value_[slot(a + 1, j, r)];
              const std::int64_t v = star(a, j) + next;
              if (v > best) {
                best = v;
                arg = j;
              }
            }
            value_[at] = best;
            choice_[at] = arg;
          } else if (r < n - 1) {
            value_[at] = empty(r + 1) + clique(a, r);
          } else {
            value_[at] = clique(a, b);
          }
        }
    return n == 0 ? 0 : empty(0);
  }

  /// Strong edges of the optimum, as vertices of the ordered graph.
  std::vector<Edge> strong_edges() const {
    std::vector<Edge> out;
    const int n = hi_ - lo_;
    int a = 0, b = 0, r = n > 0 ? reach_[0] : 0;
    while (a < n) {
      if (b < r) {
        const int j = choice_[slot(a, b, r)];
        for (int k = a + 1; k <= j; ++k)
          out.emplace_back(vertex(a), vertex(k));
        if (j == a) {
          ++a;
          if (a < n) {
            b = a;
            r = reach_[a];
          }
        } else {
          ++a;
          b = j;
        }
        continue;
      }
      for (int x = a; x <= b; ++x)
        for (int y = x + 1; y <= b; ++y)
          out.emplace_back(vertex(x), vertex(y));
      a = b + 1;
      if (a < n) {
        b = a;
        r = reach_[a];
      }
    }
    return out;
  }

  std::int64_t states() const { return static_cast<std::int64_t>(value_.size()); }

private:
  std::size_t slot(int a, int b, int r) const {
    const std::size_t k = static_cast<std::size_t>(reach_[a] - a + 1);
    return offset_[a] + static_cast<std::size_t>(b - a) * k + static_cast<std::size_t>(r - a);
  }
  std::int64_t empty(int p) const {
    return p >= hi_ - lo_ ? 0 : value_[slot(p, p, reach_[p])];
  }
  // Weight of the edges from position a to a+1..j.
  std::int64_t star(int a, int j) const { return w_[a] * (sum_[j + 1] - sum_[a + 1]); }
  // Weight of all edges among positions a..b.
  std::int64_t clique(int a, int b) const {
    const std::int64_t s = sum_[b + 1] - sum_[a];
    return (s * s - (sq_[b + 1] - sq_[a])) / 2;
  }
  Vertex vertex(int p) const { return o_.order[lo_ + p]; }

  const ProperIntervalOrdering &o_;
  int lo_, hi_;
  std::vector<std::int64_t> w_, sum_, sq_;
  std::vector<int> reach_;
  std::vector<std::size_t> offset_;
  std::vector<std::int64_t> value_;
  std::vector<int> choice_;
};

} // namespace

SolveResult solve_oracle(const Graph &g, const SolveOptions &opts) {
  if (g.num_edges() > opts.oracle_cap && !opts.force_oracle)
    throw unsupported_error("oracle refuses " + std::to_string(g.num_edges()) +
                            " edges (cap " + std::to_string(opts.oracle_cap) + ")");
  std::vector<Edge> strong;
  std::int64_t branches = 0, components = 0;
  for (const Graph &part : connected_components(g)) {
    if (part.num_edges() == 0)
      continue;
    ++components;
    auto h = build_incompat(part);
    auto mwis = brute_mwis(h, MwisOptions{opts.oracle_cap, true, true});
    branches += static_cast<std::int64_t>(mwis.branches);
    auto lab = labeling_from_independent_set(part, h, mwis.nodes);
    lift_edges(g, part, lab.strong, strong);
  }
  auto res = finish(g, std::move(strong), SolverKind::oracle);
  res.stats["branches"] = branches;
  res.stats["components"] = components;
  res.stats["incompat_nodes"] = static_cast<std::int64_t>(g.num_edges());
  return res;
}

PigDpTrace solve_pig_dp_traced(const Graph &g, bool reverse_ordering) {
  PigDpTrace t;
  t.contraction = contract_if_unit(g);
  const Graph &small = t.contraction.graph;
  auto ordering = recognize(small);
  if (!ordering)
    throw wrong_class_error("graph is not a proper interval graph");
  t.ordering = reverse_ordering ? reverse(*ordering) : std::move(*ordering);

  // Components occupy consecutive blocks of the ordering; a block ends where
  // no earlier vertex reaches past the current position.
  std::vector<Edge> strong_small;
  std::int64_t blocks = 0;
  const int n = static_cast<int>(t.ordering.size());
  int lo = 0, reach = -1;
  for (int p = 0; p < n; ++p) {
    reach = std::max(reach, t.ordering.right_reach[p]);
    if (reach == p) {
      PrefixCliqueDp dp(small, t.ordering, lo, p + 1);
      dp.solve();
      auto edges = dp.strong_edges();
      strong_small.insert(strong_small.end(), edges.begin(), edges.end());
      t.states += dp.states();
      ++blocks;
      lo = p + 1;
    }
  }

  t.contracted_labeling = make_labeling(small, std::move(strong_small));
  if (auto bad = validate_stc(small, t.contracted_labeling))
    throw contract_violation("dynamic program produced an invalid contracted labeling");
  auto expanded = expand_labeling(g, t.contraction, t.contracted_labeling);
  t.result = finish(g, std::move(expanded.strong), SolverKind::pig_dp);
  t.result.stats["dp_states"] = t.states;
  t.result.stats["components"] = blocks;
  t.result.stats["contracted_vertices"] = static_cast<std::int64_t>(small.num_vertices());
  t.result.stats["intra_twin_value"] = t.contraction.intra_twin_value;
  return t;
}

SolveResult solve_pig_dp(const Graph &g) { return solve_pig_dp_traced(g).result; }

SolveResult solve_trivially_perfect(const Graph &g) {
  if (auto q = find_p4_or_c4(g))
    throw wrong_class_error(std::string("graph is not trivially perfect: induced ") +
                            (q->kind == QuartetKind::p4 ? "P4" : "C4") + " on '" +
                            g.label(q->nodes[0]) + "' '" + g.label(q->nodes[1]) + "' '" +
                            g.label(q->nodes[2]) + "' '" + g.label(q->nodes[3]) + "'");
  auto contraction = contract_if_unit(g);
  const Graph &small = contraction.graph;
  auto h = build_incompat(small);
  MwisResult mwis;
  try {
    mwis = cograph_mwis(h.node_weight, h.adj);
  } catch (const contract_violation &) {
    throw contract_violation(
        "internal error: incompatibility graph of a trivially perfect graph has an induced P4");
  }
  auto lab = labeling_from_independent_set(small, h, mwis.nodes);
  auto expanded = expand_labeling(g, contraction, lab);
  auto res = finish(g, std::move(expanded.strong), SolverKind::trivially_perfect);
  res.stats["incompat_nodes"] = static_cast<std::int64_t>(h.size());
  res.stats["contracted_vertices"] = static_cast<std::int64_t>(small.num_vertices());
  res.stats["intra_twin_value"] = contraction.intra_twin_value;
  return res;
}

SolveResult solve_bipartite(const Graph &g) {
  if (!g.unit_weights())
    throw wrong_class_error("matching solver handles unit weights only");
  auto check = check_bipartite(g);
  if (!check.bipartite)
    throw wrong_class_error("graph is not bipartite: odd cycle through '" +
                            g.label(check.odd_cycle.front()) + "'");
  const auto n = g.num_vertices();
  std::vector<Vertex> mate(n, -1);
  std::vector<char> visited;

  // Kuhn's augmenting paths from every color-0 vertex.
  auto augment = [&](auto &&self, Vertex v) -> bool {
    for (Vertex u : g.adjacent(v)) {
      if (visited[u])
        continue;
      visited[u] = 1;
      if (mate[u] < 0 || self(self, mate[u])) {
        mate[u] = v;
        mate[v] = u;
        return true;
      }
    }
    return false;
  };
  std::int64_t augmentations = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (check.color[v] != 0 || mate[v] >= 0)
      continue;
    visited.assign(n, 0);
    if (augment(augment, static_cast<Vertex>(v)))
      ++augmentations;
  }
  std::vector<Edge> strong;
  for (std::size_t v = 0; v < n; ++v)
    if (mate[v] > static_cast<Vertex>(v))
      strong.emplace_back(static_cast<Vertex>(v), mate[v]);
  auto res = finish(g, std::move(strong), SolverKind::bipartite_matching);
  res.stats["augmentations"] = augmentations;
  return res;
}

SolveResult solve_auto(const Graph &g, const SolveOptions &opts) {
  if (is_trivially_perfect(g))
    return solve_trivially_perfect(g);

  std::vector<Edge> strong;
  std::optional<SolverKind> kind;
  std::map<std::string, std::int64_t> stats;
  for (const Graph &part : connected_components(g)) {
    if (part.num_edges() == 0)
      continue;
    SolveResult sub;
    if (recognize(part))
      sub = solve_pig_dp(part);
    else if (part.unit_weights() && check_bipartite(part).bipartite)
      sub = solve_bipartite(part);
    else if (part.num_edges() <= opts.oracle_cap || opts.force_oracle)
      sub = solve_oracle(part, SolveOptions{opts.oracle_cap, true});
    else
      throw unsupported_error("component with " + std::to_string(part.num_edges()) +
                              " edges is not proper interval, trivially perfect or "
                              "bipartite and exceeds the oracle cap of " +
                              std::to_string(opts.oracle_cap));
    if (!kind)
      kind = sub.solver;
    else if (*kind != sub.solver)
      kind = SolverKind::mixed;
    ++stats["components." + std::string(to_string(sub.solver))];
    lift_edges(g, part, sub.labeling.strong, strong);
  }
  auto res = finish(g, std::move(strong), kind.value_or(SolverKind::trivially_perfect));
  res.stats = std::move(stats);
  return res;
}

std::optional<std::array<Vertex, 3>>
consecutive_strong_violation(const Graph &g, const ProperIntervalOrdering &o,
                             const StrongWeakLabeling &lab) {
  std::vector<char> strong(g.num_edges(), 0);
  for (const Edge &e : lab.strong) {
    int id = g.edge_id(e.u, e.v);
    if (id < 0)
      throw input_error("labeling does not belong to this graph");
    strong[id] = 1;
  }
  auto is_strong = [&](Vertex a, Vertex b) {
    int id = g.edge_id(a, b);
    return id >= 0 && strong[id];
  };
  const int n = static_cast<int>(o.size());
  for (int x = 0; x < n; ++x)
    for (int z = x + 2; z < n; ++z) {
      if (!is_strong(o.order[x], o.order[z]))
        continue;
      for (int y = x + 1; y < z; ++y)
        if (!is_strong(o.order[x], o.order[y]) || !is_strong(o.order[y], o.order[z]))
          return std::array<Vertex, 3>{o.order[x], o.order[y], o.order[z]};
    }
  return std::nullopt;
}

} // namespace stc
