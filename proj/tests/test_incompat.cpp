#include "helpers.hpp"
#include "oracles.hpp"

#include "stc/errors.hpp"
#include "stc/incompat.hpp"
#include "stc/solvers.hpp"

#include <doctest.h>

#include <random>

using namespace stc;

namespace {

Edge E(const Graph &g, const char *a, const char *b) { return Edge(g.index_of(a), g.index_of(b)); }

std::vector<char> mask_of(const Graph &g, const StrongWeakLabeling &lab) {
  std::vector<char> m(g.num_edges(), 0);
  for (const Edge &e : lab.strong)
    m[g.edge_id(e.u, e.v)] = 1;
  return m;
}

} // namespace

TEST_SUITE("incompat") {

TEST_CASE("build_incompat examples") {
  Graph p3 = G(k_p3);
  auto h = build_incompat(p3);
  CHECK(h.size() == 2);
  CHECK(h.conflicts == std::vector<std::pair<int, int>>{{0, 1}});

  CHECK(build_incompat(G(k_k3)).conflicts.empty());
  CHECK(build_incompat(G(k_k3)).size() == 3);

  auto c4 = build_incompat(G(k_c4));
  CHECK(c4.size() == 4);
  CHECK(c4.conflicts.size() == 4);
  for (const auto &nb : c4.adj)
    CHECK(nb.size() == 2);

  Graph w(L({"a", "b", "c"}), {{"a", "b"}, {"b", "c"}}, {2, 3, 5});
  CHECK(build_incompat(w).node_weight == std::vector<std::int64_t>{6, 15});
}

TEST_CASE("conflicts match open wedges and line graph on triangle-free graphs") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(n, 0.5, rng);
    auto h = build_incompat(g);
    CHECK(h.conflicts == oracle::open_wedge_pairs(g));
    for (std::size_t a = 0; a < h.size(); ++a) {
      CHECK(std::is_sorted(h.adj[a].begin(), h.adj[a].end()));
      for (int b : h.adj[a]) {
        CHECK(b != static_cast<int>(a));
        CHECK(h.conflict(b, static_cast<int>(a)));
        const Edge &x = h.nodes[a], &y = h.nodes[b];
        const int shared = (x.u == y.u) + (x.u == y.v) + (x.v == y.u) + (x.v == y.v);
        CHECK(shared == 1);
      }
    }
  }
  // bipartite: every pair of incident edges conflicts
  Graph c6 = G(k_c6);
  auto h = build_incompat(c6);
  std::size_t line_edges = 0;
  for (std::size_t v = 0; v < c6.num_vertices(); ++v)
    line_edges += c6.degree(static_cast<Vertex>(v)) * (c6.degree(static_cast<Vertex>(v)) - 1) / 2;
  CHECK(h.conflicts.size() == line_edges);
}

TEST_CASE("validate_stc examples") {
  Graph p3 = G(k_p3);
  auto bad = validate_stc(p3, make_labeling(p3, {E(p3, "a", "b"), E(p3, "b", "c")}));
  REQUIRE(bad);
  CHECK(p3.label(bad->u) == "a");
  CHECK(p3.label(bad->v) == "b");
  CHECK(p3.label(bad->w) == "c");

  Graph bow = G(k_bowtie);
  CHECK_FALSE(validate_stc(bow, make_labeling(bow, {})));
  auto ok = make_labeling(bow, {E(bow, "a", "b"), E(bow, "a", "c"), E(bow, "b", "c"),
                                E(bow, "d", "e")});
  CHECK_FALSE(validate_stc(bow, ok));
  CHECK(ok.value == 4);
}

TEST_CASE("validate_stc rejects labelings that do not partition E") {
  Graph p3 = G(k_p3);
  StrongWeakLabeling lab;
  lab.strong = {E(p3, "a", "b")};
  CHECK_THROWS_AS(validate_stc(p3, lab), input_error);
  lab.weak = {E(p3, "a", "b"), E(p3, "b", "c")};
  CHECK_THROWS_AS(validate_stc(p3, lab), input_error);
  lab.strong = {Edge(0, 2)};
  lab.weak = {E(p3, "a", "b"), E(p3, "b", "c")};
  CHECK_THROWS_AS(validate_stc(p3, lab), input_error);
  CHECK_THROWS_AS(make_labeling(p3, {Edge(0, 2)}), input_error);
  CHECK_THROWS_AS(make_labeling(p3, {E(p3, "a", "b"), E(p3, "a", "b")}), input_error);
}

TEST_CASE("labeling_from_independent_set") {
  Graph c4 = G(k_c4);
  auto h = build_incompat(c4);
  // nodes: ab, ad, bc, cd -> ab and cd are opposite
  std::vector<int> s{0, 3};
  auto lab = labeling_from_independent_set(c4, h, s);
  CHECK(lab.value == 2);
  CHECK_FALSE(validate_stc(c4, lab));
  CHECK(labeling_from_independent_set(c4, h, std::vector<int>{}).value == 0);
  CHECK_THROWS_AS(labeling_from_independent_set(c4, h, std::vector<int>{0, 1}),
                  contract_violation);

  Graph k3 = G(k_k3);
  auto all = labeling_from_independent_set(k3, build_incompat(k3), std::vector<int>{0, 1, 2});
  CHECK(all.value == 3);
  CHECK(independent_set_from_labeling(k3, all) == std::vector<int>{0, 1, 2});
}

TEST_CASE("expand_labeling examples") {
  Graph k4 = G(k_k4);
  auto ct = contract_twins(k4);
  auto lab = expand_labeling(k4, ct, make_labeling(ct.graph, {}));
  CHECK(lab.value == 6);
  CHECK(lab.strong.size() == 6);

  Graph c4 = G(k_c4);
  auto c4t = contract_twins(c4);
  auto c4lab = make_labeling(c4t.graph, {E(c4t.graph, "a", "b"), E(c4t.graph, "c", "d")});
  auto same = expand_labeling(c4, c4t, c4lab);
  CHECK(same.strong == c4lab.strong);
  CHECK(same.value == 2);

  Graph bow = G(k_bowtie);
  auto bt = contract_twins(bow);
  auto small = make_labeling(bt.graph, {E(bt.graph, "a", "c")});
  CHECK(small.value == 2);
  auto big = expand_labeling(bow, bt, small);
  CHECK(big.value == 4);
  CHECK_FALSE(validate_stc(bow, big));
  CHECK(oracle::max_stc(bow) == 4);
}

TEST_CASE("expand_labeling rejects inconsistent inputs") {
  Graph bow = G(k_bowtie);
  auto bt = contract_twins(bow);
  auto other = contract_twins(G(k_k4));
  CHECK_THROWS_AS(expand_labeling(bow, other, make_labeling(other.graph, {})), input_error);
}

TEST_CASE("valid labelings are exactly the independent sets on small graphs") {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 150; ++round) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Graph g = oracle::random_graph(n, 0.55, rng);
    const int m = static_cast<int>(g.num_edges());
    auto h = build_incompat(g);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<Edge> strong;
      std::vector<char> bits(m);
      for (int i = 0; i < m; ++i)
        if ((bits[i] = (mask >> i) & 1))
          strong.push_back(g.edges()[i]);
      auto lab = make_labeling(g, strong);
      CHECK(mask_of(g, lab) == bits);
      bool independent = true;
      for (auto [a, b] : h.conflicts)
        independent = independent && !(bits[a] && bits[b]);
      const bool valid = !validate_stc(g, lab);
      CHECK(valid == independent);
      CHECK(valid == oracle::stc_holds(g, bits));
    }
  }
}

}
