#include "helpers.hpp"
#include "oracles.hpp"

#include "stc/classes.hpp"
#include "stc/reductions.hpp"

#include <doctest.h>

#include <random>

using namespace stc;

TEST_SUITE("classes") {

TEST_CASE("quartet scan") {
  auto p4 = find_p4_or_c4(G(k_p4));
  REQUIRE(p4);
  CHECK(p4->kind == QuartetKind::p4);
  auto c4 = find_p4_or_c4(G(k_c4));
  REQUIRE(c4);
  CHECK(c4->kind == QuartetKind::c4);
  CHECK(is_trivially_perfect(G(k_claw)));
  CHECK(is_trivially_perfect(G(k_k4)));
  CHECK_FALSE(is_trivially_perfect(G(k_p4)));

  std::mt19937_64 rng(41);
  for (int round = 0; round < 300; ++round) {
    Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 8), 0.5, rng);
    CHECK(is_trivially_perfect(g) == !oracle::has_induced_p4_or_c4(g));
  }
}

TEST_CASE("bipartite check with odd cycle witness") {
  auto c6 = check_bipartite(G(k_c6));
  CHECK(c6.bipartite);
  auto k3 = check_bipartite(G(k_k3));
  CHECK_FALSE(k3.bipartite);
  CHECK(k3.odd_cycle.size() == 3);

  std::mt19937_64 rng(42);
  for (int round = 0; round < 300; ++round) {
    Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 9), 0.3, rng);
    auto bc = check_bipartite(g);
    if (bc.bipartite) {
      for (const Edge &e : g.edges())
        CHECK(bc.color[e.u] != bc.color[e.v]);
    } else {
      const auto &c = bc.odd_cycle;
      CHECK(c.size() % 2 == 1);
      for (std::size_t i = 0; i < c.size(); ++i)
        CHECK(g.has_edge(c[i], c[(i + 1) % c.size()]));
    }
  }
}

TEST_CASE("split partition and obstructions") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(n, 0.5, rng);
    auto sp = split_partition(g);
    // brute: some subset is a clique whose complement is independent
    bool brute = false;
    for (std::uint32_t mask = 0; mask < (1u << n) && !brute; ++mask) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = a + 1; b < n && ok; ++b) {
          const bool ia = (mask >> a) & 1, ib = (mask >> b) & 1;
          if (ia && ib && !g.has_edge(a, b))
            ok = false;
          if (!ia && !ib && g.has_edge(a, b))
            ok = false;
        }
      brute = ok;
    }
    CHECK(sp.has_value() == brute);
    auto obs = split_obstruction(g);
    CHECK(obs.has_value() == !brute);
    if (sp) {
      for (std::size_t i = 0; i < sp->clique.size(); ++i)
        for (std::size_t j = i + 1; j < sp->clique.size(); ++j)
          CHECK(g.has_edge(sp->clique[i], sp->clique[j]));
      for (std::size_t i = 0; i < sp->independent.size(); ++i)
        for (std::size_t j = i + 1; j < sp->independent.size(); ++j)
          CHECK_FALSE(g.has_edge(sp->independent[i], sp->independent[j]));
      CHECK(sp->clique.size() + sp->independent.size() == g.num_vertices());
    }
  }
}

TEST_CASE("generators stay in class") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph tp = gen_random_trivially_perfect(10, seed);
    CHECK(tp.num_vertices() == 10);
    CHECK_FALSE(oracle::has_induced_p4_or_c4(tp));
    Graph bip = gen_random_bipartite(10, seed);
    CHECK(check_bipartite(bip).bipartite);
  }
  CHECK(gen_random_trivially_perfect(1, 3).num_vertices() == 1);
  CHECK(gen_random_proper_interval(0, 1).num_vertices() == 0);
  // union of two K2 plus a universal vertex
  CHECK(is_trivially_perfect(G("a b\nc d\nu a\nu b\nu c\nu d\n")));
}

}
