#pragma once

#include "stc/graph.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace stc {

/// 3-Set Packing: universe {1..universe_size}, a family of 3-element
/// subsets, and a target k.
struct SetPackingInstance {
  int universe_size = 0;
  std::vector<std::array<int, 3>> triplets;
  int k = 0;
};

/// Throws input_error unless every triplet has three distinct in-range
/// elements and no triplet repeats.
void validate(const SetPackingInstance &sp);

/// Largest pairwise disjoint subfamily (exhaustive).
int max_set_packing(const SetPackingInstance &sp);

struct SplitInstance {
  Graph graph;
  std::vector<std::string> clique_side;
  std::vector<std::string> independent_side;
};

/// Clique side is a clique, independent side is independent, together they
/// partition the vertices.
bool is_split_partition(const SplitInstance &si);

/// Clique on the universe ("c1".."cn"); one independent vertex "w<i>" per
/// triplet, adjacent to every clique vertex outside its triplet.
SplitInstance gen_disjointnn_from_3sp(const SetPackingInstance &sp);

/// Clique vertices an independent-side vertex does not see, sorted.
std::vector<std::string> non_neighbors_in_clique(const SplitInstance &si, const std::string &w);

struct DisjointNNResult {
  int size = 0;
  std::vector<std::string> witness; // sorted independent-side labels
};

/// Largest set of independent-side vertices with pairwise disjoint clique
/// non-neighborhoods. Requires each to miss exactly three clique vertices
/// and at most `cap` independent vertices.
DisjointNNResult brute_disjointnn(const SplitInstance &si, std::size_t cap = 20);

/// n(2n-1) + floor(n/2) + ceil(k/2).
std::int64_t stc_threshold(int n, int k);

struct StcReduction {
  SplitInstance instance;
  int n = 0; // clique size of the source instance

  std::int64_t threshold(int k) const { return stc_threshold(n, k); }
  /// (k, threshold(k)) for k = 0..|source independent side|.
  std::vector<std::pair<int, std::int64_t>> threshold_table() const;
  int source_independent = 0;
};

/// Adds clique vertices y1..yn and independent vertices x1..xn; y_i sees
/// everything except x_i, x_i sees the whole clique except y_i. Throws
/// input_error unless every independent vertex misses exactly three clique
/// vertices.
StcReduction gen_maxstc_from_disjointnn(const SplitInstance &si);

struct CertificationRow {
  int k = 0;
  std::int64_t threshold = 0;
  bool stc_reaches = false;     // optimum >= threshold(k)
  bool packing_reaches = false; // disjoint non-neighborhood size >= k
};

struct CertificationReport {
  int set_packing = 0;
  int disjointnn = 0;
  std::int64_t optimum = 0; // MaxSTC of the reduced graph
  std::size_t reduced_vertices = 0;
  std::size_t reduced_edges = 0;
  std::vector<CertificationRow> rows;
  /// Set packing size equals the disjoint non-neighborhood size.
  bool packing_equivalent = false;
  /// stc_reaches == packing_reaches on every row.
  bool threshold_equivalent = false;
};

/// Builds both reductions and solves everything exactly. Throws
/// unsupported_error when the reduced graph has more than `edge_cap` edges.
CertificationReport certify_reduction(const SetPackingInstance &sp, std::size_t edge_cap = 400);

/// Intersection graph of n closed intervals of a common integer length with
/// seeded random integer left endpoints. `spread` scales the range of the
/// endpoints relative to n; smaller is denser.
Graph gen_random_proper_interval(int n, std::uint64_t seed, double spread = 0.5);

/// Comparability graph of a random rooted forest, i.e. built from single
/// vertices by disjoint unions and adding universal vertices.
Graph gen_random_trivially_perfect(int n, std::uint64_t seed);

/// Random bipartite graph with the given edge probability between sides.
Graph gen_random_bipartite(int n, std::uint64_t seed, double edge_probability = 0.4);

} // namespace stc
