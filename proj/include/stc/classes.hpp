#pragma once

#include "stc/graph.hpp"

#include <array>
#include <optional>
#include <vector>

namespace stc {

enum class QuartetKind { p4, c4, two_k2 };

/// Four vertices inducing a forbidden pattern. For P4 and C4 the vertices are
/// listed along the path / cycle; for 2K2 as the two edges (a b) (c d).
struct Quartet {
  QuartetKind kind;
  std::array<int, 4> nodes;
};

/// First induced P4 or C4 in index order (quartet scan).
std::optional<Quartet> find_p4_or_c4(const Graph &g);

/// First induced P4 of an arbitrary graph given by symmetric adjacency
/// lists (quartet scan).
std::optional<std::array<int, 4>> find_induced_p4(const std::vector<std::vector<int>> &adj);

/// (P4, C4)-free.
bool is_trivially_perfect(const Graph &g);

struct BipartiteCheck {
  bool bipartite = false;
  std::vector<int> color;         // 0/1 per vertex when bipartite
  std::vector<Vertex> odd_cycle;  // closed walk witness otherwise
};

BipartiteCheck check_bipartite(const Graph &g);

struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
};

/// Split partition by the degree-sequence test, verified before returning.
std::optional<SplitPartition> split_partition(const Graph &g);

/// Induced 2K2, C4 or C5 (split obstructions), listed along the pattern.
std::optional<std::vector<Vertex>> split_obstruction(const Graph &g);

} // namespace stc
