#pragma once

#include "stc/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace stc {

/// Vertex ordering with the umbrella property: for positions i < j < k an
/// edge between the vertices at i and k forces edges ij and jk. Positions
/// are 0-based. Reaches are positions; a vertex without neighbors on a side
/// has reach equal to its own position.
struct ProperIntervalOrdering {
  std::vector<Vertex> order;    // position -> vertex
  std::vector<int> position;    // vertex -> position
  std::vector<int> left_reach;  // position -> leftmost neighbor position
  std::vector<int> right_reach; // position -> rightmost neighbor position

  std::size_t size() const { return order.size(); }
};

/// Witness against the umbrella property, in ordering positions x < y < z:
/// xz is an edge and at least one of xy, yz is not.
struct UmbrellaViolation {
  Vertex x, y, z;
};

/// Checks the umbrella property of `order`. Throws input_error when `order`
/// is not a permutation of the vertices.
std::optional<UmbrellaViolation> verify_umbrella(const Graph &g, std::span<const Vertex> order);

/// Wraps a verified order and computes reaches. Throws contract_violation if
/// `order` is not an umbrella ordering.
ProperIntervalOrdering make_ordering(const Graph &g, std::vector<Vertex> order);

/// Proper interval ordering or nullopt. Candidates come from a three-sweep
/// LexBFS per component (components concatenated); every candidate is
/// re-verified before it is returned.
std::optional<ProperIntervalOrdering> recognize(const Graph &g);

/// The candidate order `recognize` would test, whether or not it is valid.
std::vector<Vertex> lexbfs_candidate(const Graph &g);

ProperIntervalOrdering reverse(const ProperIntervalOrdering &o);

/// Plain LexBFS. Ties go to the vertex ranked first by `tie_rank` (lower
/// rank wins); `start` is visited first.
std::vector<Vertex> lexbfs(const Graph &g, std::span<const Vertex> vertices, Vertex start,
                           std::span<const int> tie_rank);

} // namespace stc
