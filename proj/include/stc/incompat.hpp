#pragma once

#include "stc/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace stc {

/// Line-incompatibility graph: one node per source edge (node i is
/// source.edges()[i]); two nodes conflict iff their edges share one endpoint
/// and the two far endpoints are non-adjacent, i.e. they span an induced P3.
struct IncompatGraph {
  std::vector<Edge> nodes;
  std::vector<std::int64_t> node_weight;
  std::vector<std::vector<int>> adj;              // sorted conflict lists
  std::vector<std::pair<int, int>> conflicts;     // (i, j) with i < j, sorted

  std::size_t size() const { return nodes.size(); }
  bool conflict(int a, int b) const;
};

/// Node weight is the edge weight w(u) * w(v).
IncompatGraph build_incompat(const Graph &g);

/// Total strong/weak assignment on the edges of one graph.
struct StrongWeakLabeling {
  std::vector<Edge> strong; // sorted
  std::vector<Edge> weak;   // sorted
  std::int64_t value = 0;   // total weight of strong edges
};

/// Labeling with the given strong edges and every other edge weak.
/// Throws input_error on edges that are not in g or repeat.
StrongWeakLabeling make_labeling(const Graph &g, std::vector<Edge> strong);

/// Strong wedge u-v-w (center v) whose ends u, w are non-adjacent.
struct StcViolation {
  Vertex u, v, w;
};

/// nullopt iff the labeling satisfies strong triadic closure. Throws
/// input_error if strong/weak do not partition E(g).
std::optional<StcViolation> validate_stc(const Graph &g, const StrongWeakLabeling &lab);

/// Strong set = the selected incompatibility nodes. Throws
/// contract_violation if the nodes are not independent in h.
StrongWeakLabeling labeling_from_independent_set(const Graph &g, const IncompatGraph &h,
                                                 std::span<const int> nodes);

/// Node indices of the strong edges of `lab`, sorted.
std::vector<int> independent_set_from_labeling(const Graph &g, const StrongWeakLabeling &lab);

/// Lifts a labeling of the twin-contracted graph to the original graph:
/// edges inside a twin class are strong, an edge between classes is strong
/// iff the contracted edge between their representatives is.
StrongWeakLabeling expand_labeling(const Graph &original, const TwinContraction &contraction,
                                   const StrongWeakLabeling &contracted_lab);

} // namespace stc
