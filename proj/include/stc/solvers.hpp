#pragma once

#include "stc/graph.hpp"
#include "stc/incompat.hpp"
#include "stc/ordering.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace stc {

enum class SolverKind { oracle, pig_dp, trivially_perfect, bipartite_matching, mixed };

std::string_view to_string(SolverKind kind);

struct SolveResult {
  /// Total strong weight; for unit-weight inputs the number of strong edges.
  std::int64_t value = 0;
  StrongWeakLabeling labeling;
  SolverKind solver = SolverKind::oracle;
  /// Deterministic counters only (no timings).
  std::map<std::string, std::int64_t> stats;
};

struct SolveOptions {
  /// Largest edge count the oracle accepts.
  std::size_t oracle_cap = 34;
  bool force_oracle = false;
};

/// Exact MaxSTC through a maximum weight independent set of the
/// line-incompatibility graph, one component at a time. Throws
/// unsupported_error when |E| exceeds the cap and the oracle is not forced.
SolveResult solve_oracle(const Graph &g, const SolveOptions &opts = {});

/// Everything the proper interval pipeline produced, for inspection.
struct PigDpTrace {
  SolveResult result;
  TwinContraction contraction;
  ProperIntervalOrdering ordering; // of contraction.graph
  StrongWeakLabeling contracted_labeling;
  std::int64_t states = 0;
};

/// Twin contraction, proper interval ordering, then the prefix-clique
/// dynamic program on each component. Throws wrong_class_error when the
/// graph is not proper interval.
SolveResult solve_pig_dp(const Graph &g);
PigDpTrace solve_pig_dp_traced(const Graph &g, bool reverse_ordering = false);

/// Cotree MWIS over the incompatibility graph of the twin-contracted input.
/// Throws wrong_class_error for graphs with an induced P4 or C4.
SolveResult solve_trivially_perfect(const Graph &g);

/// Strong edges form a maximum matching. Throws wrong_class_error for
/// non-bipartite or weighted input.
SolveResult solve_bipartite(const Graph &g);

/// Trivially perfect graphs go to the cotree solver as a whole; otherwise
/// each component with edges is routed to the proper interval DP, the
/// matching solver or the oracle, first applicable in that order. Throws
/// unsupported_error when a component fits no class and exceeds the cap.
SolveResult solve_auto(const Graph &g, const SolveOptions &opts = {});

/// Triple x < y < z of ordering positions (returned as vertices) with xz
/// strong but xy or yz weak, if any.
std::optional<std::array<Vertex, 3>>
consecutive_strong_violation(const Graph &g, const ProperIntervalOrdering &o,
                             const StrongWeakLabeling &lab);

} // namespace stc
