#pragma once

#include "stc/incompat.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace stc {

struct MwisOptions {
  /// Largest node count accepted unless `force` is set.
  std::size_t cap = 34;
  bool force = false;
  /// When false only the optimum value is computed; `nodes` stays empty.
  bool witness = true;
};

struct MwisResult {
  std::int64_t value = 0;
  /// Lexicographically smallest optimal node set, sorted.
  std::vector<int> nodes;
  std::uint64_t branches = 0;
};

/// Exact maximum weight independent set by branch and bound with a greedy
/// clique-cover bound. `adj` must be symmetric and loop-free; weights > 0.
/// Throws unsupported_error when the cap is exceeded and not forced.
MwisResult max_weight_independent_set(std::span<const std::int64_t> weight,
                                      const std::vector<std::vector<int>> &adj,
                                      const MwisOptions &opts = {});

/// The oracle: exact MWIS of a line-incompatibility graph.
MwisResult brute_mwis(const IncompatGraph &h, const MwisOptions &opts = {});

/// Maximum weight independent set of a P4-free graph via its cotree: the
/// optimum of a disconnected graph is the sum over components, that of a
/// graph with disconnected complement the best co-component. Throws
/// contract_violation when some induced subgraph is connected with a
/// connected complement, which happens exactly when the graph has an
/// induced P4.
MwisResult cograph_mwis(std::span<const std::int64_t> weight,
                        const std::vector<std::vector<int>> &adj);

} // namespace stc
