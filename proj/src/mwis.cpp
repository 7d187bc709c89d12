#include "stc/mwis.hpp"

#include "stc/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace stc {

namespace {

class Bitset {
public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(int i) { words_[i >> 6] |= bit(i); }
  void reset(int i) { words_[i >> 6] &= ~bit(i); }
  bool test(int i) const { return (words_[i >> 6] & bit(i)) != 0; }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
  }
  int first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k])
        return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
    return -1;
  }
  Bitset &operator&=(const Bitset &o) {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] &= o.words_[k];
    return *this;
  }
  Bitset &and_not(const Bitset &o) {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] &= ~o.words_[k];
    return *this;
  }
  template <class F> void for_each(F &&f) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      for (auto w = words_[k]; w; w &= w - 1)
        f(static_cast<int>(k * 64 + std::countr_zero(w)));
  }

private:
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }
  std::vector<std::uint64_t> words_;
};

// Branch and bound over candidate sets. Nodes are renumbered heaviest first
// (then sparsest first) so the greedy clique cover opens each clique with its
// heaviest member, which makes the cover bound a sum of clique maxima.
class BranchAndBound {
public:
  BranchAndBound(std::span<const std::int64_t> weight, const std::vector<std::vector<int>> &adj)
      : n_(static_cast<int>(weight.size())) {
    to_internal_.resize(n_);
    to_external_.resize(n_);
    std::iota(to_external_.begin(), to_external_.end(), 0);
    std::stable_sort(to_external_.begin(), to_external_.end(), [&](int a, int b) {
      if (weight[a] != weight[b])
        return weight[a] > weight[b];
      return adj[a].size() < adj[b].size();
    });
    for (int i = 0; i < n_; ++i)
      to_internal_[to_external_[i]] = i;
    w_.resize(n_);
    nbr_.assign(n_, Bitset(n_));
    for (int i = 0; i < n_; ++i) {
      const int ext = to_external_[i];
      w_[i] = weight[ext];
      for (int u : adj[ext])
        nbr_[i].set(to_internal_[u]);
    }
  }

  Bitset full() const {
    Bitset b(n_);
    for (int i = 0; i < n_; ++i)
      b.set(i);
    return b;
  }

  /// Optimum over `cand` (external ids).
  std::int64_t maximize(const Bitset &cand_external) {
    Bitset cand(n_);
    cand_external.for_each([&](int e) { cand.set(to_internal_[e]); });
    best_ = 0;
    target_ = -1;
    expand(cand, 0);
    return best_;
  }

  /// True iff some independent subset of `cand` (external ids) weighs at
  /// least `target`.
  bool reaches(const Bitset &cand_external, std::int64_t target) {
    if (target <= 0)
      return true;
    Bitset cand(n_);
    cand_external.for_each([&](int e) { cand.set(to_internal_[e]); });
    best_ = 0;
    target_ = target;
    expand(cand, 0);
    return best_ >= target;
  }

  std::uint64_t branches() const { return branches_; }

private:
  bool done() const { return target_ >= 0 && best_ >= target_; }

  void expand(Bitset cand, std::int64_t current) {
    ++branches_;
    if (current > best_)
      best_ = current;
    if (done() || !cand.any())
      return;

    std::vector<int> order;
    std::vector<std::int64_t> bound;
    Bitset rest = cand;
    std::int64_t cover = 0;
    while (rest.any()) {
      Bitset open = rest;
      const int head = open.first();
      const std::int64_t cmax = w_[head];
      while (open.any()) {
        int v = open.first();
        open.reset(v);
        open &= nbr_[v];
        rest.reset(v);
        order.push_back(v);
        bound.push_back(cover + cmax);
      }
      cover += cmax;
    }

    // Prune against best_ (strict improvement) or the target threshold.
    for (std::size_t k = order.size(); k-- > 0;) {
      const std::int64_t floor = target_ >= 0 ? std::max(best_, target_ - 1) : best_;
      if (current + bound[k] <= floor)
        return;
      const int v = order[k];
      Bitset next = cand;
      next.and_not(nbr_[v]);
      next.reset(v);
      expand(next, current + w_[v]);
      if (done())
        return;
      cand.reset(v);
    }
  }

  int n_;
  std::vector<int> to_internal_, to_external_;
  std::vector<std::int64_t> w_;
  std::vector<Bitset> nbr_;
  std::int64_t best_ = 0;
  std::int64_t target_ = -1;
  std::uint64_t branches_ = 0;
};

void check_input(std::span<const std::int64_t> weight, const std::vector<std::vector<int>> &adj) {
  if (adj.size() != weight.size())
    throw contract_violation("weight and adjacency sizes differ");
  const int n = static_cast<int>(weight.size());
  for (int i = 0; i < n; ++i) {
    if (weight[i] <= 0)
      throw contract_violation("node weights must be positive");
    for (int u : adj[i])
      if (u < 0 || u >= n || u == i)
        throw contract_violation("invalid adjacency entry");
  }
}

} // namespace

MwisResult max_weight_independent_set(std::span<const std::int64_t> weight,
                                      const std::vector<std::vector<int>> &adj,
                                      const MwisOptions &opts) {
  check_input(weight, adj);
  const int n = static_cast<int>(weight.size());
  if (static_cast<std::size_t>(n) > opts.cap && !opts.force)
    throw unsupported_error("independent set instance has " + std::to_string(n) +
                            " nodes, above the oracle cap of " + std::to_string(opts.cap));
  MwisResult res;
  if (n == 0)
    return res;

  BranchAndBound bnb(weight, adj);
  Bitset all = bnb.full();
  res.value = bnb.maximize(all);

  if (opts.witness) {
    // Walk nodes in index order and keep each one whose inclusion still
    // admits an optimal completion from the later nodes.
    Bitset allowed = all;
    std::int64_t remaining = res.value;
    for (int i = 0; i < n && remaining > 0; ++i) {
      if (!allowed.test(i))
        continue;
      allowed.reset(i);
      Bitset after = allowed;
      for (int u : adj[i])
        after.reset(u);
      if (weight[i] <= remaining && bnb.reaches(after, remaining - weight[i])) {
        res.nodes.push_back(i);
        remaining -= weight[i];
        allowed = after;
      }
    }
    if (remaining != 0)
      throw contract_violation("failed to rebuild an optimal independent set");
  }
  res.branches = bnb.branches();
  return res;
}

MwisResult brute_mwis(const IncompatGraph &h, const MwisOptions &opts) {
  return max_weight_independent_set(h.node_weight, h.adj, opts);
}

namespace {

class Cotree {
public:
  Cotree(std::span<const std::int64_t> weight, const std::vector<std::vector<int>> &adj)
      : weight_(weight), n_(static_cast<int>(weight.size())),
        matrix_(static_cast<std::size_t>(n_) * n_, 0) {
    for (int i = 0; i < n_; ++i)
      for (int u : adj[i])
        matrix_[static_cast<std::size_t>(i) * n_ + u] = 1;
  }

  std::int64_t solve(const std::vector<int> &nodes, std::vector<int> &chosen) {
    if (nodes.size() == 1) {
      chosen.push_back(nodes[0]);
      return weight_[nodes[0]];
    }
    auto parts = split(nodes, false);
    if (parts.size() > 1) {
      std::int64_t total = 0;
      for (const auto &p : parts)
        total += solve(p, chosen);
      return total;
    }
    parts = split(nodes, true);
    if (parts.size() == 1)
      throw contract_violation("graph is not a cograph: connected with connected complement");
    std::int64_t best = -1;
    std::vector<int> best_set;
    for (const auto &p : parts) {
      std::vector<int> local;
      std::int64_t v = solve(p, local);
      if (v > best) {
        best = v;
        best_set = std::move(local);
      }
    }
    chosen.insert(chosen.end(), best_set.begin(), best_set.end());
    return best;
  }

private:
  bool adjacent(int a, int b) const { return matrix_[static_cast<std::size_t>(a) * n_ + b] != 0; }

  // Components of the subgraph (or its complement) induced by `nodes`.
  std::vector<std::vector<int>> split(const std::vector<int> &nodes, bool complement) const {
    std::vector<std::vector<int>> parts;
    std::vector<char> seen(nodes.size(), 0);
    for (std::size_t s = 0; s < nodes.size(); ++s) {
      if (seen[s])
        continue;
      parts.emplace_back();
      std::vector<std::size_t> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        auto i = stack.back();
        stack.pop_back();
        parts.back().push_back(nodes[i]);
        for (std::size_t j = 0; j < nodes.size(); ++j)
          if (!seen[j] && adjacent(nodes[i], nodes[j]) != complement) {
            seen[j] = 1;
            stack.push_back(j);
          }
      }
      std::sort(parts.back().begin(), parts.back().end());
    }
    return parts;
  }

  std::span<const std::int64_t> weight_;
  int n_;
  std::vector<char> matrix_;
};

} // namespace

MwisResult cograph_mwis(std::span<const std::int64_t> weight,
                        const std::vector<std::vector<int>> &adj) {
  check_input(weight, adj);
  MwisResult res;
  if (weight.empty())
    return res;
  std::vector<int> all(weight.size());
  std::iota(all.begin(), all.end(), 0);
  Cotree tree(weight, adj);
  res.value = tree.solve(all, res.nodes);
  std::sort(res.nodes.begin(), res.nodes.end());
  return res;
}

} // namespace stc
