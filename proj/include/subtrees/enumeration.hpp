#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <random>
#include <thread>
#include <vector>

#include "subtrees/canonical.hpp"
#include "subtrees/invariants.hpp"
#include "subtrees/tree.hpp"

namespace subtrees {

/// Largest order accepted by the enumerators unless the caller raises it.
/// n = 24 already means about 39 million trees.
inline constexpr std::size_t kDefaultMaxOrder = 24;

/// Sequential generator of one representative per isomorphism class of free
/// trees on n vertices (Wright-Richmond-Odlyzko-McKay successor rule on
/// level sequences, constant amortized time per tree).
///
/// With shards > 1 only trees whose emission index is congruent to `shard`
/// are returned. Every shard walks the same sequence, so the shards of one n
/// partition the full output with no coordination.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(std::size_t n, std::size_t shard = 0, std::size_t shards = 1,
                             std::size_t max_order = kDefaultMaxOrder)
      : shard_(shard), shards_(shards) {
    if (n == 0) throw Error(ErrorKind::BadParams, "trees need at least one vertex");
    if (n > max_order) {
      throw Error(ErrorKind::TooLarge, "n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                           std::to_string(max_order));
    }
    if (shards == 0 || shard >= shards) throw Error(ErrorKind::BadParams, "shard index out of range");
    if (n == 1) {
      layout_ = LevelSequence{0};
      single_ = true;
      return;
    }
    // The path, rooted at its center.
    for (std::size_t i = 0; i <= n / 2; ++i) layout_->push_back(static_cast<int>(i));
    for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout_->push_back(static_cast<int>(i));
  }

  /// Next level sequence of this shard (not necessarily the canonical form).
  std::optional<LevelSequence> next_level_sequence() {
    while (auto seq = advance()) {
      if (index_++ % shards_ == shard_) return seq;
    }
    return std::nullopt;
  }

  std::optional<Tree> next() {
    auto seq = next_level_sequence();
    if (!seq) return std::nullopt;
    return tree_from_level_sequence(*seq);
  }

 private:
  std::optional<LevelSequence> layout_ = LevelSequence{};
  std::size_t shard_;
  std::size_t shards_;
  std::size_t index_ = 0;
  bool single_ = false;
  bool started_ = false;

  std::optional<LevelSequence> advance() {
    if (single_) {
      if (started_) return std::nullopt;
      started_ = true;
      return layout_;
    }
    if (started_ && layout_) layout_ = next_rooted_tree(*layout_);
    started_ = true;
    if (!layout_) return std::nullopt;
    layout_ = next_tree(*layout_);
    return layout_;
  }

  static std::optional<LevelSequence> next_rooted_tree(const LevelSequence& pred, std::optional<std::size_t> start = {}) {
    std::size_t p = 0;
    if (start) {
      p = *start;
    } else {
      p = pred.size() - 1;
      while (pred[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    std::size_t q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    LevelSequence result = pred;
    for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
    return result;
  }

  /// Splits at the second vertex of depth 1: the first root subtree (shifted
  /// up one level) and the root with everything else.
  static std::pair<LevelSequence, LevelSequence> split(const LevelSequence& layout) {
    std::size_t m = layout.size();
    bool one_found = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
      if (layout[i] != 1) continue;
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
    LevelSequence left;
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    LevelSequence rest{0};
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
    return {std::move(left), std::move(rest)};
  }

  /// Skips rooted trees whose root is not a (canonical) center.
  static std::optional<LevelSequence> next_tree(const LevelSequence& candidate) {
    const auto [left, rest] = split(candidate);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
      if (left.size() > rest.size()) {
        valid = false;
      } else if (left.size() == rest.size() && left > rest) {
        valid = false;
      }
    }
    if (valid) return candidate;
    const std::size_t p = left.size();
    auto fresh = next_rooted_tree(candidate, p);
    if (fresh && candidate[p] > 2) {
      const auto [new_left, new_rest] = split(*fresh);
      const int height = *std::max_element(new_left.begin(), new_left.end());
      const std::size_t len = static_cast<std::size_t>(height) + 1;
      for (std::size_t i = 0; i < len; ++i) (*fresh)[fresh->size() - len + i] = static_cast<int>(i) + 1;
    }
    return fresh;
  }
};

/// Calls fn(tree) for every tree of the shard, in generation order.
template <typename Fn>
void for_each_tree(std::size_t n, Fn&& fn, std::size_t shard = 0, std::size_t shards = 1,
                   std::size_t max_order = kDefaultMaxOrder) {
  FreeTreeGenerator gen(n, shard, shards, max_order);
  while (auto t = gen.next()) fn(*t);
}

inline std::vector<Tree> all_trees(std::size_t n, std::size_t max_order = kDefaultMaxOrder) {
  std::vector<Tree> out;
  for_each_tree(n, [&](const Tree& t) { out.push_back(t); }, 0, 1, max_order);
  return out;
}

/// Membership filter for the classes the extremal theorems range over. Unset
/// fields are unconstrained; max degree is a lower bound.
struct TreeConstraint {
  std::optional<std::size_t> matching;
  std::optional<std::size_t> domination;
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> leaves;
  std::optional<std::size_t> min_max_degree;
  std::optional<bool> perfect_matching;

  [[nodiscard]] bool empty() const {
    return !matching && !domination && !diameter && !leaves && !min_max_degree && !perfect_matching;
  }

  [[nodiscard]] bool admits(const Tree& t) const {
    if (leaves && t.leaf_count() != *leaves) return false;
    if (min_max_degree && t.max_degree() < *min_max_degree) return false;
    if (diameter && subtrees::diameter(t) != *diameter) return false;
    if (matching || perfect_matching) {
      const std::size_t q = matching_number(t);
      if (matching && q != *matching) return false;
      if (perfect_matching && (2 * q == t.order()) != *perfect_matching) return false;
    }
    if (domination && domination_number(t) != *domination) return false;
    return true;
  }
};

inline std::vector<Tree> trees_matching(std::size_t n, const TreeConstraint& c,
                                        std::size_t max_order = kDefaultMaxOrder) {
  std::vector<Tree> out;
  for_each_tree(
      n,
      [&](const Tree& t) {
        if (c.admits(t)) out.push_back(t);
      },
      0, 1, max_order);
  return out;
}

/// Size of the constrained class, counted over `jobs` shards in parallel.
inline std::size_t count_trees(std::size_t n, const TreeConstraint& c, std::size_t jobs = 1,
                               std::size_t max_order = kDefaultMaxOrder) {
  if (jobs == 0) throw Error(ErrorKind::BadParams, "jobs must be at least 1");
  std::vector<std::size_t> partial(jobs, 0);
  auto work = [&](std::size_t shard) {
    for_each_tree(
        n,
        [&](const Tree& t) {
          if (c.admits(t)) ++partial[shard];
        },
        shard, jobs, max_order);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t s = 0; s < jobs; ++s) pool.emplace_back(work, s);
  }
  std::size_t total = 0;
  for (std::size_t p : partial) total += p;
  return total;
}

/// Labeled tree of a Prufer sequence over 0..n-1, n = seq.size() + 2.
inline Tree prufer_decode(const std::vector<Vertex>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) {
    if (v >= n) throw Error(ErrorKind::LabelOutOfRange, "Prufer entry " + std::to_string(v));
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (Vertex v : seq) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Tree(n, std::move(edges));
}

/// Uniformly random labeled tree on n vertices.
template <typename Rng>
Tree random_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw Error(ErrorKind::BadParams, "trees need at least one vertex");
  if (n == 1) return Tree();
  if (n == 2) return Tree(2, {Edge(0, 1)});
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) x = pick(rng);
  return prufer_decode(seq);
}

}  // namespace subtrees
