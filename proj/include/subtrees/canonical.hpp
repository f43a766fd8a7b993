#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "subtrees/structure.hpp"
#include "subtrees/tree.hpp"

namespace subtrees {

using LevelSequence = std::vector<int>;

/// Isomorphism-invariant encoding of a free tree: the depth sequence of the
/// tree rooted at a center, each vertex's child subtrees listed in ascending
/// lexicographic order of their own sequences. For a bicentral tree the
/// smaller of the two rootings wins, so the whole encoding is the
/// lexicographically least center-rooted level sequence.
struct CanonicalForm {
  LevelSequence level_seq;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < level_seq.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(level_seq[i]);
    }
    return out;
  }
};

/// Ordered level sequence of `t` rooted at `root`.
inline LevelSequence rooted_level_sequence(const Tree& t, Vertex root) {
  const RootedOrder r = rooted_order(t, root);
  std::vector<LevelSequence> code(t.order());
  std::vector<std::vector<Vertex>> children(t.order());
  for (Vertex v : r.order)
    if (v != root) children[r.parent[v]].push_back(v);
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = children[v];
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return code[a] < code[b]; });
    LevelSequence seq{0};
    for (Vertex c : kids) {
      for (int depth : code[c]) seq.push_back(depth + 1);
      LevelSequence().swap(code[c]);
    }
    code[v] = std::move(seq);
  }
  return std::move(code[root]);
}

/// The center used as canonical root (the one giving the smaller sequence).
inline Vertex canonical_root(const Tree& t) {
  const auto cs = centers(t);
  if (cs.size() == 1) return cs.front();
  return rooted_level_sequence(t, cs[1]) < rooted_level_sequence(t, cs[0]) ? cs[1] : cs[0];
}

inline CanonicalForm canonical_form(const Tree& t) {
  const auto cs = centers(t);
  LevelSequence best = rooted_level_sequence(t, cs.front());
  if (cs.size() == 2) best = std::min(best, rooted_level_sequence(t, cs.back()));
  return CanonicalForm{std::move(best)};
}

inline bool is_isomorphic(const Tree& a, const Tree& b) {
  if (a.order() != b.order() || a.max_degree() != b.max_degree() || a.leaf_count() != b.leaf_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

/// Rebuilds a tree from a level sequence; vertex i is the i-th entry and its
/// parent is the latest earlier vertex one level up.
inline Tree tree_from_level_sequence(std::span<const int> seq) {
  if (seq.empty()) throw Error(ErrorKind::MalformedInput, "empty level sequence");
  if (seq.front() != 0) throw Error(ErrorKind::MalformedInput, "level sequence must start with 0");
  std::vector<Vertex> last_at_depth{0};
  std::vector<Edge> edges;
  edges.reserve(seq.size() - 1);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const int depth = seq[i];
    if (depth == 0) throw Error(ErrorKind::NotATree, "second root at position " + std::to_string(i));
    if (depth < 0 || static_cast<std::size_t>(depth) > last_at_depth.size()) {
      throw Error(ErrorKind::MalformedInput, "depth jumps by more than one at position " + std::to_string(i));
    }
    const auto d = static_cast<std::size_t>(depth);
    edges.emplace_back(last_at_depth[d - 1], i);
    last_at_depth.resize(d);
    last_at_depth.push_back(i);
  }
  return Tree(seq.size(), std::move(edges));
}

}  // namespace subtrees

template <>
struct std::hash<subtrees::CanonicalForm> {
  std::size_t operator()(const subtrees::CanonicalForm& c) const noexcept {
    std::size_t h = c.level_seq.size();
    for (int x : c.level_seq) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};
