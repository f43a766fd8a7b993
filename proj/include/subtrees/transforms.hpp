#pragma once

#include <algorithm>
#include <string_view>
#include <vector>

#include "subtrees/canonical.hpp"
#include "subtrees/structure.hpp"
#include "subtrees/tree.hpp"

namespace subtrees {

enum class TransformKind { A, B, C, Cprime };

constexpr std::string_view to_string(TransformKind k) noexcept {
  switch (k) {
    case TransformKind::A: return "A";
    case TransformKind::B: return "B";
    case TransformKind::C: return "C";
    case TransformKind::Cprime: return "Cprime";
  }
  return "?";
}

/// Rewritten tree plus the map old label -> new label.
struct TransformResult {
  Tree tree;
  std::vector<Vertex> label_map;
  TransformKind kind;
};

namespace detail {

inline std::vector<Vertex> identity_map(std::size_t n) {
  std::vector<Vertex> m(n);
  for (Vertex v = 0; v < n; ++v) m[v] = v;
  return m;
}

inline void require_vertex(const Tree& t, Vertex v) {
  if (!t.has_vertex(v)) throw Error(ErrorKind::BadAnchor, "vertex " + std::to_string(v) + " is not in the tree");
}

/// Length of the pendant path that starts at `c` and leads away from `from`,
/// or 0 if that branch is not such a path.
inline std::size_t pendant_path_length(const Tree& t, Vertex from, Vertex c) {
  std::size_t length = 1;
  Vertex prev = from;
  Vertex cur = c;
  while (true) {
    if (t.degree(cur) > 2) return 0;
    if (t.degree(cur) == 1) return length;
    const Vertex next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
    prev = cur;
    cur = next;
    ++length;
  }
}

}  // namespace detail

/// Replaces the branches of u rooted at `branch_roots` (neighbors of u) by a
/// single path hanging from u, through the same vertices in ascending label
/// order. Labels are preserved.
inline TransformResult a_transform(const Tree& t, Vertex u, std::vector<Vertex> branch_roots) {
  detail::require_vertex(t, u);
  if (branch_roots.empty()) throw Error(ErrorKind::BadAnchor, "no branch selected at " + std::to_string(u));
  std::sort(branch_roots.begin(), branch_roots.end());
  if (std::adjacent_find(branch_roots.begin(), branch_roots.end()) != branch_roots.end()) {
    throw Error(ErrorKind::BadAnchor, "branch listed twice");
  }
  std::vector<char> replaced(t.order(), 0);
  std::vector<Vertex> members;
  for (Vertex c : branch_roots) {
    if (!t.has_edge(u, c)) {
      throw Error(ErrorKind::BadAnchor, std::to_string(c) + " is not a neighbor of " + std::to_string(u));
    }
    for (Vertex x : branch_vertices(t, u, c)) {
      replaced[x] = 1;
      members.push_back(x);
    }
  }
  std::sort(members.begin(), members.end());
  std::vector<Edge> edges;
  for (const Edge& e : t.edges())
    if (!replaced[e.u] && !replaced[e.v]) edges.push_back(e);
  Vertex prev = u;
  for (Vertex x : members) {
    edges.emplace_back(prev, x);
    prev = x;
  }
  return {Tree(t.order(), std::move(edges)), detail::identity_map(t.order()), TransformKind::A};
}

inline TransformResult a_transform(const Tree& t, Vertex u, Vertex component_root) {
  return a_transform(t, u, std::vector<Vertex>{component_root});
}

/// Contracts the edge uv and hangs a new pendant on the merged vertex. Labels
/// above v shift down by one; the merged vertex carries u's label and the new
/// pendant is n-1.
inline TransformResult b_transform(const Tree& t, Vertex u, Vertex v) {
  detail::require_vertex(t, u);
  detail::require_vertex(t, v);
  if (!t.has_edge(u, v)) throw Error(ErrorKind::BadAnchor, "no edge " + std::to_string(u) + " " + std::to_string(v));
  if (t.degree(u) < 2 || t.degree(v) < 2) {
    throw Error(ErrorKind::SideTooSmall, "both sides of the edge need at least two vertices");
  }
  const std::size_t n = t.order();
  std::vector<Vertex> map(n);
  for (Vertex w = 0; w < n; ++w) map[w] = w - (w > v ? 1 : 0);
  map[v] = map[u];
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) {
    if (Edge(u, v) == e) continue;
    edges.emplace_back(map[e.u], map[e.v]);
  }
  edges.emplace_back(map[u], n - 1);
  return {Tree(n, std::move(edges)), std::move(map), TransformKind::B};
}

/// Moves every child of v except one pendant-path child up to v's parent w.
/// The orientation is the center-rooted one: if v is one center of a
/// bicentral tree, w is the other center (the C' variant, which needs
/// d(w) > 2); otherwise the tree hangs from its canonical center and v must
/// not be that center.
inline TransformResult c_transform(const Tree& t, Vertex v) {
  detail::require_vertex(t, v);
  if (t.degree(v) < 3) throw Error(ErrorKind::BadAnchor, "vertex " + std::to_string(v) + " has degree below 3");
  const auto cs = centers(t);
  TransformKind kind = TransformKind::C;
  Vertex root = canonical_root(t);
  if (std::find(cs.begin(), cs.end(), v) != cs.end()) {
    if (cs.size() == 1) throw Error(ErrorKind::CenterViolation, "v is the unique center and has no parent");
    root = cs[0] == v ? cs[1] : cs[0];
    if (t.degree(root) <= 2) throw Error(ErrorKind::CenterViolation, "the other center must have degree above 2");
    kind = TransformKind::Cprime;
  }
  const Vertex w = rooted_order(t, root).parent[v];

  Vertex keep = kNoVertex;
  std::size_t keep_length = 0;
  for (Vertex c : t.neighbors(v)) {
    if (c == w) continue;
    const std::size_t length = detail::pendant_path_length(t, v, c);
    if (length > keep_length) {
      keep = c;
      keep_length = length;
    }
  }
  if (keep == kNoVertex) throw Error(ErrorKind::NoPathChild, "no child subtree of " + std::to_string(v) + " is a path");

  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) {
    const Vertex other = e.u == v ? e.v : (e.v == v ? e.u : kNoVertex);
    if (other != kNoVertex && other != w && other != keep) {
      edges.emplace_back(w, other);
    } else {
      edges.push_back(e);
    }
  }
  return {Tree(t.order(), std::move(edges)), detail::identity_map(t.order()), kind};
}

/// A transform request: kind plus anchor. For A, `u` and `branch_roots`; for
/// B, the edge (u, v); for C and C', the vertex `v`.
struct TransformSpec {
  TransformKind kind = TransformKind::A;
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> branch_roots;
};

inline TransformResult apply_transform(const Tree& t, const TransformSpec& spec) {
  switch (spec.kind) {
    case TransformKind::A: return a_transform(t, spec.u, spec.branch_roots);
    case TransformKind::B: return b_transform(t, spec.u, spec.v);
    case TransformKind::C:
    case TransformKind::Cprime: {
      auto result = c_transform(t, spec.v);
      if (result.kind != spec.kind) {
        throw Error(ErrorKind::CenterViolation, std::string("vertex ") + std::to_string(spec.v) + " admits the " +
                                                    std::string(to_string(result.kind)) + " variant, not " +
                                                    std::string(to_string(spec.kind)));
      }
      return result;
    }
  }
  throw Error(ErrorKind::BadParams, "unknown transform");
}

}  // namespace subtrees
