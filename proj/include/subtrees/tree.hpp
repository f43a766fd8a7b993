#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subtrees/error.hpp"

namespace subtrees {

using Vertex = std::size_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable labeled tree on vertices 0..n-1.
///
/// Construction validates that the edge list describes a tree; afterwards the
/// object never changes, so it can be shared freely between threads. Edges are
/// kept normalized and sorted and neighbor lists ascending, which makes every
/// traversal order (and therefore every serialization) deterministic.
class Tree {
 public:
  /// The single-vertex tree K_1.
  Tree() : adjacency_(1) {}

  Tree(std::size_t n, std::vector<Edge> edges) : adjacency_(n), edges_(std::move(edges)) {
    if (n == 0) throw Error(ErrorKind::NotATree, "a tree needs at least one vertex");
    for (Edge& e : edges_) e = Edge(e.u, e.v);
    for (const Edge& e : edges_) {
      if (e.v >= n) {
        throw Error(ErrorKind::LabelOutOfRange,
                    "edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                        " names a vertex outside 0.." + std::to_string(n - 1));
      }
      if (e.u == e.v) throw Error(ErrorKind::NotATree, "self-loop at " + std::to_string(e.u));
    }
    if (edges_.size() != n - 1) {
      throw Error(ErrorKind::NotATree, "expected " + std::to_string(n - 1) + " edges, got " +
                                           std::to_string(edges_.size()));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw Error(ErrorKind::NotATree, "duplicate edge");
    }
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());

    // n-1 edges plus connectivity rules out cycles.
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adjacency_[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != n) throw Error(ErrorKind::NotATree, "graph is disconnected or has a cycle");
  }

  [[nodiscard]] std::size_t order() const noexcept { return adjacency_.size(); }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }

  [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  /// Degree at most one. For K_1 the lone vertex counts as a leaf.
  [[nodiscard]] bool is_leaf(Vertex v) const { return degree(v) <= 1; }

  [[nodiscard]] std::vector<Vertex> leaves() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v)
      if (is_leaf(v)) out.push_back(v);
    return out;
  }

  [[nodiscard]] std::size_t leaf_count() const {
    std::size_t count = 0;
    for (Vertex v = 0; v < order(); ++v) count += is_leaf(v) ? 1 : 0;
    return count;
  }

  [[nodiscard]] std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adjacency_) best = std::max(best, list.size());
    return best;
  }

  [[nodiscard]] bool has_vertex(Vertex v) const noexcept { return v < order(); }

  [[nodiscard]] bool has_edge(Vertex a, Vertex b) const {
    if (!has_vertex(a) || !has_vertex(b)) return false;
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
  }

  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Label-exact equality (not isomorphism).
  friend bool operator==(const Tree& a, const Tree& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// A connected piece of a host tree, relabeled 0..k-1 in increasing host-label
/// order, with the map back to the host.
struct Component {
  Tree tree;
  Vertex root = 0;
  std::vector<Vertex> to_host;

  [[nodiscard]] Vertex host_root() const { return to_host.at(root); }
};

/// Tree induced on `vertices` (must be connected in `host`).
inline Component induced_component(const Tree& host, std::vector<Vertex> vertices, Vertex host_root) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<Vertex> to_local(host.order(), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) to_local.at(vertices[i]) = i;
  std::vector<Edge> edges;
  for (const Edge& e : host.edges())
    if (to_local[e.u] != kNoVertex && to_local[e.v] != kNoVertex) edges.emplace_back(to_local[e.u], to_local[e.v]);
  if (to_local.at(host_root) == kNoVertex) {
    throw Error(ErrorKind::Precondition, "component root is not among its vertices");
  }
  Component c{Tree(vertices.size(), std::move(edges)), to_local[host_root], std::move(vertices)};
  return c;
}

/// BFS orientation of a tree from a chosen root.
struct RootedOrder {
  Vertex root = 0;
  std::vector<Vertex> parent;  // kNoVertex at the root
  std::vector<Vertex> order;   // BFS order, root first; reverse it for postorder
  std::vector<std::size_t> depth;
};

inline RootedOrder rooted_order(const Tree& t, Vertex root) {
  if (!t.has_vertex(root)) throw Error(ErrorKind::LabelOutOfRange, "root " + std::to_string(root));
  RootedOrder r;
  r.root = root;
  r.parent.assign(t.order(), kNoVertex);
  r.depth.assign(t.order(), 0);
  r.order.reserve(t.order());
  r.order.push_back(root);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    const Vertex x = r.order[head];
    for (Vertex y : t.neighbors(x)) {
      if (y == r.parent[x]) continue;
      r.parent[y] = x;
      r.depth[y] = r.depth[x] + 1;
      r.order.push_back(y);
    }
  }
  return r;
}

/// Vertices of the branch hanging off `from` through its neighbor `into`.
inline std::vector<Vertex> branch_vertices(const Tree& t, Vertex from, Vertex into) {
  std::vector<Vertex> out{into};
  std::vector<Vertex> parent_of{from};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Vertex x = out[head];
    const Vertex p = parent_of[head];
    for (Vertex y : t.neighbors(x)) {
      if (y == p) continue;
      out.push_back(y);
      parent_of.push_back(x);
    }
  }
  return out;
}

/// Applies a permutation `perm` (old label -> new label) to the tree.
inline Tree relabel(const Tree& t, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (const Edge& e : t.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Tree(t.order(), std::move(edges));
}

}  // namespace subtrees
