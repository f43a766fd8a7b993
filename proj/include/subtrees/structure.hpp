#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "subtrees/tree.hpp"

namespace subtrees {

inline std::vector<std::size_t> distances_from(const Tree& t, Vertex source) {
  const RootedOrder r = rooted_order(t, source);
  return r.depth;
}

inline std::size_t eccentricity(const Tree& t, Vertex v) {
  const auto d = distances_from(t, v);
  return *std::max_element(d.begin(), d.end());
}

inline std::size_t distance(const Tree& t, Vertex u, Vertex v) {
  if (!t.has_vertex(v)) throw Error(ErrorKind::LabelOutOfRange, "vertex " + std::to_string(v));
  return distances_from(t, u)[v];
}

/// The unique u-v path, u first.
inline std::vector<Vertex> path_between(const Tree& t, Vertex u, Vertex v) {
  if (!t.has_vertex(v)) throw Error(ErrorKind::LabelOutOfRange, "vertex " + std::to_string(v));
  const RootedOrder r = rooted_order(t, v);
  std::vector<Vertex> path{u};
  while (path.back() != v) path.push_back(r.parent[path.back()]);
  return path;
}

/// Endpoints of one longest path (double BFS).
inline std::pair<Vertex, Vertex> diametral_pair(const Tree& t) {
  auto farthest = [&](Vertex from) {
    const auto d = distances_from(t, from);
    return static_cast<Vertex>(std::max_element(d.begin(), d.end()) - d.begin());
  };
  const Vertex a = farthest(0);
  return {a, farthest(a)};
}

inline std::size_t diameter(const Tree& t) {
  const auto [a, b] = diametral_pair(t);
  return distance(t, a, b);
}

/// Center vertices (one, or two adjacent ones), ascending.
inline std::vector<Vertex> centers(const Tree& t) {
  const auto [a, b] = diametral_pair(t);
  const auto path = path_between(t, a, b);
  const std::size_t len = path.size() - 1;
  std::vector<Vertex> out{path[len / 2]};
  if (len % 2 == 1) out.push_back(path[len / 2 + 1]);
  std::sort(out.begin(), out.end());
  return out;
}

/// H(T): the tree induced on the non-leaf vertices, with the map back to T.
struct StrippedTree {
  Tree tree;
  std::vector<Vertex> to_original;
};

inline StrippedTree strip_leaves(const Tree& t) {
  if (t.order() <= 2) {
    throw Error(ErrorKind::Degenerate, "every vertex of a tree with n <= 2 is a leaf");
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < t.order(); ++v)
    if (!t.is_leaf(v)) keep.push_back(v);
  Component c = induced_component(t, keep, keep.front());
  return StrippedTree{std::move(c.tree), std::move(c.to_host)};
}

/// The pieces left after deleting the edges of the x-y path between two
/// leaves, indexed from both ends inward: path = x, x_1..x_m, [z], y_m..y_1, y.
struct PathDecomposition {
  std::vector<Vertex> path_vertices;
  Component x_end;
  Component y_end;
  std::vector<Component> x_components;  // X_1..X_m rooted at x_1..x_m
  std::vector<Component> y_components;  // Y_1..Y_m rooted at y_1..y_m
  std::optional<Component> z_component;  // present iff d(x, y) is even
};

inline PathDecomposition path_decomposition(const Tree& t, Vertex x, Vertex y) {
  if (!t.has_vertex(x) || !t.has_vertex(y)) throw Error(ErrorKind::LabelOutOfRange, "endpoint out of range");
  if (!t.is_leaf(x)) throw Error(ErrorKind::NotALeaf, std::to_string(x) + " is not a leaf");
  if (!t.is_leaf(y)) throw Error(ErrorKind::NotALeaf, std::to_string(y) + " is not a leaf");
  auto path = path_between(t, x, y);
  const std::size_t dist = path.size() - 1;
  if (dist < 2) throw Error(ErrorKind::TooClose, "leaves must be at distance at least 2");

  std::vector<char> on_path(t.order(), 0);
  for (Vertex p : path) on_path[p] = 1;
  auto piece = [&](Vertex p) {
    std::vector<Vertex> members{p};
    for (Vertex nb : t.neighbors(p)) {
      if (on_path[nb]) continue;
      auto b = branch_vertices(t, p, nb);
      members.insert(members.end(), b.begin(), b.end());
    }
    return induced_component(t, std::move(members), p);
  };

  PathDecomposition d{path, piece(x), piece(y), {}, {}, std::nullopt};
  const std::size_t m = (dist - 1) / 2;
  for (std::size_t i = 1; i <= m; ++i) {
    d.x_components.push_back(piece(path[i]));
    d.y_components.push_back(piece(path[dist - i]));
  }
  if (dist % 2 == 0) d.z_component = piece(path[dist / 2]);
  return d;
}

}  // namespace subtrees
