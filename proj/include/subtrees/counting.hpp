#pragma once

#include <cstdint>
#include <vector>

#include "subtrees/count.hpp"
#include "subtrees/structure.hpp"
#include "subtrees/tree.hpp"

namespace subtrees {

/// Exact subtree statistics of one tree.
///
/// F counts all subtrees (connected induced subgraphs), Fstar the ones that
/// contain at least one leaf of the host. f[v] and fstar[v] are the per-vertex
/// anchored versions; fstar is empty for K_1, where it is undefined.
struct CountReport {
  std::size_t n = 0;
  Count F;
  Count Fstar;
  Count wiener;
  std::vector<Count> f;
  std::vector<Count> fstar;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

namespace detail {

/// Rooted product DP restricted to `allowed` vertices: below[v] is the number
/// of subtrees of the part hanging under v whose topmost vertex is v, i.e.
/// the product over allowed children c of (1 + below[c]). Vertices not
/// reachable from `root` inside the allowed set keep the value 0.
template <typename Int>
std::vector<Int> subtrees_below(const Tree& t, Vertex root, const std::vector<char>& allowed) {
  std::vector<Int> below(t.order(), Int(0));
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(t.order(), kNoVertex);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex x = order[head];
    for (Vertex y : t.neighbors(x)) {
      if (y == parent[x] || !allowed[y]) continue;
      parent[y] = x;
      order.push_back(y);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex x = *it;
    Int product(1);
    for (Vertex y : t.neighbors(x))
      if (y != parent[x] && allowed[y]) product *= Int(1) + below[y];
    below[x] = product;
  }
  return below;
}

template <typename Int>
Int sum_of(const std::vector<Int>& values) {
  Int total(0);
  for (const Int& v : values) total += v;
  return total;
}

}  // namespace detail

/// F(T), the number of subtrees. `Int` may be a machine integer when the
/// caller has bounded n (F(T) <= 2^(n-1) + n - 1).
template <typename Int = Count>
Int count_subtrees(const Tree& t) {
  const std::vector<char> all(t.order(), 1);
  return detail::sum_of(detail::subtrees_below<Int>(t, 0, all));
}

/// f_T(v), subtrees containing v.
template <typename Int = Count>
Int count_subtrees_at(const Tree& t, Vertex v) {
  if (!t.has_vertex(v)) throw Error(ErrorKind::LabelOutOfRange, "vertex " + std::to_string(v));
  const std::vector<char> all(t.order(), 1);
  return detail::subtrees_below<Int>(t, v, all)[v];
}

/// f_T(v) for every v at once by rerooting: going from parent p to child c,
/// the part of the tree beyond p contributes f(p) / (1 + below[c]).
inline std::vector<Count> subtree_counts_at_all(const Tree& t) {
  const std::vector<char> all(t.order(), 1);
  const RootedOrder r = rooted_order(t, 0);
  const auto below = detail::subtrees_below<Count>(t, 0, all);
  std::vector<Count> f(t.order());
  f[0] = below[0];
  for (std::size_t i = 1; i < r.order.size(); ++i) {
    const Vertex c = r.order[i];
    const Vertex p = r.parent[c];
    const Count beyond = f[p] / (1 + below[c]);
    f[c] = below[c] * (1 + beyond);
  }
  return f;
}

/// f_T(u*v), subtrees containing both u and v. The u-v path is treated as a
/// single contracted vertex; every branch leaving the path is optional.
inline Count count_subtrees_at_pair(const Tree& t, Vertex u, Vertex v) {
  if (!t.has_vertex(u) || !t.has_vertex(v)) throw Error(ErrorKind::LabelOutOfRange, "vertex out of range");
  if (u == v) throw Error(ErrorKind::Precondition, "pair count needs two distinct vertices");
  const auto path = path_between(t, u, v);
  std::vector<char> off_path(t.order(), 1);
  for (Vertex p : path) off_path[p] = 0;
  Count product = 1;
  for (Vertex p : path) {
    for (Vertex nb : t.neighbors(p)) {
      if (!off_path[nb]) continue;
      product *= 1 + detail::subtrees_below<Count>(t, nb, off_path)[nb];
    }
  }
  return product;
}

/// F*(T) = F(T) - F(H(T)), where H(T) deletes all leaves; F(H) = 0 when
/// n <= 2 because every vertex is then a leaf.
template <typename Int = Count>
Int count_leaf_subtrees(const Tree& t) {
  const Int total = count_subtrees<Int>(t);
  if (t.order() <= 2) return total;
  std::vector<char> inner(t.order(), 0);
  Vertex some_inner = kNoVertex;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (!t.is_leaf(v)) {
      inner[v] = 1;
      some_inner = v;
    }
  }
  return total - detail::sum_of(detail::subtrees_below<Int>(t, some_inner, inner));
}

/// f*_T(v): subtrees containing v and some leaf other than v. Counted as
/// f_T(v) minus the subtrees at v that avoid every other leaf.
template <typename Int = Count>
Int count_leaf_subtrees_at(const Tree& t, Vertex v) {
  if (!t.has_vertex(v)) throw Error(ErrorKind::LabelOutOfRange, "vertex " + std::to_string(v));
  if (t.order() < 2) throw Error(ErrorKind::Precondition, "f* is undefined on a single vertex");
  std::vector<char> avoid_leaves(t.order(), 0);
  for (Vertex w = 0; w < t.order(); ++w) avoid_leaves[w] = (!t.is_leaf(w) || w == v) ? 1 : 0;
  return count_subtrees_at<Int>(t, v) - detail::subtrees_below<Int>(t, v, avoid_leaves)[v];
}

inline std::vector<Count> leaf_subtree_counts_at_all(const Tree& t) {
  if (t.order() < 2) return {};
  std::vector<Count> out;
  out.reserve(t.order());
  for (Vertex v = 0; v < t.order(); ++v) out.push_back(count_leaf_subtrees_at(t, v));
  return out;
}

/// W(T) as a sum over edges of (vertices on one side) * (vertices on the other).
inline Count wiener_index(const Tree& t) {
  const RootedOrder r = rooted_order(t, 0);
  std::vector<std::size_t> size(t.order(), 1);
  Count total = 0;
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const Vertex v = *it;
    if (v == r.root) continue;
    size[r.parent[v]] += size[v];
    total += Count(static_cast<unsigned long>(size[v])) * static_cast<unsigned long>(t.order() - size[v]);
  }
  return total;
}

inline CountReport count_report(const Tree& t) {
  CountReport report;
  report.n = t.order();
  report.F = count_subtrees(t);
  report.Fstar = count_leaf_subtrees(t);
  report.wiener = wiener_index(t);
  report.f = subtree_counts_at_all(t);
  report.fstar = leaf_subtree_counts_at_all(t);
  return report;
}

}  // namespace subtrees
