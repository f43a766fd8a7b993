#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "subtrees/structure.hpp"
#include "subtrees/tree.hpp"

namespace subtrees {

namespace detail {

/// Maximum matching size of the forest left after deleting `removed`
/// vertices. Postorder greedy: an unmatched vertex grabs its unmatched parent.
inline std::size_t forest_matching_size(const Tree& t, const std::vector<char>& removed) {
  const std::size_t n = t.order();
  std::vector<char> seen(n, 0);
  std::vector<char> matched(n, 0);
  std::vector<Vertex> parent(n, kNoVertex);
  std::size_t size = 0;
  for (Vertex start = 0; start < n; ++start) {
    if (removed[start] || seen[start]) continue;
    std::vector<Vertex> order{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Vertex x = order[head];
      for (Vertex y : t.neighbors(x)) {
        if (removed[y] || seen[y]) continue;
        seen[y] = 1;
        parent[y] = x;
        order.push_back(y);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex x = *it;
      const Vertex p = parent[x];
      if (!matched[x] && p != kNoVertex && !matched[p]) {
        matched[x] = matched[p] = 1;
        ++size;
      }
    }
  }
  return size;
}

/// Minimum dominating set size subject to forced membership (1 = must be in,
/// -1 = must be out, 0 = free). Returns nullopt when infeasible.
inline std::optional<std::size_t> constrained_domination(const Tree& t, const std::vector<int>& force) {
  const std::size_t n = t.order();
  const std::size_t inf = n + 1;
  auto add = [inf](std::size_t a, std::size_t b) { return std::min(inf, a + b); };
  const RootedOrder r = rooted_order(t, 0);
  // in: v in the set; dom: v out, dominated by a child; need: v out and not
  // yet dominated, so its parent must be in the set.
  std::vector<std::size_t> in(n), dom(n), need(n);
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const Vertex x = *it;
    std::size_t in_x = 1, free_sum = 0, need_x = 0, best_gap = inf;
    bool any_child = false;
    for (Vertex c : t.neighbors(x)) {
      if (c == r.parent[x]) continue;
      any_child = true;
      in_x = add(in_x, std::min({in[c], dom[c], need[c]}));
      const std::size_t cheap = std::min(in[c], dom[c]);
      free_sum = add(free_sum, cheap);
      need_x = add(need_x, dom[c]);
      if (in[c] < inf) best_gap = std::min(best_gap, in[c] - cheap);
    }
    in[x] = force[x] == -1 ? inf : in_x;
    dom[x] = (force[x] == 1 || !any_child) ? inf : add(free_sum, best_gap);
    need[x] = force[x] == 1 ? inf : need_x;
  }
  const std::size_t best = std::min(in[0], dom[0]);
  if (best >= inf) return std::nullopt;
  return best;
}

}  // namespace detail

/// q(T), the matching number.
inline std::size_t matching_number(const Tree& t) {
  return detail::forest_matching_size(t, std::vector<char>(t.order(), 0));
}

/// A maximum matching whose sorted edge list is lexicographically smallest.
inline std::vector<Edge> maximum_matching(const Tree& t) {
  const std::size_t q = matching_number(t);
  std::vector<char> removed(t.order(), 0);
  std::vector<Edge> chosen;
  for (const Edge& e : t.edges()) {
    if (chosen.size() == q) break;
    if (removed[e.u] || removed[e.v]) continue;
    removed[e.u] = removed[e.v] = 1;
    if (chosen.size() + 1 + detail::forest_matching_size(t, removed) == q) {
      chosen.push_back(e);
    } else {
      removed[e.u] = removed[e.v] = 0;
    }
  }
  return chosen;
}

inline bool has_perfect_matching(const Tree& t) {
  return t.order() % 2 == 0 && 2 * matching_number(t) == t.order();
}

/// The perfect matching, if any. A tree has at most one.
inline std::optional<std::vector<Edge>> perfect_matching(const Tree& t) {
  if (!has_perfect_matching(t)) return std::nullopt;
  return maximum_matching(t);
}

/// gamma(T), the domination number.
inline std::size_t domination_number(const Tree& t) {
  return *detail::constrained_domination(t, std::vector<int>(t.order(), 0));
}

/// A minimum dominating set, the lexicographically smallest one in sorted
/// vertex order.
inline std::vector<Vertex> minimum_dominating_set(const Tree& t) {
  const std::size_t gamma = domination_number(t);
  std::vector<int> force(t.order(), 0);
  std::vector<Vertex> chosen;
  for (Vertex v = 0; v < t.order() && chosen.size() < gamma; ++v) {
    force[v] = 1;
    const auto best = detail::constrained_domination(t, force);
    if (best && *best == gamma) {
      chosen.push_back(v);
    } else {
      force[v] = -1;
    }
  }
  return chosen;
}

inline bool is_dominating_set(const Tree& t, const std::vector<Vertex>& set) {
  std::vector<char> covered(t.order(), 0);
  for (Vertex v : set) {
    covered.at(v) = 1;
    for (Vertex w : t.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

struct InvariantProfile {
  std::size_t matching = 0;
  std::size_t domination = 0;
  std::size_t diameter = 0;
  std::size_t leaf_count = 0;
  std::size_t max_degree = 0;
  std::vector<Vertex> centers;
  bool has_perfect_matching = false;

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

inline InvariantProfile invariant_profile(const Tree& t) {
  InvariantProfile p;
  p.matching = matching_number(t);
  p.domination = domination_number(t);
  p.diameter = diameter(t);
  p.leaf_count = t.leaf_count();
  p.max_degree = t.max_degree();
  p.centers = centers(t);
  p.has_perfect_matching = t.order() % 2 == 0 && 2 * p.matching == t.order();
  return p;
}

}  // namespace subtrees
