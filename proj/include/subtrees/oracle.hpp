#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "subtrees/count.hpp"
#include "subtrees/counting.hpp"
#include "subtrees/tree.hpp"

// Brute-force reference counts. Every vertex subset is tested for
// connectivity with bitmask flood fill; leaves and distances are recomputed
// from the raw adjacency. Nothing here calls into counting.hpp apart from the
// CountReport type, so the two can check each other.

namespace subtrees::oracle {

inline constexpr std::size_t kMaxOrder = 20;

namespace detail {

using Mask = std::uint32_t;

struct Masks {
  std::vector<Mask> adjacency;
  Mask leaves = 0;
};

inline Masks masks_of(const Tree& t) {
  if (t.order() > kMaxOrder) {
    throw Error(ErrorKind::TooLarge, "oracle enumerates 2^n subsets; n = " + std::to_string(t.order()) + " > 20");
  }
  Masks m;
  m.adjacency.assign(t.order(), 0);
  for (const Edge& e : t.edges()) {
    m.adjacency[e.u] |= Mask{1} << e.v;
    m.adjacency[e.v] |= Mask{1} << e.u;
  }
  for (std::size_t v = 0; v < t.order(); ++v)
    if (std::popcount(m.adjacency[v]) <= 1) m.leaves |= Mask{1} << v;
  return m;
}

inline bool connected(Mask subset, const std::vector<Mask>& adjacency) {
  if (subset == 0) return false;
  Mask reached = subset & (~subset + 1);
  Mask frontier = reached;
  while (frontier) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const Mask fresh = adjacency[v] & subset & ~reached;
    reached |= fresh;
    frontier |= fresh;
  }
  return reached == subset;
}

}  // namespace detail

/// Every field of CountReport by exhaustive subset enumeration (n <= 20).
inline CountReport oracle_counts(const Tree& t) {
  const auto masks = detail::masks_of(t);
  const std::size_t n = t.order();
  std::uint64_t total = 0;
  std::uint64_t with_leaf = 0;
  std::vector<std::uint64_t> at(n, 0);
  std::vector<std::uint64_t> at_with_other_leaf(n, 0);
  const detail::Mask limit = detail::Mask{1} << n;
  for (detail::Mask s = 1; s < limit && s != 0; ++s) {
    if (!detail::connected(s, masks.adjacency)) continue;
    ++total;
    if (s & masks.leaves) ++with_leaf;
    for (detail::Mask rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      ++at[v];
      if (s & masks.leaves & ~(detail::Mask{1} << v)) ++at_with_other_leaf[v];
    }
  }

  CountReport report;
  report.n = n;
  report.F = Count(static_cast<unsigned long>(total));
  report.Fstar = Count(static_cast<unsigned long>(with_leaf));
  for (std::size_t v = 0; v < n; ++v) report.f.emplace_back(static_cast<unsigned long>(at[v]));
  if (n >= 2)
    for (std::size_t v = 0; v < n; ++v) report.fstar.emplace_back(static_cast<unsigned long>(at_with_other_leaf[v]));

  // All-pairs BFS over the adjacency masks.
  std::uint64_t distance_sum = 0;
  for (std::size_t source = 0; source < n; ++source) {
    detail::Mask seen = detail::Mask{1} << source;
    detail::Mask layer = seen;
    std::uint64_t depth = 0;
    while (layer) {
      ++depth;
      detail::Mask next = 0;
      for (detail::Mask rest = layer; rest; rest &= rest - 1) next |= masks.adjacency[std::countr_zero(rest)];
      next &= ~seen;
      distance_sum += depth * static_cast<std::uint64_t>(std::popcount(next));
      seen |= next;
      layer = next;
    }
  }
  report.wiener = Count(static_cast<unsigned long>(distance_sum / 2));
  return report;
}

/// Number of connected vertex subsets containing both u and v.
inline Count oracle_pair_count(const Tree& t, Vertex u, Vertex v) {
  const auto masks = detail::masks_of(t);
  const detail::Mask need = (detail::Mask{1} << u) | (detail::Mask{1} << v);
  std::uint64_t count = 0;
  const detail::Mask limit = detail::Mask{1} << t.order();
  for (detail::Mask s = 1; s < limit; ++s)
    if ((s & need) == need && detail::connected(s, masks.adjacency)) ++count;
  return Count(static_cast<unsigned long>(count));
}

}  // namespace subtrees::oracle
