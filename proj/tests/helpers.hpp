#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "subtrees/tree.hpp"

namespace subtrees::testing {

inline Tree path_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Tree(n, std::move(edges));
}

/// K_{1,n-1} with center 0.
inline Tree star_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Tree(n, std::move(edges));
}

template <typename Rng>
std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace subtrees::testing
