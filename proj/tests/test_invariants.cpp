#include <gtest/gtest.h>

#include <bit>
#include <optional>
#include <random>

#include "helpers.hpp"
#include "subtrees/enumeration.hpp"
#include "subtrees/invariants.hpp"

using namespace subtrees;
using subtrees::testing::path_tree;
using subtrees::testing::star_tree;

namespace {

/// Star K_{1,n-q} (center 0) with a pendant on each of the leaves 1..q-1.
Tree a_nq(std::size_t n, std::size_t q) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n - q; ++v) edges.emplace_back(0, v);
  for (Vertex i = 1; i < q; ++i) edges.emplace_back(i, n - q + i);
  return Tree(n, std::move(edges));
}

/// Path 0..m-1 with pendant m+i on vertex i.
Tree corona_of_path(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < m; ++v) edges.emplace_back(v - 1, v);
  for (Vertex v = 0; v < m; ++v) edges.emplace_back(v, m + v);
  return Tree(2 * m, std::move(edges));
}

/// Largest set of pairwise disjoint edges, by trying every edge subset; the
/// lexicographically smallest sorted edge list among the largest ones.
std::vector<Edge> brute_matching(const Tree& t) {
  const auto& edges = t.edges();
  std::vector<Edge> best;
  bool have = false;
  for (std::uint32_t s = 0; s < (1u << edges.size()); ++s) {
    std::uint32_t used = 0;
    bool ok = true;
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!(s >> i & 1)) continue;
      const std::uint32_t ends = (1u << edges[i].u) | (1u << edges[i].v);
      ok = (used & ends) == 0;
      used |= ends;
      chosen.push_back(edges[i]);
    }
    if (!ok) continue;
    if (!have || chosen.size() > best.size() || (chosen.size() == best.size() && chosen < best)) {
      best = chosen;
      have = true;
    }
  }
  return best;
}

/// Smallest dominating vertex set by trying every subset; ties broken by the
/// lexicographically smallest sorted vertex list.
std::vector<Vertex> brute_domination(const Tree& t) {
  const std::size_t n = t.order();
  std::vector<std::uint32_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = 1u << v;
    for (Vertex w : t.neighbors(v)) closed[v] |= 1u << w;
  }
  const std::uint32_t all = (n == 32) ? ~0u : (1u << n) - 1;
  std::optional<std::vector<Vertex>> best;
  for (std::uint32_t s = 0; s <= all; ++s) {
    std::uint32_t cover = 0;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) cover |= closed[std::countr_zero(rest)];
    if (cover != all) continue;
    std::vector<Vertex> set;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) set.push_back(std::countr_zero(rest));
    if (!best || set.size() < best->size() || (set.size() == best->size() && set < *best)) best = set;
  }
  return *best;
}

}  // namespace

TEST(Matching, Examples) {
  EXPECT_EQ(matching_number(path_tree(6)), 3u);
  EXPECT_EQ(matching_number(star_tree(6)), 1u);
  EXPECT_EQ(matching_number(a_nq(8, 3)), 3u);
  EXPECT_EQ(matching_number(a_nq(10, 4)), 4u);
  EXPECT_EQ(matching_number(a_nq(9, 3)), 3u);
  EXPECT_EQ(matching_number(Tree()), 0u);
}

TEST(Matching, PerfectMatchingExamples) {
  EXPECT_TRUE(has_perfect_matching(path_tree(4)));
  EXPECT_FALSE(has_perfect_matching(star_tree(4)));
  EXPECT_EQ(perfect_matching(path_tree(4)), (std::vector<Edge>{Edge(0, 1), Edge(2, 3)}));
  EXPECT_FALSE(perfect_matching(star_tree(4)).has_value());
}

TEST(Matching, WitnessIsLexicographicallySmallest) {
  EXPECT_EQ(maximum_matching(path_tree(5)), (std::vector<Edge>{Edge(0, 1), Edge(2, 3)}));
  for (std::size_t n = 1; n <= 9; ++n)
    for_each_tree(n, [&](const Tree& t) { ASSERT_EQ(maximum_matching(t), brute_matching(t)); });
}

TEST(Matching, EqualsBruteForceUpToEleven) {
  for (std::size_t n = 1; n <= 11; ++n)
    for_each_tree(n, [&](const Tree& t) { ASSERT_EQ(matching_number(t), brute_matching(t).size()); });
}

TEST(Domination, Examples) {
  EXPECT_EQ(domination_number(star_tree(6)), 1u);
  EXPECT_EQ(domination_number(path_tree(6)), 2u);
  EXPECT_EQ(domination_number(corona_of_path(4)), 4u);
  EXPECT_EQ(domination_number(Tree()), 1u);
  EXPECT_EQ(minimum_dominating_set(star_tree(6)), std::vector<Vertex>{0});
  EXPECT_EQ(minimum_dominating_set(path_tree(6)), (std::vector<Vertex>{1, 4}));
}

TEST(Domination, EqualsBruteForceUpToEleven) {
  for (std::size_t n = 1; n <= 11; ++n)
    for_each_tree(n, [&](const Tree& t) {
      const auto brute = brute_domination(t);
      ASSERT_EQ(domination_number(t), brute.size());
      if (n <= 9) {
        ASSERT_EQ(minimum_dominating_set(t), brute);
      }
    });
}

TEST(Domination, WitnessOnRandomTrees) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const Tree t = random_tree(1 + rng() % 40, rng);
    const auto set = minimum_dominating_set(t);
    EXPECT_EQ(set.size(), domination_number(t));
    EXPECT_TRUE(is_dominating_set(t, set));
    EXPECT_TRUE(std::is_sorted(set.begin(), set.end()));
    const auto m = maximum_matching(t);
    EXPECT_EQ(m.size(), matching_number(t));
    std::vector<char> used(t.order(), 0);
    for (const Edge& e : m) {
      EXPECT_TRUE(t.has_edge(e.u, e.v));
      EXPECT_FALSE(used[e.u] || used[e.v]);
      used[e.u] = used[e.v] = 1;
    }
  }
}

TEST(Invariants, BoundsAndPerfectMatchingUpToTwelve) {
  for (std::size_t n = 1; n <= 12; ++n)
    for_each_tree(n, [&](const Tree& t) {
      const auto p = invariant_profile(t);
      ASSERT_LE(p.domination, p.matching == 0 ? 1 : p.matching);
      if (n >= 2) {
        ASSERT_LE(p.domination, n / 2);
        ASSERT_LE(p.domination, p.matching);
      }
      ASSERT_EQ(p.has_perfect_matching, n % 2 == 0 && 2 * p.matching == n);
      ASSERT_EQ(has_perfect_matching(t), p.has_perfect_matching);
    });
}

TEST(Profile, Path7) {
  const auto p = invariant_profile(path_tree(7));
  EXPECT_EQ(p.diameter, 6u);
  EXPECT_EQ(p.leaf_count, 2u);
  EXPECT_EQ(p.max_degree, 2u);
  EXPECT_EQ(p.domination, 3u);
  EXPECT_EQ(p.matching, 3u);
  EXPECT_EQ(p.centers, std::vector<Vertex>{3});
  EXPECT_FALSE(p.has_perfect_matching);
}
