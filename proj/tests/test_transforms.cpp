#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "helpers.hpp"
#include "subtrees/canonical.hpp"
#include "subtrees/counting.hpp"
#include "subtrees/enumeration.hpp"
#include "subtrees/oracle.hpp"
#include "subtrees/structure.hpp"
#include "subtrees/transforms.hpp"

using namespace subtrees;
using subtrees::testing::path_tree;
using subtrees::testing::star_tree;

namespace {

void expect_error(const std::function<void()>& fn, ErrorKind kind) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

std::size_t leaf_count(const Tree& t) {
  std::size_t leaves = 0;
  for (Vertex v = 0; v < t.order(); ++v) leaves += t.degree(v) == 1 ? 1 : 0;
  return leaves;
}

/// z-u-w-v with two pendants a, b on v; labels z=0 u=1 w=2 v=3 a=4 b=5.
Tree c_instance() { return Tree(6, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(3, 5)}); }

Tree spider(const std::vector<std::size_t>& legs) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t len : legs) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i, ++next) {
      edges.emplace_back(prev, next);
      prev = next;
    }
  }
  return Tree(next, std::move(edges));
}

}  // namespace

TEST(ATransform, StarBranchesBecomePath) {
  const Tree k14 = star_tree(5);
  const auto r = a_transform(k14, 0, std::vector<Vertex>{1, 2, 3});
  EXPECT_TRUE(is_isomorphic(r.tree, path_tree(5)));
  EXPECT_EQ(r.kind, TransformKind::A);
  EXPECT_EQ(count_subtrees(k14), 20);
  EXPECT_EQ(count_subtrees(r.tree), 15);
  EXPECT_EQ(count_leaf_subtrees(k14), 19);
  EXPECT_EQ(count_leaf_subtrees(r.tree), 9);
}

TEST(ATransform, PathBranchIsFixedPoint) {
  const Tree t = Tree(6, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(3, 4), Edge(4, 5)});
  const auto r = a_transform(t, 0, 3);
  EXPECT_TRUE(is_isomorphic(r.tree, t));
  EXPECT_EQ(count_subtrees(r.tree), count_subtrees(t));
}

TEST(ATransform, Errors) {
  const Tree p = path_tree(5);
  expect_error([&] { a_transform(p, 0, 2); }, ErrorKind::BadAnchor);
  expect_error([&] { a_transform(p, 9, 1); }, ErrorKind::BadAnchor);
  expect_error([&] { a_transform(p, 1, std::vector<Vertex>{}); }, ErrorKind::BadAnchor);
  expect_error([&] { a_transform(p, 1, std::vector<Vertex>{2, 2}); }, ErrorKind::BadAnchor);
}

TEST(BTransform, P4MiddleEdgeGivesStar) {
  const Tree p4 = path_tree(4);
  const auto r = b_transform(p4, 1, 2);
  EXPECT_TRUE(is_isomorphic(r.tree, star_tree(4)));
  EXPECT_EQ(count_subtrees(p4), 10);
  EXPECT_EQ(count_subtrees(r.tree), 11);
  EXPECT_EQ(count_leaf_subtrees(p4), 7);
  EXPECT_EQ(count_leaf_subtrees(r.tree), 10);
}

TEST(BTransform, P6GivesSpider221) {
  const Tree p6 = path_tree(6);
  const auto r = b_transform(p6, 2, 3);
  EXPECT_TRUE(is_isomorphic(r.tree, spider({2, 2, 1})));
  EXPECT_GT(count_subtrees(r.tree), count_subtrees(p6));
}

TEST(BTransform, Labeling) {
  const auto r = b_transform(path_tree(6), 2, 3);
  EXPECT_EQ(r.label_map, (std::vector<Vertex>{0, 1, 2, 2, 3, 4}));
  EXPECT_TRUE(r.tree.has_edge(2, 5));
  EXPECT_EQ(r.tree.degree(5), 1u);
}

TEST(BTransform, Errors) {
  const Tree p = path_tree(4);
  expect_error([&] { b_transform(p, 0, 1); }, ErrorKind::SideTooSmall);
  expect_error([&] { b_transform(p, 0, 2); }, ErrorKind::BadAnchor);
  expect_error([&] { b_transform(p, 1, 7); }, ErrorKind::BadAnchor);
}

TEST(CTransform, ExampleGivesSpiderAtW) {
  const Tree t = c_instance();
  const auto r = c_transform(t, 3);
  EXPECT_EQ(r.kind, TransformKind::C);
  EXPECT_TRUE(is_isomorphic(r.tree, spider({2, 2, 1})));
  EXPECT_TRUE(r.tree.has_edge(2, 5));
  EXPECT_TRUE(r.tree.has_edge(3, 4));
  EXPECT_EQ(count_subtrees(t), 24);
  EXPECT_EQ(count_subtrees(r.tree), 25);
  EXPECT_GT(count_leaf_subtrees(r.tree), count_leaf_subtrees(t));
}

TEST(CTransform, KeepsLongestPathChild) {
  // Center 2; v = 4 has children 5 (pendant) and 6-7 (path of two).
  const Tree u(10, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(4, 6), Edge(6, 7), Edge(0, 8),
                    Edge(8, 9)});
  ASSERT_EQ(centers(u), (std::vector<Vertex>{2}));
  const auto r = c_transform(u, 4);
  EXPECT_TRUE(r.tree.has_edge(4, 6));
  EXPECT_TRUE(r.tree.has_edge(3, 5));
}

TEST(CTransform, PrimeVariantOnBicentralTree) {
  // Centers 2 and 3, both of degree 3.
  const Tree t(8, {Edge(0, 1), Edge(1, 2), Edge(2, 6), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(3, 7)});
  ASSERT_EQ(centers(t).size(), 2u);
  const auto r = c_transform(t, 3);
  EXPECT_EQ(r.kind, TransformKind::Cprime);
  EXPECT_GT(count_subtrees(r.tree), count_subtrees(t));
  EXPECT_GT(count_leaf_subtrees(r.tree), count_leaf_subtrees(t));
  expect_error([&] { apply_transform(t, {TransformKind::C, 0, 3, {}}); }, ErrorKind::CenterViolation);
}

TEST(CTransform, Errors) {
  expect_error([] { c_transform(star_tree(5), 0); }, ErrorKind::CenterViolation);
  expect_error([] { c_transform(path_tree(5), 3); }, ErrorKind::BadAnchor);
  // Bicentral with the other center of degree 2.
  const Tree bic(7, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(3, 6)});
  ASSERT_EQ(centers(bic), (std::vector<Vertex>{2, 3}));
  expect_error([&] { c_transform(bic, 3); }, ErrorKind::CenterViolation);
  // Both child branches of v = 2 fork.
  const Tree bushy(13, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(2, 4), Edge(3, 5), Edge(3, 6), Edge(4, 7),
                        Edge(4, 8), Edge(0, 9), Edge(9, 10), Edge(10, 11), Edge(11, 12)});
  ASSERT_EQ(centers(bushy), (std::vector<Vertex>{0}));
  expect_error([&] { c_transform(bushy, 2); }, ErrorKind::NoPathChild);
}

TEST(Transforms, RandomInstancesKeepTreeShapeAndInequalities) {
  std::mt19937_64 rng(11);
  std::size_t a_done = 0, b_done = 0, c_done = 0;
  for (int i = 0; i < 600; ++i) {
    const Tree t = random_tree(4 + rng() % 13, rng);
    const Vertex u = rng() % t.order();
    const auto& nb = t.neighbors(u);
    const Vertex c = nb[rng() % nb.size()];
    if (t.degree(u) >= 2 && branch_vertices(t, u, c).size() >= 2) {
      const auto r = a_transform(t, u, c);
      EXPECT_EQ(r.tree.order(), t.order());
      EXPECT_GE(count_subtrees(t), count_subtrees(r.tree));
      EXPECT_GE(count_leaf_subtrees(t), count_leaf_subtrees(r.tree));
      ++a_done;
    }
    if (t.degree(u) >= 2 && t.degree(c) >= 2) {
      const auto r = b_transform(t, u, c);
      EXPECT_EQ(r.tree.order(), t.order());
      EXPECT_LT(count_subtrees(t), count_subtrees(r.tree));
      EXPECT_LT(count_leaf_subtrees(t), count_leaf_subtrees(r.tree));
      ++b_done;
    }
    for (Vertex v = 0; v < t.order(); ++v) {
      try {
        const auto r = c_transform(t, v);
        EXPECT_EQ(leaf_count(r.tree), leaf_count(t));
        EXPECT_LE(diameter(r.tree), diameter(t));
        EXPECT_LT(count_subtrees(t), count_subtrees(r.tree));
        EXPECT_LT(count_leaf_subtrees(t), count_leaf_subtrees(r.tree));
        ++c_done;
      } catch (const Error&) {
      }
    }
  }
  EXPECT_GT(a_done, 100u);
  EXPECT_GT(b_done, 100u);
  EXPECT_GT(c_done, 100u);
}

TEST(Transforms, OracleAgreesOnBothSides) {
  const Tree t = c_instance();
  const auto r = c_transform(t, 3);
  EXPECT_EQ(oracle::oracle_counts(t).F, 24);
  EXPECT_EQ(oracle::oracle_counts(r.tree).F, 25);
  EXPECT_EQ(oracle::oracle_counts(b_transform(path_tree(4), 1, 2).tree).F, 11);
}

TEST(Transforms, ApplyDispatches) {
  const Tree p4 = path_tree(4);
  EXPECT_EQ(apply_transform(p4, {TransformKind::B, 1, 2, {}}).kind, TransformKind::B);
  EXPECT_EQ(apply_transform(star_tree(5), {TransformKind::A, 0, 0, {1, 2}}).kind, TransformKind::A);
  EXPECT_EQ(to_string(TransformKind::Cprime), "Cprime");
}
