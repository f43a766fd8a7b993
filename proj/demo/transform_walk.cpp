// Applies each transformation once and prints how F and F* move.

#include <iostream>

#include "subtrees/subtrees.hpp"

using namespace subtrees;

namespace {

void show(const char* label, const Tree& before, const TransformResult& r) {
  std::cout << label << ": F " << count_subtrees(before) << " -> " << count_subtrees(r.tree) << ", F* "
            << count_leaf_subtrees(before) << " -> " << count_leaf_subtrees(r.tree) << "\n";
}

}  // namespace

int main() {
  const Tree star = parse_tree("5\n0 1\n0 2\n0 3\n0 4\n");
  show("A on K_1,4", star, a_transform(star, 0, std::vector<Vertex>{1, 2, 3}));

  const Tree p4 = parse_tree("4\n0 1\n1 2\n2 3\n");
  show("B on P_4", p4, b_transform(p4, 1, 2));

  const Tree t = parse_tree("6\n0 1\n1 2\n2 3\n3 4\n3 5\n");
  const auto c = c_transform(t, 3);
  show(c.kind == TransformKind::C ? "C" : "Cprime", t, c);
  std::cout << serialize_tree(c.tree) << "\n";
}
