// Counts subtrees of a few named trees and compares against the closed forms.

#include <iostream>

#include "subtrees/subtrees.hpp"

using namespace subtrees;

int main() {
  const Tree t = parse_tree("5\n0 1\n1 2\n2 3\n3 4\n");
  const CountReport r = count_report(t);
  std::cout << "P_5: F = " << r.F << ", F* = " << r.Fstar << ", W = " << r.wiener << "\n";

  for (const FamilySpec& spec : {make_spec(Family::A_nq, {{"n", 10}, {"q", 3}}),
                                 make_spec(Family::T_nDelta, {{"n", 10}, {"delta", 4}}),
                                 make_spec(Family::spider_Tnk, {{"n", 10}, {"k", 3}})}) {
    const Tree member = construct(spec);
    const ClosedForm cf = closed_form(spec, Quantity::Fstar);
    std::cout << spec.describe() << ": F* = " << count_leaf_subtrees(member) << " (formula " << cf.value << ", "
              << cf.formula_id << ")\n";
  }

  // Counts are arbitrary precision; a 200-leaf star is far past 64 bits.
  const Tree big = construct(make_spec(Family::star, {{"n", 201}}));
  std::cout << "F(K_1,200) = " << count_subtrees(big) << "\n";
}
