// Re-derives the maximum of F over trees with a given matching number by
// brute enumeration, then runs the packaged check for the same range.

#include <iostream>

#include "subtrees/subtrees.hpp"

using namespace subtrees;

int main() {
  const std::size_t n = 10, q = 3;
  TreeConstraint c;
  c.matching = q;
  Count best = 0;
  for (const Tree& t : trees_matching(n, c)) best = std::max(best, count_subtrees(t));
  const auto spec = make_spec(Family::A_nq, {{"n", static_cast<std::int64_t>(n)}, {"q", static_cast<std::int64_t>(q)}});
  std::cout << "max F over matching number " << q << " at n = " << n << ": " << best << " (A(n,q) gives "
            << count_subtrees(construct(spec)) << ")\n";

  const auto results = verify_theorem("T4.1", 4, 12, 2);
  std::cout << results.size() << " results, " << (all_pass(results) ? "all pass" : "FAILURES") << "\n";
  return all_pass(results) ? 0 : 1;
}
