// Recovers the blend parameter lambda of M and T on simplices and cubes
// from exactness for the mixed second-degree monomials, then certifies the
// resulting rule.

#include <iostream>

#include "simpson/exactness.hpp"

using namespace simpson;

static void show(const Region& region, const std::vector<MultiIndex>& targets) {
  const CubatureRule m = midpoint_rule(region);
  const CubatureRule t = vertex_rule(region);
  const auto outcome = solve_lambda(m, t, targets);
  const auto* u = std::get_if<UniqueSolution>(&outcome);
  if (!u) {
    std::cout << region.describe() << ": no unique lambda\n";
    return;
  }
  const CubatureRule rule = blend(u->values[0], m, t);
  const ExactnessReport rep = exactness_degree(rule, 5);
  std::cout << region.describe() << ": lambda = " << u->values[0].to_string() << ", degree " << rep.degree;
  if (rep.failing) std::cout << ", first failure " << rep.failing->label();
  std::cout << "\n";
}

int main() {
  for (unsigned n = 2; n <= 5; ++n) {
    show(Simplex{n}, {MultiIndex::unit(n, 0) + MultiIndex::unit(n, 1)});
    show(Cube{n}, {MultiIndex::unit(n, 0, 2)});
  }
}
