// Builds a rule on a user-supplied polygon from free weights, checks it,
// and prints it as JSON.

#include <iostream>

#include "simpson/exactness.hpp"

using namespace simpson;

int main() {
  // an L-shaped hexagon
  const Region region = Polygon({{Scalar(0), Scalar(0)},
                                 {Scalar(2), Scalar(0)},
                                 {Scalar(2), Scalar(1)},
                                 {Scalar(1), Scalar(1)},
                                 {Scalar(1), Scalar(2)},
                                 {Scalar(0), Scalar(2)}});
  std::vector<Point> nodes{centroid(region)};
  for (const auto& v : vertices(region)) nodes.push_back(v);

  const auto outcome = solve_weights(region, nodes, degree_targets(2, 1));
  if (const auto* u = std::get_if<Underdetermined>(&outcome)) {
    std::cout << "degree-1 weights are not unique (nullity " << u->nullity << "), particular solution:\n";
    const CubatureRule rule(region, nodes, u->particular, "L-shape");
    for (std::size_t i = 0; i < rule.size(); ++i)
      std::cout << "  " << CubatureRule::point_text(rule.nodes()[i]) << "  " << rule.weights()[i].to_string() << "\n";
    std::cout << "certified degree " << exactness_degree(rule, 4).degree << "\n";
  }

  const auto quadratic = solve_weights(region, nodes, degree_targets(2, 2));
  if (const auto* f = std::get_if<Infeasible>(&quadratic))
    std::cout << "degree 2 with these nodes: infeasible, " << f->description << "\n";
  else if (std::holds_alternative<UniqueSolution>(quadratic))
    std::cout << "degree 2 with these nodes: unique weights\n";
  else
    std::cout << "degree 2 with these nodes: a family of weights\n";
}
