#pragma once

#include <vector>

#include "ratpoints/poly.hpp"

namespace ratpoints {

struct PolySystem {
  std::vector<MultiPoly> equations;
  std::vector<Var> variables;  // ordered, duplicate-free
};

/// One value per declared variable, in declaration order.
using Solution = std::vector<Rational>;

/// All rational solutions of a system with finitely many complex solutions,
/// sorted lexicographically. Throws NotZeroDimensional when every elimination
/// order degenerates, InvalidArgument when an equation uses an undeclared
/// variable.
std::vector<Solution> rational_solutions(const PolySystem& s);

}  // namespace ratpoints
