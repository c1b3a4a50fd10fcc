#pragma once

#include "gpm/matrix.hpp"
#include "gpm/model.hpp"
#include "gpm/permutation.hpp"

namespace gpm {

enum class Direction { Minimize, Maximize };

struct AssignmentSolution {
  Permutation permutation;
  double objective = 0.0;
  Direction direction = Direction::Minimize;
  // True when the optimal dual certificate admits a second perfect matching
  // of zero-reduced-cost arcs, i.e. a zero-gap alternative optimum exists.
  bool alternative_optimum = false;
};

// Exact dense linear assignment, Jonker-Volgenant shortest augmenting path,
// O(n^3) worst case. Deterministic scan order, so tied inputs resolve the
// same way on every run.
AssignmentSolution solve_assignment(const Matrix& cost, Direction direction);

// Exhaustive optimum over all n! permutations in lexicographic order with
// strict improvement, hence the lexicographically smallest optimum. n <= 10.
AssignmentSolution brute_force_assignment(const Matrix& cost, Direction direction);

// The matching minimizing total squared distance for an instance.
AssignmentSolution mle(const Instance& inst);

double assignment_objective(const Matrix& cost, const Permutation& perm);

}  // namespace gpm
