#pragma once

#include <span>
#include <vector>

#include "polycone/polyhedron.hpp"

namespace polycone {

enum class Sense { Minimize, Maximize };

enum class LPStatus { Optimal, Unbounded, Infeasible };

std::string_view to_string(LPStatus status);

/// Outcome of an exact LP over { x : A x <= b }.
///
///  - Optimal:    `point` attains `value`. When the polyhedron has trivial
///                lineality, `point` is a vertex.
///  - Unbounded:  `ray` satisfies A ray <= 0 and strictly improves the
///                objective; `point` is some feasible point.
///  - Infeasible: `certificate` y >= 0 with y^T A = 0 and y^T b = -1.
struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Vector point;
  Rational value;
  Vector ray;
  Vector certificate;
};

LPResult solve_lp(const Polyhedron& p, VectorView c, Sense sense = Sense::Minimize);

/// Same as above on a raw row list, which may be empty (the whole space).
LPResult solve_lp(std::size_t n, std::span<const HalfSpace> rows, VectorView c,
                  Sense sense = Sense::Minimize);

bool is_feasible(const Polyhedron& p);

struct ConeMembership {
  bool member = false;
  /// Nonnegative, one per generator, reproducing the target exactly.
  Vector multipliers;
};

/// Decides target in cone(generators) by phase-I feasibility of
/// { G lambda = target, lambda >= 0 }.
ConeMembership cone_member(std::span<const Vector> generators, VectorView target);

namespace simplex {

/// min cost^T z  s.t.  M z = rhs,  z >= 0.
struct StandardForm {
  std::vector<Vector> matrix;
  Vector rhs;
  Vector cost;
};

struct Outcome {
  LPStatus status = LPStatus::Infeasible;
  Vector z;
  Rational value;
  /// Improving direction in z-space when Unbounded: M d = 0, d >= 0, cost^T d < 0.
  Vector direction;
};

/// Two-phase tableau simplex with Bland's rule; terminates on every input.
Outcome solve(const StandardForm& problem);

}  // namespace simplex

}  // namespace polycone
