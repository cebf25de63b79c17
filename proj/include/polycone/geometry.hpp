#pragma once

#include <optional>
#include <vector>

#include "polycone/polyhedron.hpp"

namespace polycone {

/// J(x) = { i : A_i x = b_i }. Throws InfeasiblePoint if x violates a row.
IndexSet active_set(const Polyhedron& p, VectorView x);

bool contains_point(const Polyhedron& p, VectorView x);

/// All extremal points, found by solving every nonsingular n x n subsystem.
/// Sorted lexicographically by point. Cost is O(C(m, n) n^3), which is fine
/// up to a few dozen rows in low dimension.
std::vector<Vertex> enumerate_vertices(const Polyhedron& p);

/// The Vertex record at x when x is extremal in P, otherwise nullopt.
std::optional<Vertex> vertex_at(const Polyhedron& p, VectorView x);

/// { v : A_i v <= 0, i in J(x) }; the whole space at interior points.
Cone tangent_cone(const Polyhedron& p, VectorView x);

/// cone{ a_i : i in J(x) }; the trivial cone at interior points.
Cone normal_cone(const Polyhedron& p, VectorView x);

struct RecessionInfo {
  Cone recession;                      // { v : A v <= 0 }
  std::vector<Vector> lineality_basis;  // basis of { v : A v = 0 }
};

RecessionInfo recession_and_lineality(const Polyhedron& p);

/// Bounded iff max <+-e_j, v> over A v <= 0 is 0 for every j.
bool is_bounded(const Polyhedron& p);

/// Extreme rays of the recession cone of a polyhedron with trivial
/// lineality, from every rank-(n-1) subsystem of A v = 0. No LP involved.
std::vector<Vector> recession_extreme_rays(const Polyhedron& p);

StructureReport structure(const Polyhedron& p);

/// Drops row i when the remaining rows already imply it; rows are visited in
/// order so the survivors keep their relative order.
Polyhedron remove_redundant(const Polyhedron& p);

/// Indices kept by remove_redundant.
IndexSet irredundant_rows(const Polyhedron& p);

struct Containment {
  bool contained = false;
  std::optional<Vector> witness;       // point of the inner set outside the outer one
  std::optional<std::size_t> violated;  // outer row the witness breaks
};

/// Decides inner ⊆ outer exactly.
Containment poly_contains(const Polyhedron& outer, const Polyhedron& inner);

/// ⋂_w (C_w(P) + w) over all vertices w, as one H-polyhedron.
Polyhedron vertex_cone_intersection(const Polyhedron& p);

/// The vertex-cone intersection equals P (both inclusions, exact).
bool reconstruct_check(const Polyhedron& p);

}  // namespace polycone
