#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "polycone/lp.hpp"
#include "polycone/polyhedron.hpp"

namespace polycone {

enum class GLPStatus { Attained, UnboundedBelow, Infeasible, NoVertexPath };

std::string_view to_string(GLPStatus status);

/// Normal-cone certificate at one optimal vertex: the minimized cost d
/// satisfies -d = sum multipliers[i] * generators[i].
struct VertexCertificate {
  std::vector<Vector> generators;
  Vector multipliers;
};

/// Result of minimizing <d, x> over P, where d = c (Minimize) or d = -c
/// (Maximize). `value` is reported in terms of the caller's c and sense.
struct GLPSolution {
  GLPStatus status = GLPStatus::Infeasible;
  Sense sense = Sense::Minimize;
  std::vector<Vertex> optimal_vertices;
  Rational value;
  std::optional<Polyhedron> argmin_face;
  std::vector<VertexCertificate> certificate;  // parallel to optimal_vertices
  Vector ray;                                  // improving for d when UnboundedBelow
  std::vector<Vector> lineality_basis;         // nonempty when P has no vertices
};

/// Solves the general LP by testing -d in N_w at every vertex w. A nontrivial
/// lineality space is factored out first; in that case the reported vertices
/// are vertices of the quotient lifted back into P and `defining` holds
/// rank(A) rows.
GLPSolution solve_glp(const Polyhedron& p, VectorView c, Sense sense = Sense::Minimize);

struct StabilityCone {
  Vertex vertex;
  std::vector<Vector> generators;
};

/// Prices p = -c that keep the vertex optimal, i.e. the normal cone there.
StabilityCone stability_cone(const Polyhedron& p, VectorView vertex);

/// P ∩ {<c,x> = min}. Throws NotAttained when the minimum does not exist.
Polyhedron argmin_face(const Polyhedron& p, VectorView c, Sense sense = Sense::Minimize);

}  // namespace polycone
