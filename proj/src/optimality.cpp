#include "polycone/optimality.hpp"

#include <algorithm>

#include "polycone/error.hpp"
#include "polycone/geometry.hpp"
#include "polycone/linalg.hpp"

namespace polycone {

std::string_view to_string(GLPStatus status) {
  switch (status) {
    case GLPStatus::Attained: return "Attained";
    case GLPStatus::UnboundedBelow: return "UnboundedBelow";
    case GLPStatus::Infeasible: return "Infeasible";
    case GLPStatus::NoVertexPath: return "NoVertexPath";
  }
  return "Unknown";
}

namespace {

// P = Q + L with L the lineality space; Q lives in the row space of A,
// parametrized by the coordinates y of x = sum_k y_k basis[k].
struct Quotient {
  std::vector<Vector> basis;
  Polyhedron reduced;

  Vector lift(VectorView y) const {
    Vector x(basis.front().size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += y[k] * basis[k][j];
    return x;
  }
};

Quotient quotient_by_lineality(const Polyhedron& p) {
  const auto normals = p.normals();
  std::vector<Vector> basis;
  for (auto i : linalg::independent_rows(normals, p.dim())) basis.push_back(normals[i]);
  std::vector<HalfSpace> rows;
  rows.reserve(p.size());
  for (const auto& h : p.rows()) {
    Vector a(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) a[k] = dot(h.a, basis[k]);
    rows.push_back(HalfSpace{std::move(a), h.b});
  }
  Polyhedron reduced(basis.size(), std::move(rows));
  return Quotient{std::move(basis), std::move(reduced)};
}

Polyhedron level_face(const Polyhedron& p, VectorView d, const Rational& level) {
  if (is_zero(d)) return p;
  Vector neg(d.begin(), d.end());
  for (auto& x : neg) x = -x;
  const HalfSpace extra[] = {HalfSpace{Vector(d.begin(), d.end()), level},
                             HalfSpace{std::move(neg), -level}};
  return p.with_rows(extra);
}

}  // namespace

GLPSolution solve_glp(const Polyhedron& p, VectorView c, Sense sense) {
  if (c.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "cost length differs from n");
  const std::size_t n = p.dim();
  Vector d(c.begin(), c.end());
  if (sense == Sense::Maximize)
    for (auto& x : d) x = -x;

  GLPSolution sol;
  sol.sense = sense;
  sol.lineality_basis = linalg::nullspace(p.normals(), n);

  std::vector<Vertex> candidates;
  if (sol.lineality_basis.empty()) {
    candidates = enumerate_vertices(p);
  } else {
    const Quotient q = quotient_by_lineality(p);
    for (auto& v : enumerate_vertices(q.reduced)) {
      Vector x = q.lift(v.point);
      candidates.push_back(Vertex{x, active_set(p, x), std::move(v.defining)});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Vertex& a, const Vertex& b) { return a.point < b.point; });
  }

  const bool feasible = is_feasible(p);
  if (!feasible) {
    if (!candidates.empty())
      throw Error(ErrorCode::Internal, "vertices found on a polyhedron the LP calls empty");
    sol.status = GLPStatus::Infeasible;
    return sol;
  }
  if (candidates.empty()) {
    sol.status = GLPStatus::NoVertexPath;
    return sol;
  }

  if (!sol.lineality_basis.empty()) {
    Vector along = linalg::project_onto_span(sol.lineality_basis, d);
    if (!is_zero(along)) {
      for (auto& x : along) x = -x;
      sol.status = GLPStatus::UnboundedBelow;
      sol.ray = std::move(along);
      return sol;
    }
  }

  Vector target = d;
  for (auto& x : target) x = -x;
  for (auto& w : candidates) {
    auto gens = normal_cone(p, w.point).generators();
    auto m = cone_member(gens, target);
    if (!m.member) continue;
    const Rational val = dot(d, w.point);
    if (!sol.optimal_vertices.empty() && val != dot(d, sol.optimal_vertices.front().point))
      throw Error(ErrorCode::Internal, "normal-cone optimal vertices disagree on the value");
    sol.optimal_vertices.push_back(std::move(w));
    sol.certificate.push_back(VertexCertificate{std::move(gens), std::move(m.multipliers)});
  }

  if (sol.optimal_vertices.empty()) {
    const auto lp = solve_lp(p, d);
    if (lp.status != LPStatus::Unbounded)
      throw Error(ErrorCode::Internal, "no vertex certificate but the LP is not unbounded");
    sol.status = GLPStatus::UnboundedBelow;
    sol.ray = lp.ray;
    return sol;
  }

  const Rational min_value = dot(d, sol.optimal_vertices.front().point);
  sol.status = GLPStatus::Attained;
  sol.value = sense == Sense::Maximize ? Rational(-min_value) : min_value;
  sol.argmin_face = level_face(p, d, min_value);
  return sol;
}

StabilityCone stability_cone(const Polyhedron& p, VectorView vertex) {
  auto v = vertex_at(p, vertex);
  if (!v) throw Error(ErrorCode::NotAVertex, to_string(vertex) + " is not a vertex");
  auto gens = normal_cone(p, v->point).generators();
  return StabilityCone{std::move(*v), std::move(gens)};
}

Polyhedron argmin_face(const Polyhedron& p, VectorView c, Sense sense) {
  auto sol = solve_glp(p, c, sense);
  if (sol.status != GLPStatus::Attained)
    throw Error(ErrorCode::NotAttained,
                std::string("optimum not attained: ") + std::string(to_string(sol.status)));
  return std::move(*sol.argmin_face);
}

}  // namespace polycone
