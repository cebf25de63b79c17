#include "polycone/geometry.hpp"

#include <algorithm>
#include <map>

#include "polycone/combinations.hpp"
#include "polycone/error.hpp"
#include "polycone/linalg.hpp"
#include "polycone/lp.hpp"

namespace polycone {

namespace {

void check_point(const Polyhedron& p, VectorView x) {
  if (x.size() != p.dim())
    throw Error(ErrorCode::DimensionMismatch, "point length differs from the ambient dimension");
}

void require_feasible(const Polyhedron& p) {
  if (!is_feasible(p)) throw Error(ErrorCode::EmptyPolyhedron, "polyhedron is empty");
}

Vector unit(std::size_t n, std::size_t j, int sign) {
  Vector e(n);
  e[j] = sign;
  return e;
}

// max <a, x> over `rows` is attained and <= bound.
bool implied(std::size_t n, std::span<const HalfSpace> rows, const HalfSpace& h) {
  if (rows.empty()) return false;
  const auto r = solve_lp(n, rows, h.a, Sense::Maximize);
  return r.status == LPStatus::Optimal && r.value <= h.b;
}

}  // namespace

IndexSet active_set(const Polyhedron& p, VectorView x) {
  check_point(p, x);
  IndexSet out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational lhs = dot(p[i].a, x);
    if (lhs > p[i].b)
      throw Error(ErrorCode::InfeasiblePoint,
                  "point " + to_string(x) + " violates constraint " + std::to_string(i));
    if (lhs == p[i].b) out.push_back(i);
  }
  return out;
}

bool contains_point(const Polyhedron& p, VectorView x) {
  check_point(p, x);
  return std::all_of(p.rows().begin(), p.rows().end(),
                     [&](const HalfSpace& h) { return h.contains(x); });
}

std::vector<Vertex> enumerate_vertices(const Polyhedron& p) {
  const std::size_t n = p.dim();
  std::map<Vector, Vertex> found;
  std::vector<Vector> sub(n);
  Vector rhs(n);
  for_each_combination(p.size(), n, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t k = 0; k < n; ++k) {
      sub[k] = p[idx[k]].a;
      rhs[k] = p[idx[k]].b;
    }
    auto x = linalg::solve_square(sub, rhs);
    if (!x || found.count(*x) || !contains_point(p, *x)) return true;
    Vertex v{*x, active_set(p, *x), IndexSet(idx.begin(), idx.end())};
    found.emplace(std::move(*x), std::move(v));
    return true;
  });
  std::vector<Vertex> out;
  out.reserve(found.size());
  for (auto& [pt, v] : found) out.push_back(std::move(v));
  return out;
}

std::optional<Vertex> vertex_at(const Polyhedron& p, VectorView x) {
  check_point(p, x);
  if (!contains_point(p, x)) return std::nullopt;
  const std::size_t n = p.dim();
  Vertex v{Vector(x.begin(), x.end()), active_set(p, x), {}};
  std::vector<Vector> sub(n);
  for_each_combination(v.active.size(), n, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t k = 0; k < n; ++k) sub[k] = p[v.active[idx[k]]].a;
    if (linalg::rank(sub, n) < n) return true;
    for (auto k : idx) v.defining.push_back(v.active[k]);
    return false;
  });
  if (v.defining.empty()) return std::nullopt;
  return v;
}

Cone tangent_cone(const Polyhedron& p, VectorView x) {
  std::vector<Vector> rows;
  for (auto i : active_set(p, x)) rows.push_back(p[i].a);
  return Cone::from_rows(p.dim(), std::move(rows));
}

Cone normal_cone(const Polyhedron& p, VectorView x) {
  std::vector<Vector> gens;
  for (auto i : active_set(p, x)) gens.push_back(p[i].a);
  return Cone::from_generators(p.dim(), std::move(gens));
}

RecessionInfo recession_and_lineality(const Polyhedron& p) {
  require_feasible(p);
  const auto normals = p.normals();
  return RecessionInfo{Cone::from_rows(p.dim(), normals), linalg::nullspace(normals, p.dim())};
}

bool is_bounded(const Polyhedron& p) {
  require_feasible(p);
  const std::size_t n = p.dim();
  std::vector<HalfSpace> cone;
  cone.reserve(p.size());
  for (const auto& h : p.rows()) cone.push_back(HalfSpace{h.a, Rational(0)});
  for (std::size_t j = 0; j < n; ++j)
    for (int sign : {1, -1})
      if (solve_lp(n, cone, unit(n, j, sign), Sense::Maximize).status != LPStatus::Optimal)
        return false;
  return true;
}

std::vector<Vector> recession_extreme_rays(const Polyhedron& p) {
  const std::size_t n = p.dim();
  const auto normals = p.normals();
  if (linalg::rank(normals, n) < n)
    throw Error(ErrorCode::InvalidArgument, "recession cone has a nontrivial lineality space");
  std::vector<Vector> rays;
  std::vector<Vector> sub;
  for_each_combination(p.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
    sub.clear();
    for (auto i : idx) sub.push_back(normals[i]);
    const auto null = linalg::nullspace(sub, n);
    if (null.size() != 1) return true;
    for (int sign : {1, -1}) {
      Vector r = null.front();
      if (sign < 0)
        for (auto& x : r) x = -x;
      const bool in_cone = std::all_of(normals.begin(), normals.end(),
                                       [&](const Vector& a) { return dot(a, r) <= 0; });
      if (!in_cone) continue;
      r = linf_normalized(r);
      if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(std::move(r));
    }
    return true;
  });
  std::sort(rays.begin(), rays.end());
  return rays;
}

StructureReport structure(const Polyhedron& p) {
  require_feasible(p);
  const std::size_t n = p.dim();
  StructureReport rep;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto r = solve_lp(p, p[i].a, Sense::Minimize);
    if (r.status == LPStatus::Optimal && r.value == p[i].b) rep.implicit_equalities.push_back(i);
  }
  std::vector<Vector> eq_normals;
  std::vector<HalfSpace> eq_rows;
  for (auto i : rep.implicit_equalities) {
    eq_normals.push_back(p[i].a);
    eq_rows.push_back(p[i]);
  }
  rep.dimension = n - linalg::rank(eq_normals, n);

  // Redundancy of each remaining inequality, with the implicit equalities
  // always present so the test is relative to the affine hull.
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!std::binary_search(rep.implicit_equalities.begin(), rep.implicit_equalities.end(), i))
      kept.push_back(i);
  for (std::size_t pos = 0; pos < kept.size();) {
    std::vector<HalfSpace> others = eq_rows;
    for (std::size_t q = 0; q < kept.size(); ++q)
      if (q != pos) others.push_back(p[kept[q]]);
    if (implied(n, others, p[kept[pos]]))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pos));
    else
      ++pos;
  }
  rep.facet_count = kept.size();
  rep.lineality_basis = linalg::nullspace(p.normals(), n);
  rep.vertex_count = enumerate_vertices(p).size();
  return rep;
}

IndexSet irredundant_rows(const Polyhedron& p) {
  require_feasible(p);
  IndexSet kept(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) kept[i] = i;
  for (std::size_t pos = 0; pos < kept.size();) {
    std::vector<HalfSpace> others;
    for (std::size_t q = 0; q < kept.size(); ++q)
      if (q != pos) others.push_back(p[kept[q]]);
    if (implied(p.dim(), others, p[kept[pos]]))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pos));
    else
      ++pos;
  }
  return kept;
}

Polyhedron remove_redundant(const Polyhedron& p) { return p.select(irredundant_rows(p)); }

Containment poly_contains(const Polyhedron& outer, const Polyhedron& inner) {
  if (outer.dim() != inner.dim())
    throw Error(ErrorCode::DimensionMismatch, "containment test across different dimensions");
  Containment res;
  res.contained = true;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const auto& h = outer[i];
    const auto r = solve_lp(inner, h.a, Sense::Maximize);
    if (r.status == LPStatus::Infeasible) return res;  // empty set is inside everything
    if (r.status == LPStatus::Optimal) {
      if (r.value <= h.b) continue;
      res.witness = r.point;
    } else {
      // Walk far enough along the improving ray to cross the bound.
      const Rational gap = h.b - dot(h.a, r.point);
      Rational t = (gap > 0 ? gap : Rational(0)) / dot(h.a, r.ray) + 1;
      Vector w = r.point;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] += t * r.ray[j];
      res.witness = std::move(w);
    }
    res.contained = false;
    res.violated = i;
    return res;
  }
  return res;
}

Polyhedron vertex_cone_intersection(const Polyhedron& p) {
  const auto verts = enumerate_vertices(p);
  if (verts.empty()) throw Error(ErrorCode::NoVertices, "polyhedron has no vertices");
  std::vector<HalfSpace> rows;
  for (const auto& w : verts) {
    const Cone c = tangent_cone(p, w.point);
    for (const auto& a : c.rows()) rows.push_back(HalfSpace{a, dot(a, w.point)});
  }
  return Polyhedron(p.dim(), std::move(rows));
}

bool reconstruct_check(const Polyhedron& p) {
  const Polyhedron r = vertex_cone_intersection(p);
  return poly_contains(r, p).contained && poly_contains(p, r).contained;
}

}  // namespace polycone
