#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polycone/rational.hpp"

namespace polycone {

/// Sorted, duplicate-free constraint indices (0-based).
using IndexSet = std::vector<std::size_t>;

/// The half-space <a, x> <= b. Canonical form scales the row so that the
/// largest |a_j| equals 1; the normal is never zero.
struct HalfSpace {
  Vector a;
  Rational b;

  static HalfSpace canonical(Vector a, Rational b);

  bool contains(VectorView x) const { return dot(a, x) <= b; }
  bool tight_at(VectorView x) const { return dot(a, x) == b; }

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// { x in R^n : A x <= b } with at least one row. Feasibility is not an
/// invariant; empty polyhedra are representable.
class Polyhedron {
 public:
  Polyhedron(std::size_t n, std::vector<HalfSpace> rows);

  std::size_t dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<HalfSpace>& rows() const noexcept { return rows_; }
  const HalfSpace& operator[](std::size_t i) const { return rows_[i]; }

  std::vector<Vector> normals() const;
  Polyhedron with_rows(std::span<const HalfSpace> extra) const;
  Polyhedron select(const IndexSet& keep) const;

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

 private:
  std::size_t n_;
  std::vector<HalfSpace> rows_;
};

/// Polyhedral cone, held either as { v : <a_i, v> <= 0 } (tangent-cone form)
/// or as the nonnegative span of generators (normal-cone form). An empty row
/// list is R^n; an empty generator list is {0}.
class Cone {
 public:
  enum class Form { HalfSpaces, Generators };

  static Cone from_rows(std::size_t n, std::vector<Vector> normals);
  static Cone from_generators(std::size_t n, std::vector<Vector> generators);

  Form form() const noexcept { return form_; }
  std::size_t dim() const noexcept { return n_; }
  /// Canonical normals of the H-form (offsets are zero).
  const std::vector<Vector>& rows() const;
  /// Canonical (L-infinity scaled) pairwise-distinct generators.
  const std::vector<Vector>& generators() const;

  /// Exact membership for the H-form.
  bool contains(VectorView v) const;

  /// Same canonical rows (or generators) up to order and repetition.
  bool same_description(const Cone& other) const;

 private:
  Cone(Form form, std::size_t n, std::vector<Vector> data)
      : form_(form), n_(n), data_(std::move(data)) {}

  Form form_;
  std::size_t n_;
  std::vector<Vector> data_;
};

/// Extremal point with its active set and the lexicographically smallest
/// nonsingular n-subset of active rows that pins it down.
struct Vertex {
  Vector point;
  IndexSet active;
  IndexSet defining;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct StructureReport {
  IndexSet implicit_equalities;
  std::size_t dimension = 0;
  std::vector<Vector> lineality_basis;
  std::size_t facet_count = 0;
  std::size_t vertex_count = 0;
};

}  // namespace polycone
