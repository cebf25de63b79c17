#include "polycone/polyhedron.hpp"

#include <algorithm>

#include "polycone/error.hpp"

namespace polycone {

HalfSpace HalfSpace::canonical(Vector a, Rational b) {
  const Rational scale = max_abs(a);
  if (scale == 0)
    throw Error(ErrorCode::InvalidArgument, "half-space normal must be nonzero");
  for (auto& x : a) x /= scale;
  b /= scale;
  return HalfSpace{std::move(a), std::move(b)};
}

Polyhedron::Polyhedron(std::size_t n, std::vector<HalfSpace> rows) : n_(n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be positive");
  if (rows.empty())
    throw Error(ErrorCode::InvalidArgument, "a polyhedron needs at least one constraint");
  rows_.reserve(rows.size());
  for (auto& h : rows) {
    if (h.a.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "constraint length differs from n");
    rows_.push_back(HalfSpace::canonical(std::move(h.a), std::move(h.b)));
  }
}

std::vector<Vector> Polyhedron::normals() const {
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (const auto& h : rows_) out.push_back(h.a);
  return out;
}

Polyhedron Polyhedron::with_rows(std::span<const HalfSpace> extra) const {
  std::vector<HalfSpace> all = rows_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Polyhedron(n_, std::move(all));
}

Polyhedron Polyhedron::select(const IndexSet& keep) const {
  std::vector<HalfSpace> picked;
  picked.reserve(keep.size());
  for (auto i : keep) picked.push_back(rows_.at(i));
  return Polyhedron(n_, std::move(picked));
}

Cone Cone::from_rows(std::size_t n, std::vector<Vector> normals) {
  for (auto& a : normals) {
    if (a.size() != n) throw Error(ErrorCode::DimensionMismatch, "cone row length differs from n");
    a = linf_normalized(a);
  }
  return Cone(Form::HalfSpaces, n, std::move(normals));
}

Cone Cone::from_generators(std::size_t n, std::vector<Vector> generators) {
  std::vector<Vector> unique;
  for (auto& g : generators) {
    if (g.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "generator length differs from n");
    if (is_zero(g)) throw Error(ErrorCode::InvalidArgument, "cone generators must be nonzero");
    Vector c = linf_normalized(g);
    if (std::find(unique.begin(), unique.end(), c) == unique.end())
      unique.push_back(std::move(c));
  }
  return Cone(Form::Generators, n, std::move(unique));
}

const std::vector<Vector>& Cone::rows() const {
  if (form_ != Form::HalfSpaces)
    throw Error(ErrorCode::InvalidArgument, "cone is held in generator form");
  return data_;
}

const std::vector<Vector>& Cone::generators() const {
  if (form_ != Form::Generators)
    throw Error(ErrorCode::InvalidArgument, "cone is held in half-space form");
  return data_;
}

bool Cone::contains(VectorView v) const {
  if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from n");
  for (const auto& a : rows())
    if (dot(a, v) > 0) return false;
  return true;
}

bool Cone::same_description(const Cone& other) const {
  if (form_ != other.form_ || n_ != other.n_) return false;
  auto lhs = data_;
  auto rhs = other.data_;
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());
  rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
  return lhs == rhs;
}

}  // namespace polycone
