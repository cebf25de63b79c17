#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polycone/rational.hpp"

// Exact Gaussian elimination over the rationals. Rows are dense vectors of
// length n; no pivoting heuristics are needed because arithmetic is exact.
namespace polycone::linalg {

std::size_t rank(std::span<const Vector> rows, std::size_t n);

/// Indices of the greedily chosen (first-come) linearly independent rows.
std::vector<std::size_t> independent_rows(std::span<const Vector> rows, std::size_t n);

/// Unique solution of the square system, or nullopt when singular.
std::optional<Vector> solve_square(std::span<const Vector> rows, VectorView rhs);

/// Basis of { v : <row, v> = 0 for every row } in reduced echelon form.
std::vector<Vector> nullspace(std::span<const Vector> rows, std::size_t n);

/// Orthogonal projection of v onto span(basis); basis must be independent.
Vector project_onto_span(std::span<const Vector> basis, VectorView v);

}  // namespace polycone::linalg
