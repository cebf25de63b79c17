#include "polycone/linalg.hpp"

#include "polycone/error.hpp"

namespace polycone::linalg {

namespace {

// Reduces `m` in place to reduced row echelon form and returns the pivot
// column of each surviving row.
std::vector<std::size_t> reduce(std::vector<Vector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

void check_width(std::span<const Vector> rows, std::size_t n) {
  for (const auto& r : rows)
    if (r.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "row length differs from the ambient dimension");
}

}  // namespace

std::size_t rank(std::span<const Vector> rows, std::size_t n) {
  check_width(rows, n);
  std::vector<Vector> m(rows.begin(), rows.end());
  return reduce(m, n).size();
}

std::vector<std::size_t> independent_rows(std::span<const Vector> rows, std::size_t n) {
  check_width(rows, n);
  std::vector<std::size_t> picked;
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    basis.push_back(rows[i]);
    if (rank(basis, n) == basis.size())
      picked.push_back(i);
    else
      basis.pop_back();
    if (basis.size() == n) break;
  }
  return picked;
}

std::optional<Vector> solve_square(std::span<const Vector> rows, VectorView rhs) {
  const std::size_t n = rows.size();
  if (rhs.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from system size");
  check_width(rows, n);
  std::vector<Vector> m;
  m.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector r = rows[i];
    r.push_back(rhs[i]);
    m.push_back(std::move(r));
  }
  const auto pivots = reduce(m, n);
  if (pivots.size() < n) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = m[i][n];
  return x;
}

std::vector<Vector> nullspace(std::span<const Vector> rows, std::size_t n) {
  check_width(rows, n);
  std::vector<Vector> m(rows.begin(), rows.end());
  const auto pivots = reduce(m, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector project_onto_span(std::span<const Vector> basis, VectorView v) {
  const std::size_t k = basis.size();
  Vector out(v.size());
  if (k == 0) return out;
  std::vector<Vector> gram(k, Vector(k));
  Vector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  const auto coeffs = solve_square(gram, rhs);
  if (!coeffs) throw Error(ErrorCode::Internal, "projection basis is not independent");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[j] += (*coeffs)[i] * basis[i][j];
  return out;
}

}  // namespace polycone::linalg
