#include "polycone/lp.hpp"

#include <limits>

#include "polycone/error.hpp"
#include "polycone/linalg.hpp"

namespace polycone {

std::string_view to_string(LPStatus status) {
  switch (status) {
    case LPStatus::Optimal: return "Optimal";
    case LPStatus::Unbounded: return "Unbounded";
    case LPStatus::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

namespace simplex {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  Tableau(std::vector<Vector> rows, Vector rhs, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  std::size_t height() const { return rows_.size(); }
  std::size_t width() const { return rows_.empty() ? 0 : rows_.front().size(); }

  // Minimizes cost over the first `allowed` columns. Returns kNone at an
  // optimum, otherwise the entering column that certifies unboundedness.
  std::size_t run(const Vector& cost, std::size_t allowed, std::size_t total_width) {
    Vector reduced(total_width);
    for (std::size_t j = 0; j < total_width; ++j) {
      reduced[j] = j < cost.size() ? cost[j] : Rational(0);
      for (std::size_t i = 0; i < height(); ++i) {
        const std::size_t b = basis_[i];
        if (b < cost.size() && cost[b] != 0) reduced[j] -= cost[b] * rows_[i][j];
      }
    }
    for (;;) {
      // Bland: smallest improving column enters.
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < allowed; ++j)
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return kNone;

      std::size_t leave = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < height(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == kNone) return enter;
      pivot(leave, enter);
      const Rational f = reduced[enter];
      for (std::size_t j = 0; j < total_width; ++j)
        if (rows_[leave][j] != 0) reduced[j] -= f * rows_[leave][j];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& x : rows_[r]) x *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < height(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  // Pivots basic artificials (columns >= first_artificial) out of the basis
  // and drops rows that turn out to be linearly dependent.
  void expel_artificials(std::size_t first_artificial) {
    for (std::size_t i = 0; i < height();) {
      if (basis_[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < first_artificial; ++j)
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      if (col != kNone) {
        pivot(i, col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (auto& row : rows_) row.resize(first_artificial);
  }

  Vector solution(std::size_t width) const {
    Vector z(width);
    for (std::size_t i = 0; i < height(); ++i)
      if (basis_[i] < width) z[basis_[i]] = rhs_[i];
    return z;
  }

  Vector ray(std::size_t enter, std::size_t width) const {
    Vector d(width);
    d[enter] = 1;
    for (std::size_t i = 0; i < height(); ++i)
      if (basis_[i] < width) d[basis_[i]] = -rows_[i][enter];
    return d;
  }

 private:
  std::vector<Vector> rows_;
  Vector rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Outcome solve(const StandardForm& problem) {
  const std::size_t m = problem.matrix.size();
  const std::size_t width = problem.cost.size();
  if (problem.rhs.size() != m)
    throw Error(ErrorCode::DimensionMismatch, "standard form: rhs length differs from row count");
  std::vector<Vector> rows = problem.matrix;
  Vector rhs = problem.rhs;
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != width)
      throw Error(ErrorCode::DimensionMismatch, "standard form: row width differs from cost");
    if (rhs[i] < 0) {
      for (auto& x : rows[i]) x = -x;
      rhs[i] = -rhs[i];
    }
  }

  // Reuse unit columns as the initial basis; cover the rest with artificials.
  std::vector<std::size_t> basis(m, kNone);
  for (std::size_t j = 0; j < width; ++j) {
    std::size_t hit = kNone;
    bool unit = true;
    for (std::size_t i = 0; i < m && unit; ++i) {
      if (rows[i][j] == 0) continue;
      if (rows[i][j] == 1 && hit == kNone)
        hit = i;
      else
        unit = false;
    }
    if (unit && hit != kNone && basis[hit] == kNone) basis[hit] = j;
  }
  std::size_t total = width;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] == kNone) basis[i] = total++;
  for (std::size_t i = 0; i < m; ++i) {
    rows[i].resize(total);
    if (basis[i] >= width) rows[i][basis[i]] = 1;
  }

  Tableau tab(std::move(rows), std::move(rhs), std::move(basis));
  Outcome out;
  if (total > width) {
    Vector phase_one(total);
    for (std::size_t j = width; j < total; ++j) phase_one[j] = 1;
    tab.run(phase_one, total, total);
    const Vector z = tab.solution(total);
    Rational infeasibility = 0;
    for (std::size_t j = width; j < total; ++j) infeasibility += z[j];
    if (infeasibility > 0) {
      out.status = LPStatus::Infeasible;
      return out;
    }
    tab.expel_artificials(width);
  }

  const std::size_t enter = tab.run(problem.cost, width, width);
  out.z = tab.solution(width);
  if (enter != kNone) {
    out.status = LPStatus::Unbounded;
    out.direction = tab.ray(enter, width);
    return out;
  }
  out.status = LPStatus::Optimal;
  out.value = dot(problem.cost, out.z);
  return out;
}

}  // namespace simplex

namespace {

void check_dims(std::size_t n, std::span<const HalfSpace> rows, VectorView c) {
  if (c.size() != n) throw Error(ErrorCode::DimensionMismatch, "cost length differs from n");
  for (const auto& h : rows)
    if (h.a.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "constraint length differs from n");
}

Vector farkas_certificate(std::size_t n, std::span<const HalfSpace> rows) {
  const std::size_t m = rows.size();
  simplex::StandardForm f;
  f.matrix.assign(n + 1, Vector(m));
  f.rhs.assign(n + 1, Rational(0));
  f.cost.assign(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) f.matrix[j][i] = rows[i].a[j];
    f.matrix[n][i] = rows[i].b;
  }
  f.rhs[n] = -1;
  auto out = simplex::solve(f);
  if (out.status != LPStatus::Optimal)
    throw Error(ErrorCode::Internal, "Farkas system unexpectedly infeasible");
  return out.z;
}

// Moves an optimal point along directions that keep the objective fixed until
// the active rows have full rank, so a vertex is returned whenever one exists.
void push_to_vertex(std::size_t n, std::span<const HalfSpace> rows, VectorView cost, Vector& x) {
  for (std::size_t step = 0; step <= n; ++step) {
    std::vector<Vector> active;
    for (const auto& h : rows)
      if (h.tight_at(x)) active.push_back(h.a);
    const auto null = linalg::nullspace(active, n);
    bool moved = false;
    for (const auto& d0 : null) {
      Vector d = d0;
      bool up = false, down = false;
      for (const auto& h : rows) {
        const Rational s = dot(h.a, d);
        up = up || s > 0;
        down = down || s < 0;
      }
      if (!up && !down) continue;  // lineality direction, cannot leave it
      if (!up)
        for (auto& v : d) v = -v;
      if (dot(cost, d) != 0)
        throw Error(ErrorCode::Internal, "optimal point admits an improving feasible move");
      Rational t;
      bool have_t = false;
      for (const auto& h : rows) {
        const Rational s = dot(h.a, d);
        if (s <= 0) continue;
        Rational cand = (h.b - dot(h.a, x)) / s;
        if (!have_t || cand < t) {
          t = std::move(cand);
          have_t = true;
        }
      }
      for (std::size_t j = 0; j < n; ++j) x[j] += t * d[j];
      moved = true;
      break;
    }
    if (!moved) return;
  }
}

}  // namespace

LPResult solve_lp(std::size_t n, std::span<const HalfSpace> rows, VectorView c, Sense sense) {
  check_dims(n, rows, c);
  const std::size_t m = rows.size();
  Vector cost(c.begin(), c.end());
  if (sense == Sense::Maximize)
    for (auto& x : cost) x = -x;

  // x = x_plus - x_minus, A x + s = b, all of x_plus, x_minus, s >= 0.
  simplex::StandardForm sf;
  sf.matrix.assign(m, Vector(2 * n + m));
  sf.rhs.resize(m);
  sf.cost.assign(2 * n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sf.matrix[i][j] = rows[i].a[j];
      sf.matrix[i][n + j] = -rows[i].a[j];
    }
    sf.matrix[i][2 * n + i] = 1;
    sf.rhs[i] = rows[i].b;
  }
  for (std::size_t j = 0; j < n; ++j) {
    sf.cost[j] = cost[j];
    sf.cost[n + j] = -cost[j];
  }

  const auto out = simplex::solve(sf);
  LPResult res;
  res.status = out.status;
  if (out.status == LPStatus::Infeasible) {
    res.certificate = farkas_certificate(n, rows);
    return res;
  }
  res.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) res.point[j] = out.z[j] - out.z[n + j];
  if (out.status == LPStatus::Unbounded) {
    res.ray.resize(n);
    for (std::size_t j = 0; j < n; ++j) res.ray[j] = out.direction[j] - out.direction[n + j];
    return res;
  }
  push_to_vertex(n, rows, cost, res.point);
  res.value = dot(c, res.point);
  return res;
}

LPResult solve_lp(const Polyhedron& p, VectorView c, Sense sense) {
  return solve_lp(p.dim(), p.rows(), c, sense);
}

bool is_feasible(const Polyhedron& p) {
  const Vector zero(p.dim());
  return solve_lp(p, zero).status != LPStatus::Infeasible;
}

ConeMembership cone_member(std::span<const Vector> generators, VectorView target) {
  const std::size_t n = target.size();
  const std::size_t k = generators.size();
  for (const auto& g : generators)
    if (g.size() != n) throw Error(ErrorCode::DimensionMismatch, "generator length differs from target");
  ConeMembership res;
  if (k == 0) {
    res.member = is_zero(target);
    return res;
  }
  simplex::StandardForm sf;
  sf.matrix.assign(n, Vector(k));
  sf.rhs.assign(target.begin(), target.end());
  sf.cost.assign(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) sf.matrix[j][i] = generators[i][j];
  const auto out = simplex::solve(sf);
  if (out.status == LPStatus::Infeasible) return res;
  res.member = true;
  res.multipliers = out.z;
  Vector check(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) check[j] += res.multipliers[i] * generators[i][j];
  if (!std::equal(check.begin(), check.end(), target.begin()))
    throw Error(ErrorCode::Internal, "cone multipliers do not reproduce the target");
  return res;
}

}  // namespace polycone
