#pragma once

// Shared fixtures, builders and LP-free oracles for the test suites.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "polycone/geometry.hpp"
#include "polycone/linalg.hpp"
#include "polycone/polyhedron.hpp"
#include "polycone/rational.hpp"

namespace polycone::testing {

inline Rational Q(const std::string& s) { return parse_rational(s); }

inline Vector V(std::initializer_list<const char*> xs) {
  Vector v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

/// Each row is {a_1, ..., a_n, b}.
inline Polyhedron poly(std::size_t n, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<HalfSpace> hs;
  for (const auto& r : rows) {
    Vector all = V(r);
    Rational b = all.back();
    all.pop_back();
    hs.push_back(HalfSpace{std::move(all), std::move(b)});
  }
  return Polyhedron(n, std::move(hs));
}

inline Polyhedron triangle() { return poly(2, {{"-1", "0", "0"}, {"0", "-1", "0"}, {"1", "1", "1"}}); }
inline Polyhedron quadrant() { return poly(2, {{"-1", "0", "0"}, {"0", "-1", "0"}}); }
inline Polyhedron strip() { return poly(2, {{"0", "-1", "0"}, {"0", "1", "1"}}); }

/// Production piece {y2 <= a, y1 + 2 y2 <= 0, 2 y1 + y2 <= 0}.
inline Polyhedron production_piece(const char* a = "1") {
  return poly(2, {{"0", "1", a}, {"1", "2", "0"}, {"2", "1", "0"}});
}

/// Portable deterministic generator (mt19937_64 is fully specified).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  /// Numerator in [-5, 5], denominator in {1, 2, 3}.
  Rational small_rational() { return Rational(between(-5, 5), between(1, 3)); }
  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

inline Polyhedron random_polyhedron(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<HalfSpace> rows;
  while (rows.size() < m) {
    Vector a(n);
    for (auto& x : a) x = rng.small_rational();
    if (is_zero(a)) continue;
    rows.push_back(HalfSpace{std::move(a), rng.small_rational()});
  }
  return Polyhedron(n, std::move(rows));
}

/// Random feasible polyhedron with trivial lineality; rejection sampled.
inline Polyhedron random_pointed_feasible(Rng& rng, std::size_t n, std::size_t m) {
  for (;;) {
    auto p = random_polyhedron(rng, n, m);
    if (linalg::rank(p.normals(), n) < n) continue;
    if (enumerate_vertices(p).empty()) continue;  // pointed and nonempty <=> has a vertex
    return p;
  }
}

/// Feasible samples of a pointed polyhedron: convex combinations of vertices
/// plus nonnegative multiples of recession rays. LP-free.
inline std::vector<Vector> feasible_samples(Rng& rng, const Polyhedron& p, std::size_t count) {
  const auto verts = enumerate_vertices(p);
  const auto rays = recession_extreme_rays(p);
  std::vector<Vector> out;
  for (std::size_t s = 0; s < count; ++s) {
    Vector x(p.dim());
    Rational total = 0;
    std::vector<Rational> w(verts.size());
    for (auto& wi : w) {
      wi = Rational(rng.between(0, 6));
      total += wi;
    }
    if (total == 0) {
      w[0] = 1;
      total = 1;
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += w[i] / total * verts[i].point[j];
    for (const auto& r : rays) {
      const Rational t(rng.between(0, 4), rng.between(1, 3));
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += t * r[j];
    }
    out.push_back(std::move(x));
  }
  return out;
}

/// Planar cone membership by Carathéodory: target is a nonnegative
/// combination of at most two generators. No LP involved.
inline bool member_2d_bruteforce(const std::vector<Vector>& gens, const Vector& target) {
  if (is_zero(target)) return true;
  for (const auto& g : gens)
    if (same_ray(g, target)) return true;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const std::vector<Vector> cols = {{gens[i][0], gens[j][0]}, {gens[i][1], gens[j][1]}};
      auto lam = linalg::solve_square(cols, target);
      if (lam && (*lam)[0] >= 0 && (*lam)[1] >= 0) return true;
    }
  return false;
}

}  // namespace polycone::testing
