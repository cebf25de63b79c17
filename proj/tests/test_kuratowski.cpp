#include <doctest.h>

#include <cfloat>
#include <cmath>
#include <functional>
#include <string>

#include "polycone/error.hpp"
#include "polycone/io.hpp"
#include "polycone/kuratowski.hpp"
#include "support/testing.hpp"

using namespace polycone;
using namespace polycone::testing;

namespace {

PolyhedronTrajectory load(const std::string& name) {
  return io::trajectory_from(io::read_file(std::string(POLYCONE_FIXTURES) + "/" + name), 1000000);
}

Polyhedron load_poly(const std::string& name) {
  return io::polyhedron_from(io::read_file(std::string(POLYCONE_FIXTURES) + "/" + name));
}

using RowsOf = std::function<std::vector<HalfSpace>(const Rational&)>;

PolyhedronTrajectory family(std::size_t n, const std::vector<Rational>& nus, const RowsOf& rows_of) {
  PolyhedronTrajectory t;
  t.n = n;
  std::vector<std::vector<HalfSpace>> per;
  for (const auto& nu : nus) {
    t.parameters.push_back(to_double(nu));
    per.push_back(rows_of(nu));
  }
  for (std::size_t i = 0; i < per.front().size(); ++i) {
    std::vector<HalfSpace> rows;
    for (const auto& p : per) rows.push_back(p[i]);
    t.constraints.push_back(ConstraintTrajectory::from_exact(n, std::move(rows)));
  }
  return t;
}

std::vector<Rational> powers_of_two(int lo, int hi) {
  std::vector<Rational> out;
  for (int k = lo; k <= hi; ++k) out.push_back(Rational(Integer(1) << k));
  return out;
}

HalfSpace hs(std::initializer_list<const char*> a, const char* b) { return HalfSpace::canonical(V(a), Q(b)); }

bool equal_sets(const Polyhedron& p, const Polyhedron& q) {
  return poly_contains(p, q).contained && poly_contains(q, p).contained;
}

const Polyhedron half_line = poly(2, {{"0", "-1", "0"}, {"0", "1", "0"}, {"-1", "0", "0"}});

double max_violation(const Polyhedron& p, const Vector& x) {
  double worst = 0;
  for (const auto& h : p.rows()) worst = std::max(worst, to_double(dot(h.a, x) - h.b));
  return worst;
}

}  // namespace

TEST_CASE("tail estimates of scalar sequences") {
  std::vector<double> constant(6, 2.5);
  auto e = estimate_limit(constant, 1e-9);
  CHECK(e.kind == LimitKind::Finite);
  CHECK(e.value == 2.5);

  std::vector<double> grow, alt, sink, geo;
  for (int k = 1; k <= 10; ++k) {
    grow.push_back(std::ldexp(1.0, k));
    sink.push_back(-std::ldexp(1.0, k));
    alt.push_back(k % 2 ? -1.0 : 1.0);
    geo.push_back(3.0 + std::ldexp(1.0, -k));
  }
  CHECK(estimate_limit(grow, 1e-9).kind == LimitKind::PlusInfinity);
  CHECK(estimate_limit(sink, 1e-9).kind == LimitKind::MinusInfinity);
  CHECK(estimate_limit(alt, 1e-9).kind == LimitKind::Oscillating);
  e = estimate_limit(geo, 1e-9);
  CHECK(e.kind == LimitKind::Finite);
  CHECK(e.value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS_AS(estimate_limit(std::vector<double>{1, 2}, 1e-9), Error);
}

TEST_CASE("classify_offset on normalized offsets") {
  const auto nus = powers_of_two(1, 8);
  std::vector<HalfSpace> rows;
  for (const auto& nu : nus) rows.push_back(HalfSpace{Vector{-1, -nu}, -nu});
  const auto t = ConstraintTrajectory::from_exact(2, rows);
  for (std::size_t k = 0; k < nus.size(); ++k) {
    const double nu = to_double(nus[k]);
    CHECK(t.unit_offsets()[k] == doctest::Approx(-nu / std::sqrt(1 + nu * nu)));
  }
  const auto e = classify_offset(t, 1e-9);
  CHECK(e.kind == LimitKind::Finite);
  CHECK_FALSE(e.declared);
  CHECK(e.value == doctest::Approx(-1.0).epsilon(1e-6));
  const auto r = row_limit(t, 0);
  REQUIRE(r);
  CHECK(r->rational == hs({"0", "-1"}, "-1"));

  std::vector<HalfSpace> escaping, flipping;
  for (const auto& nu : nus) escaping.push_back(HalfSpace{V({"1", "0"}), nu});
  for (std::size_t k = 0; k < nus.size(); ++k) flipping.push_back(HalfSpace{V({"1", "0"}), k % 2 ? Q("1") : Q("-1")});
  CHECK(classify_offset(ConstraintTrajectory::from_exact(2, escaping), 1e-9).kind == LimitKind::PlusInfinity);
  CHECK_FALSE(row_limit(ConstraintTrajectory::from_exact(2, escaping), 0));
  CHECK(classify_offset(ConstraintTrajectory::from_exact(2, flipping), 1e-9).kind == LimitKind::Oscillating);
  CHECK_THROWS_AS(ConstraintTrajectory::from_exact(2, {rows[0], rows[1]}), Error);
}

TEST_CASE("declared limits take precedence over samples") {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<HalfSpace> rows;
    for (int k = 0; k < 5; ++k) rows.push_back(HalfSpace{V({"0", "1"}), Rational(rng.between(-50, 50))});
    const auto declared = hs({"0", "2"}, "6");
    const auto t = ConstraintTrajectory::from_exact(2, rows, DeclaredLimit{declared});
    const auto e = classify_offset(t, 1e-9);
    CHECK(e.declared);
    CHECK(e.kind == LimitKind::Finite);
    CHECK(e.value == doctest::Approx(3.0));
    const auto r = row_limit(t, 0);
    REQUIRE(r);
    CHECK(r->rational == declared);
    const auto inf = ConstraintTrajectory::from_exact(2, rows, DeclaredLimit{PlusInfinity{}});
    CHECK(classify_offset(inf, 1e-9).kind == LimitKind::PlusInfinity);
    CHECK(classify_offset(inf, 1e-9).declared);
  }
}

TEST_CASE("inverse-equivalent pairs") {
  auto report = construct_limit(load("halfline_trajectory.json"));
  REQUIRE(report.ie_pairs.size() == 1);
  CHECK(report.ie_pairs[0].i == 0);
  CHECK(report.ie_pairs[0].j == 1);
  CHECK_FALSE(report.ie_pairs[0].parallel);

  const auto fixed = family(2, powers_of_two(1, 5), [](const Rational&) {
    return std::vector<HalfSpace>{hs({"0", "1"}, "1"), hs({"0", "-1"}, "-1")};
  });
  report = construct_limit(fixed);
  REQUIRE(report.ie_pairs.size() == 1);
  CHECK(report.ie_pairs[0].parallel);
  CHECK(report.auxiliary.empty());

  CHECK(construct_limit(load("triangle_trajectory.json")).ie_pairs.empty());
}

TEST_CASE("auxiliary constraints from bisectors") {
  const auto t = load("halfline_trajectory.json");
  const auto aux = auxiliary_limit(t.constraints[0], t.constraints[1], 0, 1);
  REQUIRE(aux.u);
  CHECK(aux.v[0] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(std::abs(aux.v[1]) < 1e-9);
  CHECK(std::abs(*aux.u) < 1e-9);
  REQUIRE(aux.rational);
  CHECK(*aux.rational == hs({"-1", "0"}, "0"));

  const auto shifted = family(2, powers_of_two(1, 10), [](const Rational& nu) {
    return std::vector<HalfSpace>{hs({"0", "-1"}, "0"), HalfSpace::canonical(Vector{-1 / nu, 1}, -1)};
  });
  const auto div = auxiliary_limit(shifted.constraints[0], shifted.constraints[1], 0, 1);
  CHECK_FALSE(div.u);
  CHECK_FALSE(div.rational);

  const auto fixed = family(2, powers_of_two(1, 5), [](const Rational&) {
    return std::vector<HalfSpace>{hs({"0", "1"}, "1"), hs({"0", "-1"}, "-1")};
  });
  try {
    auxiliary_limit(fixed.constraints[0], fixed.constraints[1], 0, 1);
    FAIL("parallel pair accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParallelPair);
  }
}

TEST_CASE("limit construction") {
  auto r = construct_limit(load("halfline_trajectory.json"));
  CHECK(r.limit.rows() == std::vector<HalfSpace>{hs({"0", "-1"}, "0"), hs({"0", "1"}, "0"), hs({"-1", "0"}, "0")});
  CHECK(r.kept == IndexSet{0, 1});
  CHECK(equal_sets(r.limit, half_line));

  r = construct_limit(load("slanted_trajectory.json"));
  CHECK(r.limit.rows() == std::vector<HalfSpace>{hs({"-1", "0"}, "0"), hs({"0", "-1"}, "0"), hs({"0", "-1"}, "-1")});
  CHECK(equal_sets(r.limit, poly(2, {{"-1", "0", "0"}, {"0", "-1", "-1"}})));

  r = construct_limit(load("escaping_trajectory.json"));
  CHECK(r.dropped_plus_infinity == IndexSet{0});
  CHECK(r.kept == IndexSet{1, 2, 3});
  CHECK_FALSE(r.warnings.empty());
  CHECK(equal_sets(r.limit, poly(2, {{"-1", "0", "0"}, {"0", "1", "1"}, {"0", "-1", "0"}})));

  r = construct_limit(load("ascending_trajectory.json"));
  CHECK(r.limit == production_piece());

  r = construct_limit(load("descending_trajectory.json"));
  CHECK(r.limit.rows() == std::vector<HalfSpace>{hs({"0", "1"}, "1"), hs({"1", "1"}, "-2"), hs({"1", "1"}, "-4"),
                                                 hs({"1", "0"}, "0")});
  std::vector<Vector> lv;
  for (const auto& v : enumerate_vertices(r.limit)) lv.push_back(v.point);
  CHECK(lv == std::vector<Vector>{V({"-5", "1"}), V({"0", "-4"})});

  const auto sinking = family(1, powers_of_two(1, 8), [](const Rational& nu) {
    return std::vector<HalfSpace>{hs({"1"}, "0"), HalfSpace{V({"-1"}), -nu}};
  });
  try {
    construct_limit(sinking);
    FAIL("diverging offset accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OffsetDiverges);
  }
  int k = 0;
  const auto flipping = family(1, powers_of_two(1, 8), [&k](const Rational&) {
    return std::vector<HalfSpace>{HalfSpace{V({"1"}), ++k % 2 ? Q("1") : Q("2")}};
  });
  try {
    construct_limit(flipping);
    FAIL("oscillating offset accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OffsetOscillates);
  }
}

TEST_CASE("window distance examples") {
  const auto dirs = default_directions(2);
  CHECK(dirs.size() == 68);
  for (double r : {2.0, 5.0, 100.0}) {
    const auto d = window_distance(triangle(), triangle(), r, dirs);
    CHECK(d.kind == WindowKind::Finite);
    CHECK(d.value == 0);
  }
  // E_100 agrees with {x >= 0, y >= 1} except for the sliver under the slanted
  // facet, which drops to y = 0.9 at x = 10.
  const auto e100 = poly(2, {{"-1", "0", "0"}, {"0", "-1", "0"}, {"-1", "-100", "-100"}});
  const auto limit = poly(2, {{"-1", "0", "0"}, {"0", "-1", "-1"}});
  CHECK(window_distance(e100, limit, 10, dirs).value == doctest::Approx(0.1).epsilon(1e-12));

  const auto axis = poly(2, {{"0", "-1", "0"}, {"0", "1", "0"}});
  CHECK(window_distance(half_line, axis, 1, dirs).value == doctest::Approx(1.0).epsilon(1e-12));

  const auto empty = poly(2, {{"1", "0", "-1"}, {"-1", "0", "0"}});
  CHECK(window_distance(empty, empty, 1, dirs).kind == WindowKind::BothEmpty);
  CHECK(window_distance(empty, empty, 1, dirs).as_double() == 0);
  CHECK(window_distance(empty, triangle(), 1, dirs).kind == WindowKind::Infinite);
  CHECK(std::isinf(window_distance(empty, triangle(), 1, dirs).as_double()));
  // Far away from the window the sets look empty.
  const auto far = poly(2, {{"-1", "0", "-50"}});
  CHECK(window_distance(far, far, 10, dirs).kind == WindowKind::BothEmpty);

  for (double bad : {0.0, -1.0, std::nan("")})
    CHECK_THROWS_AS(window_distance(triangle(), triangle(), bad, dirs), Error);
  const std::vector<Vector> partial = {V({"1", "0"}), V({"-1", "0"}), V({"0", "1"}), V({"1", "1"})};
  try {
    window_distance(triangle(), triangle(), 1, partial);
    FAIL("direction set without -e_2 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadWindow);
  }
}

TEST_CASE("default directions are deterministic and near unit length") {
  const auto a = default_directions(3, 42);
  const auto b = default_directions(3, 42);
  CHECK(a == b);
  CHECK(default_directions(3, 7) != a);
  REQUIRE(a.size() == 70);
  for (const auto& u : a) {
    double s = 0;
    for (const auto& x : u) s += to_double(x) * to_double(x);
    CHECK(std::sqrt(s) == doctest::Approx(1.0).epsilon(1e-6));
  }
  CHECK(default_window(triangle()) == doctest::Approx(4.0));
  CHECK(default_window(production_piece()) == doctest::Approx(2 * (1 + std::sqrt(5.0))));
}

TEST_CASE("window distance is a pseudo-metric on fixture samples") {
  std::vector<Polyhedron> sets;
  for (const char* f : {"halfline_trajectory.json", "slanted_trajectory.json", "ascending_trajectory.json",
                        "escaping_trajectory.json"}) {
    const auto t = load(f);
    for (std::size_t k = 0; k < t.sample_count(); k += 3) sets.push_back(t.sample(k));
  }
  const double r = 4;
  const auto dirs = default_directions(2);
  std::vector<SupportProfile> prof;
  for (const auto& p : sets) prof.push_back(support_profile(p, r, dirs));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      const double dij = profile_distance(prof[i], prof[j]).as_double();
      CHECK(dij == profile_distance(prof[j], prof[i]).as_double());
      for (std::size_t k = 0; k < sets.size(); ++k) {
        const double dik = profile_distance(prof[i], prof[k]).as_double();
        const double dkj = profile_distance(prof[k], prof[j]).as_double();
        CHECK(dij <= dik + dkj + 2 * DBL_EPSILON * r);
      }
    }
  CHECK(window_distance(sets[0], sets[5], r, dirs).value == profile_distance(prof[0], prof[5]).value);
}

TEST_CASE("trend verdicts") {
  CHECK(trends_to_zero(std::vector<double>{4, 2, 1, 0.5, 1e-7}, 1e-6));
  CHECK_FALSE(trends_to_zero(std::vector<double>{1, 1, 1, 1, 1}, 1e-6));
  CHECK_FALSE(trends_to_zero(std::vector<double>{1, 1e-7, 1, 1e-7, 1}, 1e-6));
  CHECK(trends_to_zero(std::vector<double>{0, 0, 0}, 1e-6));
  CHECK_FALSE(trends_to_zero(std::vector<double>{0, 0, INFINITY}, 1e-6));
  std::vector<double> geo;
  for (int k = 1; k <= 10; ++k) geo.push_back(std::ldexp(1.0, -k));
  CHECK(trends_to_zero(geo, 1e-6));
}

TEST_CASE("set convergence verdicts") {
  const auto hl = load("halfline_trajectory.json");
  auto rep = verify_convergence(hl, half_line);
  CHECK(rep.converged);
  CHECK(rep.window_radius == doctest::Approx(2.0));
  for (std::size_t k = 0; k < rep.distances.size(); ++k)
    CHECK(rep.distances[k].distance.value == doctest::Approx(2.0 / hl.parameters[k]).epsilon(1e-9));

  DiagnosticOptions unit;
  unit.window = 1.0;
  rep = verify_convergence(hl, load_poly("x_axis.json"), unit);
  CHECK_FALSE(rep.converged);
  for (const auto& d : rep.distances) CHECK(d.distance.value == doctest::Approx(1.0));

  rep = verify_convergence(load("triangle_trajectory.json"), triangle());
  CHECK(rep.converged);
  for (const auto& d : rep.distances) CHECK(d.distance.value == 0);
  for (const auto& c : rep.vertex_count_check) CHECK(c.sample == 3);

  CHECK(verify_convergence(load("slanted_trajectory.json"), construct_limit(load("slanted_trajectory.json")).limit).converged);
  CHECK(verify_convergence(load("ascending_trajectory.json"), production_piece()).converged);
}

TEST_CASE("vertex tracks") {
  const auto t = load("ascending_trajectory.json");
  auto rep = track_vertices(t, production_piece());
  REQUIRE(rep.tracks.size() == 2);
  const auto& far = rep.tracks[0];
  CHECK(far.limit_vertex == V({"-2", "1"}));
  CHECK(far.converged);
  for (std::size_t k = 0; k < t.sample_count(); ++k) {
    const Rational nu = t.constraints[1].exact()[k].a[0] * 2;
    REQUIRE(far.points[k].vertex);
    CHECK(*far.points[k].vertex == Vector{-2 / nu, 1});
    CHECK(far.points[k].distance == doctest::Approx(2 * (1 / to_double(nu) - 1)).epsilon(1e-9));
  }
  CHECK(rep.tracks[1].limit_vertex == V({"0", "0"}));
  for (const auto& p : rep.tracks[1].points) CHECK(p.distance == 0);

  rep = track_vertices(load("triangle_trajectory.json"), triangle());
  CHECK(rep.tracks.size() == 3);
  for (const auto& tr : rep.tracks) {
    CHECK(tr.converged);
    for (const auto& p : tr.points) CHECK(p.distance == 0);
  }

  const auto slanted = load("slanted_trajectory.json");
  rep = track_vertices(slanted, construct_limit(slanted).limit);
  REQUIRE(rep.tracks.size() == 1);
  CHECK(rep.tracks[0].limit_vertex == V({"0", "1"}));
  CHECK(rep.tracks[0].converged);
  for (std::size_t k = 0; k < slanted.sample_count(); ++k) {
    REQUIRE(rep.escapees[k].size() == 1);
    CHECK(rep.escapees[k][0].vertex == Vector{Rational(slanted.parameters[k]), 0});
    CHECK(rep.escapees[k][0].norm == doctest::Approx(slanted.parameters[k]));
  }
  CHECK_THROWS_AS(track_vertices(slanted, strip()), Error);
}

TEST_CASE("cone convergence along tracks") {
  const auto t = load("ascending_trajectory.json");
  const auto rep = track_vertices(t, production_piece());
  for (const auto& tr : rep.tracks) {
    const auto m = cone_convergence(t, production_piece(), tr);
    CHECK(m.normal_converged);
    CHECK(m.tangent_converged);
    CHECK(m.normal.back().value < 1e-6);
  }
  // At the moving vertex the normal cone is cone{(0,1),(nu/2,1)}.
  const auto& far = rep.tracks[0];
  const auto m = cone_convergence(t, production_piece(), far);
  const auto dirs = default_directions(2);
  const auto target = Cone::from_generators(2, {V({"0", "1"}), V({"1/2", "1"})});
  for (std::size_t k = 0; k < t.sample_count(); k += 5) {
    const Rational nu = t.constraints[1].exact()[k].a[0] * 2;
    const auto nk = Cone::from_generators(2, {V({"0", "1"}), Vector{nu / 2, 1}});
    CHECK(m.normal[k].value == doctest::Approx(window_distance(nk, target, 1.0, dirs).value));
  }

  const auto tri = load("triangle_trajectory.json");
  for (const auto& tr : track_vertices(tri, triangle()).tracks) {
    const auto cm = cone_convergence(tri, triangle(), tr);
    for (const auto& d : cm.normal) CHECK(d.value == 0);
    for (const auto& d : cm.tangent) CHECK(d.value == 0);
  }

  VertexTrack stuck = far;
  stuck.converged = false;
  try {
    cone_convergence(t, production_piece(), stuck);
    FAIL("unconverged track accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TrackNotConverged);
  }
}

TEST_CASE("argmax convergence") {
  const auto slanted = load("slanted_trajectory.json");
  auto rep = argmax_convergence(slanted, construct_limit(slanted).limit);
  for (const auto& v : rep.values) CHECK(v == 0);
  REQUIRE(rep.limit_value);
  CHECK(*rep.limit_value == -1);
  CHECK_FALSE(rep.conditions.compact);
  CHECK_FALSE(rep.conditions.vertex_count_stable);
  CHECK_FALSE(rep.conditions.max_converges);
  CHECK_FALSE(rep.converged);

  const auto ex = load("ascending_trajectory.json");
  rep = argmax_convergence(ex, production_piece());
  REQUIRE(rep.limit_value);
  CHECK(*rep.limit_value == 2);
  for (std::size_t k = 0; k < ex.sample_count(); ++k) {
    const Rational nu = ex.constraints[1].exact()[k].a[0] * 2;
    CHECK(rep.values[k] == 4 - 2 / nu);
  }
  CHECK(rep.conditions.max_converges);
  CHECK(rep.converged);

  rep = argmax_convergence(load("triangle_trajectory.json"), triangle());
  CHECK(rep.sense == Sense::Minimize);
  CHECK(*rep.limit_value == 0);
  CHECK(rep.conditions.compact);
  CHECK(rep.conditions.max_converges);
  CHECK(rep.converged);
  for (const auto& d : rep.face_distances) CHECK(d.value == 0);

  auto q = family(2, powers_of_two(1, 4), [](const Rational&) {
    return std::vector<HalfSpace>{hs({"-1", "0"}, "0"), hs({"0", "-1"}, "0")};
  });
  q.cost = CostTrajectory{Sense::Maximize, std::vector<Vector>(4, V({"1", "0"})), std::nullopt};
  try {
    argmax_convergence(q, quadrant());
    FAIL("unbounded objective accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MaxNotAttained);
  }
  CHECK_THROWS_AS(argmax_convergence(load("halfline_trajectory.json"), half_line), Error);
}

TEST_CASE("boundary convergence") {
  auto rep = boundary_convergence(load("triangle_trajectory.json"), triangle());
  CHECK(rep.converged);
  for (const auto& d : rep.metric) CHECK(d.value == 0);

  DiagnosticOptions wide;
  wide.window = 10.0;
  const auto slanted = load("slanted_trajectory.json");
  rep = boundary_convergence(slanted, construct_limit(slanted).limit, wide);
  CHECK(rep.converged);
  // Once nu > R the slanted facet leaves the window at (R, 1 - R/nu).
  for (std::size_t k = 0; k < slanted.sample_count(); ++k)
    if (slanted.parameters[k] > 10)
      CHECK(rep.metric[k].value == doctest::Approx(10.0 / slanted.parameters[k]).epsilon(0.05));

  const auto hl = load("halfline_trajectory.json");
  rep = boundary_convergence(hl, construct_limit(hl).limit);
  CHECK(rep.converged);
  CHECK(rep.metric.back().value < rep.metric.front().value);
}

TEST_CASE("midpoints of late samples stay in the constructed limit") {
  const auto t = load("ascending_trajectory.json");
  const auto limit = construct_limit(t).limit;
  Rng rng(47);
  for (std::size_t k = t.sample_count() - 3; k < t.sample_count(); ++k) {
    const auto pts = feasible_samples(rng, t.sample(k), 40);
    for (std::size_t s = 0; s + 1 < pts.size(); s += 2) {
      Vector mid(2);
      for (std::size_t j = 0; j < 2; ++j) mid[j] = (pts[s][j] + pts[s + 1][j]) / 2;
      CHECK(max_violation(limit, mid) <= 1e-6);
    }
  }
}

TEST_CASE("an ascending family stays inside its limit") {
  const auto t = load("ascending_trajectory.json");
  const auto limit = construct_limit(t).limit;
  Rng rng(53);
  for (std::size_t k = 0; k < t.sample_count(); ++k) {
    CHECK(poly_contains(limit, t.sample(k)).contained);
    for (const auto& x : feasible_samples(rng, t.sample(k), 20)) CHECK(max_violation(limit, x) <= 1e-6);
  }
}

TEST_CASE("converged limits have no more vertices than late samples") {
  for (const char* f : {"halfline_trajectory.json", "slanted_trajectory.json", "ascending_trajectory.json",
                        "triangle_trajectory.json", "escaping_trajectory.json"}) {
    const auto t = load(f);
    const auto limit = construct_limit(t).limit;
    const auto rep = verify_convergence(t, limit);
    REQUIRE(rep.converged);
    const auto lv = enumerate_vertices(limit).size();
    for (std::size_t k = t.sample_count() / 2; k < t.sample_count(); ++k)
      CHECK(lv <= enumerate_vertices(t.sample(k)).size());
  }
}

TEST_CASE("trajectory input contract") {
  CHECK_THROWS_AS(load("ngon_cones_trajectory.json"), Error);
  auto t = load("triangle_trajectory.json");
  t.constraints.pop_back();
  CHECK_NOTHROW(t.validate());
  t.n = 3;
  CHECK_THROWS_AS(t.validate(), Error);
}
