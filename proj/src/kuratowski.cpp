#include "polycone/kuratowski.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <random>

#include "polycone/error.hpp"
#include "polycone/geometry.hpp"
#include "polycone/optimality.hpp"

namespace polycone {

namespace {

double norm2(std::span<const double> v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::vector<double> unit_of(const HalfSpace& h, double* offset) {
  std::vector<double> a = to_double(h.a);
  const double r = norm2(a);
  for (auto& x : a) x /= r;
  *offset = to_double(h.b) / r;
  return a;
}

std::size_t tail_length(std::size_t k) { return std::min(k, std::max<std::size_t>(3, (k + 1) / 2)); }

// Rounds a float row to exact form after L∞ scaling so that the dominant
// coefficient is exactly +-1.
HalfSpace rationalize_row(std::span<const double> a, double b, double err, const LimitOptions& opts) {
  double linf = 0;
  for (double x : a) linf = std::max(linf, std::abs(x));
  const double tol = std::max(opts.eps_limit, 2 * err / linf);
  Vector ra(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) ra[j] = rationalize(a[j] / linf, tol, opts.max_denominator);
  return HalfSpace{std::move(ra), rationalize(b / linf, tol, opts.max_denominator)};
}

struct VectorEstimate {
  std::vector<double> value;
  double error = 0;
};

// Componentwise limit of a sequence of unit vectors, rescaled to unit length.
std::optional<VectorEstimate> estimate_unit_vector(const std::vector<std::vector<double>>& seq, double eps) {
  const std::size_t n = seq.front().size();
  VectorEstimate out;
  out.value.resize(n);
  std::vector<double> comp(seq.size());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < seq.size(); ++k) comp[k] = seq[k][j];
    const auto e = estimate_limit(comp, eps);
    if (e.kind != LimitKind::Finite) return std::nullopt;
    out.value[j] = e.value;
    out.error = std::max(out.error, e.error);
  }
  const double r = norm2(out.value);
  if (r < 0.5) return std::nullopt;
  for (auto& x : out.value) x /= r;
  return out;
}

std::vector<HalfSpace> box_rows(std::size_t nvars, std::size_t n, const Rational& radius) {
  std::vector<HalfSpace> rows;
  for (std::size_t j = 0; j < n; ++j) {
    for (int sign : {1, -1}) {
      Vector a(nvars);
      a[j] = sign;
      rows.push_back(HalfSpace{std::move(a), radius});
    }
  }
  return rows;
}

Rational exact_radius(double radius) {
  if (!std::isfinite(radius) || radius <= 0)
    throw Error(ErrorCode::BadWindow, "window radius must be positive and finite");
  return rationalize(radius, radius * 1e-12, 1000000);
}

void check_directions(std::size_t n, std::span<const Vector> directions) {
  if (directions.size() < 2 * n)
    throw Error(ErrorCode::BadWindow, "need at least 2n directions");
  for (const auto& u : directions)
    if (u.size() != n) throw Error(ErrorCode::BadWindow, "direction length differs from n");
  for (std::size_t j = 0; j < n; ++j)
    for (int sign : {1, -1}) {
      Vector e(n);
      e[j] = sign;
      if (std::find(directions.begin(), directions.end(), e) == directions.end())
        throw Error(ErrorCode::BadWindow, "directions must include every +-e_j");
    }
}

// Support values of the projection onto the first n variables.
SupportProfile lifted_profile(std::size_t nvars, const std::vector<HalfSpace>& rows,
                              std::span<const Vector> directions) {
  std::vector<Rational> out;
  out.reserve(directions.size());
  Vector obj(nvars);
  for (const auto& u : directions) {
    std::copy(u.begin(), u.end(), obj.begin());
    const auto r = solve_lp(nvars, rows, obj, Sense::Maximize);
    if (r.status == LPStatus::Infeasible) return std::nullopt;
    if (r.status != LPStatus::Optimal)
      throw Error(ErrorCode::Internal, "support LP over a bounded window is unbounded");
    out.push_back(r.value);
  }
  return out;
}

WindowDistance finite(double v) { return WindowDistance{WindowKind::Finite, v}; }

std::vector<double> as_doubles(const std::vector<WindowDistance>& ds) {
  std::vector<double> out;
  out.reserve(ds.size());
  for (const auto& d : ds) out.push_back(d.as_double());
  return out;
}

double parameter_of(const PolyhedronTrajectory& t, std::size_t k) {
  return t.parameters.empty() ? static_cast<double>(k) : t.parameters[k];
}

double l2_distance(VectorView a, VectorView b, Rational* squared = nullptr) {
  Rational s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
  if (squared) *squared = s;
  return std::sqrt(to_double(s));
}

Vector limit_cost(const CostTrajectory& cost, const LimitOptions& opts, bool* declared) {
  if (cost.declared_limit) {
    *declared = true;
    return *cost.declared_limit;
  }
  *declared = false;
  const std::size_t n = cost.samples.front().size();
  Vector c(n);
  std::vector<double> comp(cost.samples.size());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < comp.size(); ++k) comp[k] = to_double(cost.samples[k][j]);
    const auto e = estimate_limit(comp, opts.eps_limit);
    if (e.kind != LimitKind::Finite)
      throw Error(ErrorCode::InvalidArgument, "cost trajectory does not converge");
    c[j] = rationalize(e.value, std::max(opts.eps_limit, 2 * e.error), opts.max_denominator);
  }
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

ConstraintTrajectory::ConstraintTrajectory(std::size_t n, std::vector<HalfSpace> exact,
                                           std::vector<std::vector<double>> numeric,
                                           std::optional<DeclaredLimit> declared)
    : n_(n), exact_(std::move(exact)), declared_(std::move(declared)) {
  if (exact_.size() != numeric.size())
    throw Error(ErrorCode::InvalidArgument, "exact and numeric sample counts differ");
  if (exact_.size() < 3) throw Error(ErrorCode::TooFewSamples, "a constraint needs at least 3 samples");
  for (std::size_t k = 0; k < exact_.size(); ++k) {
    if (exact_[k].a.size() != n || numeric[k].size() != n + 1)
      throw Error(ErrorCode::InvalidArgument, "sample row length differs from n + 1");
    if (is_zero(exact_[k].a)) throw Error(ErrorCode::InvalidArgument, "zero normal in a sample");
    std::vector<double> a(numeric[k].begin(), numeric[k].end() - 1);
    const double r = norm2(a);
    if (!(r > 0) || !std::isfinite(r))
      throw Error(ErrorCode::InvalidArgument, "degenerate numeric normal in a sample");
    for (auto& x : a) x /= r;
    normals_.push_back(std::move(a));
    offsets_.push_back(numeric[k].back() / r);
  }
  if (declared_)
    if (const auto* h = std::get_if<HalfSpace>(&*declared_)) {
      if (h->a.size() != n) throw Error(ErrorCode::InvalidArgument, "declared limit length differs from n");
      if (is_zero(h->a)) throw Error(ErrorCode::InvalidArgument, "declared limit has a zero normal");
    }
}

ConstraintTrajectory ConstraintTrajectory::from_exact(std::size_t n, std::vector<HalfSpace> exact,
                                                      std::optional<DeclaredLimit> declared) {
  std::vector<std::vector<double>> numeric;
  for (const auto& h : exact) {
    auto row = to_double(h.a);
    row.push_back(to_double(h.b));
    numeric.push_back(std::move(row));
  }
  return ConstraintTrajectory(n, std::move(exact), std::move(numeric), std::move(declared));
}

std::size_t PolyhedronTrajectory::sample_count() const {
  return constraints.empty() ? 0 : constraints.front().size();
}

Polyhedron PolyhedronTrajectory::sample(std::size_t k) const {
  std::vector<HalfSpace> rows;
  rows.reserve(constraints.size());
  for (const auto& c : constraints) rows.push_back(c.exact().at(k));
  return Polyhedron(n, std::move(rows));
}

void PolyhedronTrajectory::validate() const {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "trajectory dimension must be positive");
  if (constraints.empty()) throw Error(ErrorCode::InvalidArgument, "trajectory has no constraints");
  const std::size_t k = sample_count();
  for (const auto& c : constraints) {
    if (c.dim() != n) throw Error(ErrorCode::DimensionMismatch, "constraint dimension differs from n");
    if (c.size() != k)
      throw Error(ErrorCode::InvalidArgument, "every constraint needs a row at every sample");
  }
  if (!parameters.empty() && parameters.size() != k)
    throw Error(ErrorCode::InvalidArgument, "sample labels and rows disagree in count");
  if (cost) {
    if (cost->samples.size() != k)
      throw Error(ErrorCode::InvalidArgument, "cost needs one vector per sample");
    for (const auto& c : cost->samples)
      if (c.size() != n) throw Error(ErrorCode::DimensionMismatch, "cost length differs from n");
    if (cost->declared_limit && cost->declared_limit->size() != n)
      throw Error(ErrorCode::DimensionMismatch, "declared cost length differs from n");
  }
}

// ---------------------------------------------------------------------------

std::string_view to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::Finite: return "Finite";
    case LimitKind::PlusInfinity: return "PlusInfinity";
    case LimitKind::MinusInfinity: return "MinusInfinity";
    case LimitKind::Oscillating: return "Oscillating";
  }
  return "Unknown";
}

LimitEstimate estimate_limit(std::span<const double> seq, double eps) {
  if (seq.size() < 3) throw Error(ErrorCode::TooFewSamples, "limit estimation needs at least 3 samples");
  for (double x : seq)
    if (std::isnan(x)) throw Error(ErrorCode::InvalidArgument, "NaN in a sampled sequence");
  const auto tail = seq.subspan(seq.size() - tail_length(seq.size()));
  const double last = tail.back();

  std::vector<double> d(tail.size() - 1);
  for (std::size_t i = 0; i + 1 < tail.size(); ++i) d[i] = tail[i + 1] - tail[i];
  const bool rising = std::all_of(d.begin(), d.end(), [](double x) { return x > 0; });
  const bool falling = std::all_of(d.begin(), d.end(), [](double x) { return x < 0; });
  auto escape = [&] {
    return LimitEstimate{last > 0 ? LimitKind::PlusInfinity : LimitKind::MinusInfinity, 0, 0, false};
  };

  if (!std::isfinite(last) || std::abs(last) > 1 / eps) {
    if ((last > 0 && rising) || (last < 0 && falling)) return escape();
    return LimitEstimate{LimitKind::Oscillating, 0, 0, false};
  }

  double max_d = 0, scale = 1;
  for (double x : d) max_d = std::max(max_d, std::abs(x));
  for (double x : tail) scale = std::max(scale, std::abs(x));
  if (max_d <= eps) return LimitEstimate{LimitKind::Finite, last, max_d, false};

  const double noise = 64 * DBL_EPSILON * scale;
  bool expanding = rising || falling;
  bool contracting = true;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    const double a = std::abs(d[i]), b = std::abs(d[i + 1]);
    if (b < a) expanding = false;
    if (!(b < a || b <= noise)) contracting = false;
  }
  if (expanding) return escape();
  if (!contracting) return LimitEstimate{LimitKind::Oscillating, 0, 0, false};

  // Repeated Aitken extrapolation; stop once a level no longer tightens.
  std::vector<double> level(tail.begin(), tail.end());
  double best = last;
  double err = std::max(std::abs(d.back()), noise);
  while (level.size() >= 3) {
    std::vector<double> next;
    for (std::size_t i = 0; i + 2 < level.size(); ++i) {
      const double d1 = level[i + 1] - level[i];
      const double d2 = level[i + 2] - level[i + 1];
      const double den = d2 - d1;
      next.push_back(std::abs(den) <= noise ? level[i + 2] : level[i + 2] - d2 * d2 / den);
    }
    const double cand = next.back();
    const double cand_err = std::max(next.size() >= 2 ? std::abs(next.back() - next[next.size() - 2])
                                                       : std::abs(cand - best),
                                      noise);
    if (!(cand_err < err)) break;
    best = cand;
    err = cand_err;
    level = std::move(next);
  }
  return LimitEstimate{LimitKind::Finite, best, err, false};
}

LimitEstimate classify_offset(const ConstraintTrajectory& t, double eps_limit) {
  if (t.size() < 3) throw Error(ErrorCode::TooFewSamples, "a constraint needs at least 3 samples");
  if (const auto& dl = t.declared()) {
    if (std::holds_alternative<PlusInfinity>(*dl)) return LimitEstimate{LimitKind::PlusInfinity, 0, 0, true};
    double b = 0;
    unit_of(std::get<HalfSpace>(*dl), &b);
    return LimitEstimate{LimitKind::Finite, b, 0, true};
  }
  return estimate_limit(t.unit_offsets(), eps_limit);
}

std::optional<RowLimit> row_limit(const ConstraintTrajectory& t, std::size_t index, const LimitOptions& opts) {
  RowLimit out;
  out.constraint = index;
  if (const auto& dl = t.declared()) {
    if (std::holds_alternative<PlusInfinity>(*dl)) return std::nullopt;
    out.declared = true;
    out.rational = std::get<HalfSpace>(*dl);
    out.unit_normal = unit_of(out.rational, &out.unit_offset);
    return out;
  }
  const auto off = classify_offset(t, opts.eps_limit);
  switch (off.kind) {
    case LimitKind::PlusInfinity: return std::nullopt;
    case LimitKind::MinusInfinity:
      throw Error(ErrorCode::OffsetDiverges,
                  "offset of constraint " + std::to_string(index) + " tends to -inf: the limit set is empty");
    case LimitKind::Oscillating:
      throw Error(ErrorCode::OffsetOscillates, "offset of constraint " + std::to_string(index) + " oscillates");
    case LimitKind::Finite: break;
  }
  auto normal = estimate_unit_vector(t.unit_normals(), opts.eps_limit);
  if (!normal)
    throw Error(ErrorCode::OffsetOscillates, "normal of constraint " + std::to_string(index) + " does not converge");
  out.unit_normal = std::move(normal->value);
  out.unit_offset = off.value;
  out.error = std::max(off.error, normal->error);
  out.rational = rationalize_row(out.unit_normal, out.unit_offset, out.error, opts);
  return out;
}

std::vector<IEPair> detect_ie_pairs(const PolyhedronTrajectory& t, std::span<const RowLimit> limits, double eps) {
  std::vector<IEPair> out;
  for (std::size_t p = 0; p < limits.size(); ++p)
    for (std::size_t q = p + 1; q < limits.size(); ++q) {
      double bp = 0, bq = 0;
      const auto ap = unit_of(limits[p].rational, &bp);
      const auto aq = unit_of(limits[q].rational, &bq);
      std::vector<double> s(ap.size());
      for (std::size_t j = 0; j < s.size(); ++j) s[j] = ap[j] + aq[j];
      if (!(norm2(s) < eps && std::abs(bp + bq) < eps)) continue;
      const auto& ti = t.constraints.at(limits[p].constraint);
      const auto& tj = t.constraints.at(limits[q].constraint);
      bool parallel = true;
      for (std::size_t k = 0; k < ti.size() && parallel; ++k) {
        for (std::size_t j = 0; j < s.size(); ++j) s[j] = ti.unit_normals()[k][j] + tj.unit_normals()[k][j];
        parallel = norm2(s) <= eps;
      }
      out.push_back(IEPair{limits[p].constraint, limits[q].constraint, parallel});
    }
  return out;
}

AuxiliaryConstraint auxiliary_limit(const ConstraintTrajectory& ti, const ConstraintTrajectory& tj,
                                    std::size_t i, std::size_t j, const LimitOptions& opts) {
  if (ti.size() != tj.size() || ti.dim() != tj.dim())
    throw Error(ErrorCode::InvalidArgument, "paired constraints must share samples");
  const std::size_t n = ti.dim();
  AuxiliaryConstraint out;
  out.i = i;
  out.j = j;
  std::vector<std::vector<double>> vs;
  std::vector<double> us;
  for (std::size_t k = 0; k < ti.size(); ++k) {
    const auto& a = ti.unit_normals()[k];
    const auto& b = tj.unit_normals()[k];
    double c = 0;
    for (std::size_t q = 0; q < n; ++q) c += a[q] * b[q];
    const double det = 1 - c * c;
    std::vector<double> s(n);
    for (std::size_t q = 0; q < n; ++q) s[q] = a[q] + b[q];
    const double sn = norm2(s);
    if (det <= 16 * DBL_EPSILON || sn <= opts.eps_limit) continue;  // hyperplanes parallel here
    const double bi = ti.unit_offsets()[k], bj = tj.unit_offsets()[k];
    const double y1 = (bi - c * bj) / det, y2 = (bj - c * bi) / det;
    double u = 0;
    for (std::size_t q = 0; q < n; ++q) {
      s[q] /= sn;
      u += s[q] * (y1 * a[q] + y2 * b[q]);
    }
    vs.push_back(std::move(s));
    us.push_back(u);
  }
  out.samples_used = us.size();
  if (us.empty()) throw Error(ErrorCode::ParallelPair, "constraints are parallel at every sample");
  if (us.size() < 3) throw Error(ErrorCode::TooFewSamples, "fewer than 3 non-parallel samples in the pair");

  auto v = estimate_unit_vector(vs, opts.eps_limit);
  if (!v) throw Error(ErrorCode::OffsetOscillates, "bisector of the pair does not converge");
  out.v = std::move(v->value);
  const auto u = estimate_limit(us, opts.eps_limit);
  if (u.kind == LimitKind::Oscillating)
    throw Error(ErrorCode::OffsetOscillates, "auxiliary offset of the pair oscillates");
  out.error = v->error;
  if (u.kind == LimitKind::Finite) {
    out.u = u.value;
    out.error = std::max(out.error, u.error);
    out.rational = rationalize_row(out.v, u.value, out.error, opts);
  }
  return out;
}

LimitReport construct_limit(const PolyhedronTrajectory& t, const LimitOptions& opts) {
  t.validate();
  IndexSet kept, dropped;
  std::vector<RowLimit> rows;
  for (std::size_t i = 0; i < t.constraints.size(); ++i) {
    auto rl = row_limit(t.constraints[i], i, opts);
    if (rl) {
      kept.push_back(i);
      rows.push_back(std::move(*rl));
    } else {
      dropped.push_back(i);
    }
  }

  std::vector<std::string> warnings;
  auto ie = detect_ie_pairs(t, rows, opts.eps_limit);
  std::vector<AuxiliaryConstraint> aux;
  for (const auto& pr : ie) {
    if (pr.parallel) continue;
    aux.push_back(auxiliary_limit(t.constraints[pr.i], t.constraints[pr.j], pr.i, pr.j, opts));
    if (!aux.back().u)
      warnings.push_back("auxiliary constraint for pair (" + std::to_string(pr.i) + "," + std::to_string(pr.j) +
                         ") diverges and is dropped");
  }

  std::vector<HalfSpace> limit_rows;
  for (const auto& r : rows) limit_rows.push_back(r.rational);
  for (const auto& a : aux)
    if (a.rational) limit_rows.push_back(*a.rational);
  if (limit_rows.empty())
    throw Error(ErrorCode::InvalidArgument, "every constraint escapes: the limit would be the whole space");
  for (auto i : dropped) warnings.push_back("constraint " + std::to_string(i) + " escapes to +inf and is dropped");

  Polyhedron limit(t.n, std::move(limit_rows));
  if (!is_feasible(limit)) warnings.push_back("the constructed limit is empty");
  return LimitReport{std::move(limit), std::move(kept), std::move(dropped), std::move(rows),
                     std::move(ie),    std::move(aux),  std::move(warnings)};
}

// ---------------------------------------------------------------------------

std::string_view to_string(WindowKind kind) {
  switch (kind) {
    case WindowKind::Finite: return "Finite";
    case WindowKind::Infinite: return "Infinite";
    case WindowKind::BothEmpty: return "BothEmpty";
  }
  return "Unknown";
}

double WindowDistance::as_double() const {
  switch (kind) {
    case WindowKind::Finite: return value;
    case WindowKind::Infinite: return std::numeric_limits<double>::infinity();
    case WindowKind::BothEmpty: return 0;
  }
  return value;
}

std::vector<Vector> default_directions(std::size_t n, std::uint64_t seed, std::size_t count) {
  std::vector<Vector> dirs;
  for (std::size_t j = 0; j < n; ++j)
    for (int sign : {1, -1}) {
      Vector e(n);
      e[j] = sign;
      dirs.push_back(std::move(e));
    }
  std::mt19937_64 eng(seed);
  auto uniform = [&] { return (static_cast<double>(eng() >> 11) + 0.5) * 0x1p-53; };
  std::vector<double> spare;
  auto gaussian = [&] {
    if (!spare.empty()) {
      const double z = spare.back();
      spare.pop_back();
      return z;
    }
    const double r = std::sqrt(-2 * std::log(uniform()));
    const double th = 2 * M_PI * uniform();
    spare.push_back(r * std::sin(th));
    return r * std::cos(th);
  };
  std::vector<double> g(n);
  while (dirs.size() < 2 * n + count) {
    for (auto& x : g) x = gaussian();
    const double r = norm2(g);
    if (r < 1e-9) continue;
    Vector u(n);
    for (std::size_t j = 0; j < n; ++j) u[j] = rationalize(g[j] / r, 1e-12, 1000000);
    if (is_zero(u)) continue;
    dirs.push_back(std::move(u));
  }
  return dirs;
}

double default_window(const Polyhedron& candidate) {
  double m = 0;
  for (const auto& v : enumerate_vertices(candidate)) m = std::max(m, norm2(to_double(v.point)));
  return std::clamp(2 * (1 + m), 1.0, 1e6);
}

SupportProfile support_profile(const Polyhedron& p, double radius, std::span<const Vector> directions) {
  check_directions(p.dim(), directions);
  auto rows = box_rows(p.dim(), p.dim(), exact_radius(radius));
  rows.insert(rows.end(), p.rows().begin(), p.rows().end());
  return lifted_profile(p.dim(), rows, directions);
}

SupportProfile support_profile(const Cone& c, double radius, std::span<const Vector> directions) {
  const std::size_t n = c.dim();
  check_directions(n, directions);
  const Rational r = exact_radius(radius);
  if (c.form() == Cone::Form::HalfSpaces) {
    auto rows = box_rows(n, n, r);
    for (const auto& a : c.rows()) rows.push_back(HalfSpace{a, Rational(0)});
    return lifted_profile(n, rows, directions);
  }
  // Variables (p, lambda): p = G lambda, lambda >= 0, p in the box.
  const auto& gens = c.generators();
  const std::size_t nv = n + gens.size();
  auto rows = box_rows(nv, n, r);
  for (std::size_t j = 0; j < n; ++j) {
    Vector a(nv);
    a[j] = 1;
    for (std::size_t k = 0; k < gens.size(); ++k) a[n + k] = -gens[k][j];
    Vector neg = a;
    for (auto& x : neg) x = -x;
    rows.push_back(HalfSpace{std::move(a), Rational(0)});
    rows.push_back(HalfSpace{std::move(neg), Rational(0)});
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Vector a(nv);
    a[n + k] = -1;
    rows.push_back(HalfSpace{std::move(a), Rational(0)});
  }
  return lifted_profile(nv, rows, directions);
}

WindowDistance profile_distance(const SupportProfile& a, const SupportProfile& b) {
  if (!a && !b) return WindowDistance{WindowKind::BothEmpty, 0};
  if (!a || !b) return WindowDistance{WindowKind::Infinite, std::numeric_limits<double>::infinity()};
  if (a->size() != b->size()) throw Error(ErrorCode::Internal, "support profiles over different directions");
  Rational m = 0;
  for (std::size_t i = 0; i < a->size(); ++i) {
    Rational diff = (*a)[i] - (*b)[i];
    if (diff < 0) diff = -diff;
    if (diff > m) m = diff;
  }
  return finite(to_double(m));
}

WindowDistance window_distance(const Polyhedron& p, const Polyhedron& q, double radius,
                               std::span<const Vector> directions) {
  if (p.dim() != q.dim()) throw Error(ErrorCode::DimensionMismatch, "window distance across dimensions");
  return profile_distance(support_profile(p, radius, directions), support_profile(q, radius, directions));
}

WindowDistance window_distance(const Cone& p, const Cone& q, double radius, std::span<const Vector> directions) {
  if (p.dim() != q.dim()) throw Error(ErrorCode::DimensionMismatch, "window distance across dimensions");
  return profile_distance(support_profile(p, radius, directions), support_profile(q, radius, directions));
}

bool trends_to_zero(std::span<const double> d, double tol, double eps_limit) {
  if (d.empty()) return false;
  const auto tail = d.subspan(d.size() - tail_length(d.size()));
  for (double x : tail)
    if (!std::isfinite(x)) return false;
  for (std::size_t i = 0; i + 1 < tail.size(); ++i)
    if (tail[i + 1] > tail[i] + tol) return false;
  if (tail.back() < tol) return true;
  if (tail.size() < 3) return false;
  const auto e = estimate_limit(d, eps_limit);
  return e.kind == LimitKind::Finite && std::abs(e.value) < tol && e.error < tol;
}

// ---------------------------------------------------------------------------

ConvergenceReport verify_convergence(const PolyhedronTrajectory& t, const Polyhedron& candidate,
                                     const DiagnosticOptions& opts) {
  t.validate();
  if (candidate.dim() != t.n) throw Error(ErrorCode::DimensionMismatch, "candidate dimension differs from n");
  if (!is_feasible(candidate)) throw Error(ErrorCode::EmptyPolyhedron, "candidate limit is empty");
  ConvergenceReport rep;
  rep.tolerance = opts.tolerance;
  rep.window_radius = opts.window ? *opts.window : default_window(candidate);
  const auto dirs = default_directions(t.n, opts.seed);
  const auto target = support_profile(candidate, rep.window_radius, dirs);
  const std::size_t limit_vertices = enumerate_vertices(candidate).size();
  std::vector<double> ds;
  for (std::size_t k = 0; k < t.sample_count(); ++k) {
    const Polyhedron ek = t.sample(k);
    const auto d = profile_distance(support_profile(ek, rep.window_radius, dirs), target);
    rep.distances.push_back(SampleDistance{k, parameter_of(t, k), d});
    rep.vertex_count_check.push_back(VertexCount{k, enumerate_vertices(ek).size(), limit_vertices});
    ds.push_back(d.as_double());
  }
  rep.converged = trends_to_zero(ds, opts.tolerance, opts.limit.eps_limit);
  return rep;
}

TrackReport track_vertices(const PolyhedronTrajectory& t, const Polyhedron& limit, const DiagnosticOptions& opts) {
  t.validate();
  const auto lv = enumerate_vertices(limit);
  if (lv.empty()) throw Error(ErrorCode::NoVertices, "limit polyhedron has no vertices");
  TrackReport rep;
  for (const auto& v : lv) rep.tracks.push_back(VertexTrack{v.point, {}, false});
  for (std::size_t k = 0; k < t.sample_count(); ++k) {
    const auto verts = enumerate_vertices(t.sample(k));
    std::vector<bool> used(verts.size(), false);
    for (auto& tr : rep.tracks) {
      std::optional<std::size_t> best;
      Rational best_sq = 0;
      for (std::size_t q = 0; q < verts.size(); ++q) {
        Rational sq;
        l2_distance(verts[q].point, tr.limit_vertex, &sq);
        if (!best || sq < best_sq) {
          best = q;
          best_sq = sq;
        }
      }
      if (!best) {
        tr.points.push_back(TrackPoint{std::nullopt, std::numeric_limits<double>::infinity()});
        continue;
      }
      used[*best] = true;
      tr.points.push_back(TrackPoint{verts[*best].point, std::sqrt(to_double(best_sq))});
    }
    std::vector<Escapee> esc;
    for (std::size_t q = 0; q < verts.size(); ++q)
      if (!used[q]) esc.push_back(Escapee{verts[q].point, norm2(to_double(verts[q].point))});
    rep.escapees.push_back(std::move(esc));
  }
  for (auto& tr : rep.tracks)
    tr.converged = !tr.points.empty() && tr.points.back().vertex && tr.points.back().distance < opts.tolerance;
  return rep;
}

ConeMetrics cone_convergence(const PolyhedronTrajectory& t, const Polyhedron& limit, const VertexTrack& track,
                             const DiagnosticOptions& opts) {
  if (!track.converged) throw Error(ErrorCode::TrackNotConverged, "vertex track has not converged");
  if (track.points.size() != t.sample_count())
    throw Error(ErrorCode::InvalidArgument, "track and trajectory disagree in sample count");
  const auto dirs = default_directions(t.n, opts.seed);
  const auto lim_t = support_profile(tangent_cone(limit, track.limit_vertex), 1.0, dirs);
  const auto lim_n = support_profile(normal_cone(limit, track.limit_vertex), 1.0, dirs);
  ConeMetrics out;
  out.limit_vertex = track.limit_vertex;
  for (std::size_t k = 0; k < t.sample_count(); ++k) {
    const auto& pt = track.points[k].vertex;
    if (!pt) {
      out.tangent.push_back(WindowDistance{WindowKind::Infinite, std::numeric_limits<double>::infinity()});
      out.normal.push_back(out.tangent.back());
      continue;
    }
    const Polyhedron ek = t.sample(k);
    out.tangent.push_back(profile_distance(support_profile(tangent_cone(ek, *pt), 1.0, dirs), lim_t));
    out.normal.push_back(profile_distance(support_profile(normal_cone(ek, *pt), 1.0, dirs), lim_n));
  }
  out.tangent_converged = trends_to_zero(as_doubles(out.tangent), opts.tolerance, opts.limit.eps_limit);
  out.normal_converged = trends_to_zero(as_doubles(out.normal), opts.tolerance, opts.limit.eps_limit);
  return out;
}

ArgmaxReport argmax_convergence(const PolyhedronTrajectory& t, const Polyhedron& limit, const DiagnosticOptions& opts) {
  t.validate();
  if (!t.cost) throw Error(ErrorCode::InvalidArgument, "trajectory has no cost");
  const auto& cost = *t.cost;
  ArgmaxReport rep;
  rep.sense = cost.sense;
  rep.limit_cost = limit_cost(cost, opts.limit, &rep.limit_cost_declared);

  std::vector<Polyhedron> faces;
  std::vector<std::size_t> counts;
  for (std::size_t k = 0; k < t.sample_count(); ++k) {
    const Polyhedron ek = t.sample(k);
    auto sol = solve_glp(ek, cost.samples[k], cost.sense);
    if (sol.status != GLPStatus::Attained)
      throw Error(ErrorCode::MaxNotAttained, "optimum not attained at sample " + std::to_string(k) + " (" +
                                                 std::string(to_string(sol.status)) + ")");
    rep.values.push_back(sol.value);
    faces.push_back(std::move(*sol.argmin_face));
    counts.push_back(enumerate_vertices(ek).size());
  }

  rep.window_radius = opts.window ? *opts.window : default_window(limit);
  const auto lim = solve_glp(limit, rep.limit_cost, cost.sense);
  if (lim.status == GLPStatus::Attained) {
    rep.limit_value = lim.value;
    const auto dirs = default_directions(t.n, opts.seed);
    const auto target = support_profile(*lim.argmin_face, rep.window_radius, dirs);
    for (const auto& f : faces) rep.face_distances.push_back(profile_distance(support_profile(f, rep.window_radius, dirs), target));
  }

  rep.conditions.compact = is_bounded(limit);
  const std::size_t f0 = enumerate_vertices(limit).size();
  const std::size_t tail = tail_length(counts.size());
  rep.conditions.vertex_count_stable =
      std::all_of(counts.end() - static_cast<std::ptrdiff_t>(tail), counts.end(), [&](std::size_t c) { return c == f0; });
  if (rep.limit_value) {
    std::vector<double> gaps;
    for (const auto& v : rep.values) gaps.push_back(std::abs(to_double(v - *rep.limit_value)));
    rep.conditions.max_converges = trends_to_zero(gaps, opts.tolerance, opts.limit.eps_limit);
    rep.converged = trends_to_zero(as_doubles(rep.face_distances), opts.tolerance, opts.limit.eps_limit);
  }
  return rep;
}

BoundaryReport boundary_convergence(const PolyhedronTrajectory& t, const Polyhedron& limit,
                                    const DiagnosticOptions& opts) {
  t.validate();
  BoundaryReport rep;
  rep.window_radius = opts.window ? *opts.window : default_window(limit);
  const auto dirs = default_directions(t.n, opts.seed);

  std::vector<std::optional<RowLimit>> traj(t.constraints.size());
  for (std::size_t i = 0; i < t.constraints.size(); ++i) {
    try {
      traj[i] = row_limit(t.constraints[i], i, opts.limit);
    } catch (const Error&) {
      traj[i].reset();
    }
  }

  struct Matched {
    std::size_t constraint;
    SupportProfile target;
  };
  std::vector<Matched> matched;
  for (auto r : irredundant_rows(limit)) {
    double b = 0;
    const auto a = unit_of(limit[r], &b);
    std::optional<std::size_t> best;
    double best_gap = 1e-6;
    for (std::size_t i = 0; i < traj.size(); ++i) {
      if (!traj[i]) continue;
      double gap = std::abs(b - traj[i]->unit_offset);
      for (std::size_t j = 0; j < a.size(); ++j) gap += std::abs(a[j] - traj[i]->unit_normal[j]);
      if (gap < best_gap) {
        best = i;
        best_gap = gap;
      }
    }
    rep.facets.push_back(FacetMatch{r, best});
    if (!best) continue;
    Vector neg = limit[r].a;
    for (auto& x : neg) x = -x;
    const HalfSpace eq[] = {HalfSpace{std::move(neg), -limit[r].b}};
    matched.push_back(Matched{*best, support_profile(limit.with_rows(eq), rep.window_radius, dirs)});
  }
  if (matched.empty()) return rep;

  for (std::size_t k = 0; k < t.sample_count(); ++k) {
    const Polyhedron ek = t.sample(k);
    WindowDistance worst = finite(0);
    for (const auto& m : matched) {
      const auto& h = t.constraints[m.constraint].exact()[k];
      Vector neg = h.a;
      for (auto& x : neg) x = -x;
      const HalfSpace eq[] = {HalfSpace{std::move(neg), -h.b}};
      const auto d = profile_distance(support_profile(ek.with_rows(eq), rep.window_radius, dirs), m.target);
      if (d.as_double() > worst.as_double()) worst = d;
    }
    rep.metric.push_back(worst);
  }
  rep.converged = trends_to_zero(as_doubles(rep.metric), opts.tolerance, opts.limit.eps_limit);
  return rep;
}

}  // namespace polycone
