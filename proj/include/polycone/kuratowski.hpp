#pragma once

// Limits of sampled polyhedron families and numeric convergence diagnostics.
//
// Constraint data arrive twice: as exact rows (each sample is an exact
// Polyhedron) and as binary64 rows scaled to unit normals, which drive the
// limit estimates. Everything derived from the float side is heuristic and
// flagged as numeric in the reports.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "polycone/lp.hpp"
#include "polycone/polyhedron.hpp"

namespace polycone {

struct PlusInfinity {
  bool operator==(const PlusInfinity&) const = default;
};

/// A declared limit is either an exact row or the statement b -> +inf.
using DeclaredLimit = std::variant<HalfSpace, PlusInfinity>;

class ConstraintTrajectory {
 public:
  /// `numeric` holds one raw row {a_1..a_n, b} per sample; it is scaled to
  /// unit normals here. Throws TooFewSamples below 3 samples and
  /// InvalidArgument on zero normals or ragged input.
  ConstraintTrajectory(std::size_t n, std::vector<HalfSpace> exact,
                       std::vector<std::vector<double>> numeric,
                       std::optional<DeclaredLimit> declared = std::nullopt);

  /// Float rows taken from the exact ones.
  static ConstraintTrajectory from_exact(std::size_t n, std::vector<HalfSpace> exact,
                                         std::optional<DeclaredLimit> declared = std::nullopt);

  std::size_t dim() const { return n_; }
  std::size_t size() const { return exact_.size(); }
  const std::vector<HalfSpace>& exact() const { return exact_; }
  const std::vector<std::vector<double>>& unit_normals() const { return normals_; }
  const std::vector<double>& unit_offsets() const { return offsets_; }
  const std::optional<DeclaredLimit>& declared() const { return declared_; }

 private:
  std::size_t n_;
  std::vector<HalfSpace> exact_;
  std::vector<std::vector<double>> normals_;
  std::vector<double> offsets_;
  std::optional<DeclaredLimit> declared_;
};

struct CostTrajectory {
  Sense sense = Sense::Maximize;
  std::vector<Vector> samples;
  std::optional<Vector> declared_limit;
};

struct PolyhedronTrajectory {
  std::size_t n = 0;
  std::vector<double> parameters;  // sample labels, informational
  std::vector<ConstraintTrajectory> constraints;
  std::optional<CostTrajectory> cost;

  std::size_t sample_count() const;
  /// E_k as an exact polyhedron.
  Polyhedron sample(std::size_t k) const;
  /// Checks the fixed-cardinality contract; throws InvalidArgument.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Limit estimation

enum class LimitKind { Finite, PlusInfinity, MinusInfinity, Oscillating };

std::string_view to_string(LimitKind kind);

struct LimitEstimate {
  LimitKind kind = LimitKind::Finite;
  double value = 0;  // meaningful for Finite
  double error = 0;  // a-posteriori size of the residual
  bool declared = false;
};

/// Tail analysis of a scalar sequence. Constant tails give the last value,
/// geometrically contracting tails are accelerated by repeated Aitken steps,
/// non-contracting monotone tails escape, everything else oscillates.
LimitEstimate estimate_limit(std::span<const double> seq, double eps);

/// Limit of the unit-scaled offsets. A declared limit always wins.
LimitEstimate classify_offset(const ConstraintTrajectory& t, double eps_limit);

struct RowLimit {
  std::size_t constraint = 0;
  bool declared = false;
  std::vector<double> unit_normal;  // float estimate, Euclidean unit
  double unit_offset = 0;
  double error = 0;
  HalfSpace rational;  // continued-fraction rounding of the estimate
};

struct LimitOptions {
  double eps_limit = 1e-9;
  std::int64_t max_denominator = 1000000;
};

/// Limit of a single constraint with a finite offset; nullopt when the
/// offset escapes to +inf. Throws OffsetDiverges or OffsetOscillates.
std::optional<RowLimit> row_limit(const ConstraintTrajectory& t, std::size_t index,
                                  const LimitOptions& opts = {});

struct IEPair {
  std::size_t i = 0;
  std::size_t j = 0;
  bool parallel = false;
};

/// Inverse-equivalent pairs among limit rows: unit normals and unit offsets
/// both cancel within eps. `parallel` when the sampled normals are opposite
/// at every sample.
std::vector<IEPair> detect_ie_pairs(const PolyhedronTrajectory& t, std::span<const RowLimit> limits,
                                    double eps);

struct AuxiliaryConstraint {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<double> v;      // limit bisector
  std::optional<double> u;    // nullopt when divergent
  double error = 0;
  std::optional<HalfSpace> rational;
  std::size_t samples_used = 0;
};

/// <v, x> <= u from the bisector of a non-parallel i-e pair, with u the value
/// of v at the minimum-norm point of both hyperplanes.
AuxiliaryConstraint auxiliary_limit(const ConstraintTrajectory& ti, const ConstraintTrajectory& tj,
                                    std::size_t i, std::size_t j, const LimitOptions& opts = {});

struct LimitReport {
  Polyhedron limit;
  IndexSet kept;
  IndexSet dropped_plus_infinity;
  std::vector<RowLimit> rows;  // one per kept constraint
  std::vector<IEPair> ie_pairs;
  std::vector<AuxiliaryConstraint> auxiliary;
  std::vector<std::string> warnings;
};

LimitReport construct_limit(const PolyhedronTrajectory& t, const LimitOptions& opts = {});

// ---------------------------------------------------------------------------
// Window metric

enum class WindowKind { Finite, Infinite, BothEmpty };

std::string_view to_string(WindowKind kind);

struct WindowDistance {
  WindowKind kind = WindowKind::Finite;
  double value = 0;  // 0 for BothEmpty, +inf for Infinite

  double as_double() const;
};

/// ±e_j, then `count` Gaussian-direction unit vectors from mt19937_64(seed),
/// rounded to rationals.
std::vector<Vector> default_directions(std::size_t n, std::uint64_t seed = 42, std::size_t count = 64);

/// 2 (1 + max vertex norm), clamped to [1, 1e6].
double default_window(const Polyhedron& candidate);

/// Support values of a set clipped to the box [-R, R]^n; nullopt when the
/// clipped set is empty.
using SupportProfile = std::optional<std::vector<Rational>>;

SupportProfile support_profile(const Polyhedron& p, double radius, std::span<const Vector> directions);
SupportProfile support_profile(const Cone& c, double radius, std::span<const Vector> directions);

WindowDistance profile_distance(const SupportProfile& a, const SupportProfile& b);

/// max_u |h_{P∩B}(u) - h_{Q∩B}(u)|. Throws BadWindow.
WindowDistance window_distance(const Polyhedron& p, const Polyhedron& q, double radius,
                               std::span<const Vector> directions);
WindowDistance window_distance(const Cone& p, const Cone& q, double radius,
                               std::span<const Vector> directions);

/// Tail of `d` non-increasing within tol, ending below tol or extrapolating
/// below tol. Infinite entries fail.
bool trends_to_zero(std::span<const double> d, double tol, double eps_limit = 1e-9);

// ---------------------------------------------------------------------------
// Convergence reports

struct DiagnosticOptions {
  double tolerance = 1e-6;
  std::optional<double> window;  // default_window of the candidate if unset
  std::uint64_t seed = 42;
  LimitOptions limit;
};

struct SampleDistance {
  std::size_t index = 0;
  double parameter = 0;
  WindowDistance distance;
};

struct VertexCount {
  std::size_t index = 0;
  std::size_t sample = 0;
  std::size_t limit = 0;
};

struct ConvergenceReport {
  double window_radius = 0;
  double tolerance = 0;
  std::vector<SampleDistance> distances;
  bool converged = false;
  std::vector<VertexCount> vertex_count_check;
};

ConvergenceReport verify_convergence(const PolyhedronTrajectory& t, const Polyhedron& candidate,
                                     const DiagnosticOptions& opts = {});

struct TrackPoint {
  std::optional<Vector> vertex;  // nullopt when E_k has no vertex
  double distance = 0;
};

struct Escapee {
  Vector vertex;
  double norm = 0;
};

struct VertexTrack {
  Vector limit_vertex;
  std::vector<TrackPoint> points;  // one per sample
  bool converged = false;
};

struct TrackReport {
  std::vector<VertexTrack> tracks;
  std::vector<std::vector<Escapee>> escapees;  // per sample
};

TrackReport track_vertices(const PolyhedronTrajectory& t, const Polyhedron& limit,
                           const DiagnosticOptions& opts = {});

struct ConeMetrics {
  Vector limit_vertex;
  std::vector<WindowDistance> tangent;
  std::vector<WindowDistance> normal;
  bool tangent_converged = false;
  bool normal_converged = false;
};

/// Throws TrackNotConverged.
ConeMetrics cone_convergence(const PolyhedronTrajectory& t, const Polyhedron& limit,
                             const VertexTrack& track, const DiagnosticOptions& opts = {});

struct ArgmaxConditions {
  bool compact = false;
  bool vertex_count_stable = false;
  bool max_converges = false;
};

struct ArgmaxReport {
  Sense sense = Sense::Maximize;
  std::vector<Rational> values;              // per sample
  std::optional<Rational> limit_value;       // nullopt when not attained on the limit
  Vector limit_cost;
  bool limit_cost_declared = false;
  std::vector<WindowDistance> face_distances;  // empty when the limit has no optimum
  double window_radius = 0;
  ArgmaxConditions conditions;
  bool converged = false;
};

/// Throws MaxNotAttained naming the first sample without an optimum.
ArgmaxReport argmax_convergence(const PolyhedronTrajectory& t, const Polyhedron& limit,
                                const DiagnosticOptions& opts = {});

struct FacetMatch {
  std::size_t limit_row = 0;
  std::optional<std::size_t> constraint;  // nullopt when no trajectory row matches
};

struct BoundaryReport {
  double window_radius = 0;
  std::vector<FacetMatch> facets;
  std::vector<WindowDistance> metric;  // per sample, max over matched facets
  bool converged = false;
};

BoundaryReport boundary_convergence(const PolyhedronTrajectory& t, const Polyhedron& limit,
                                    const DiagnosticOptions& opts = {});

}  // namespace polycone
