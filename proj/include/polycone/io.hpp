#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "polycone/geometry.hpp"
#include "polycone/kuratowski.hpp"
#include "polycone/optimality.hpp"

namespace polycone::io {

using Json = nlohmann::ordered_json;

/// Throws ParseError with the path on unreadable or malformed files.
Json read_file(const std::filesystem::path& path);

// Exact values: "p/q" strings or JSON integers. Floats are rejected.
Rational rational_from(const Json& j);
Vector vector_from(const Json& j);
Json to_json(const Rational& q);
Json to_json(VectorView v);

/// {"n": int, "constraints": [{"a": [...], "b": "p/q"}, ...]}
Polyhedron polyhedron_from(const Json& j);
Json to_json(const Polyhedron& p);

bool is_union(const Json& j);
/// {"pieces": [polyhedron, ...]}, all of the same dimension.
std::vector<Polyhedron> union_from(const Json& j);

/// Trajectory rows accept JSON numbers (rounded with the denominator cap,
/// raw value kept for limit estimation) or exact strings/integers.
PolyhedronTrajectory trajectory_from(const Json& j, std::int64_t max_denominator);

Json to_json(const IndexSet& s);
Json to_json(const Vertex& v);
Json to_json(const Cone& c);
Json to_json(const GLPSolution& s);
Json to_json(const StabilityCone& s);
Json to_json(const StructureReport& s);
Json to_json(const Containment& c);
Json to_json(const WindowDistance& d);
Json to_json(const LimitReport& r);
Json to_json(const ConvergenceReport& r);
Json to_json(const TrackReport& r);
Json to_json(const ConeMetrics& m);
Json to_json(const ArgmaxReport& r);
Json to_json(const BoundaryReport& r);

/// Flat "path: value" listing for the text format.
void write_text(std::ostream& out, const Json& j);

}  // namespace polycone::io
