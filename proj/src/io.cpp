#include "polycone/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "polycone/error.hpp"

namespace polycone::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t dimension_from(const Json& j) {
  const auto& n = field(j, "n");
  if (!n.is_number_integer() || n.get<std::int64_t>() <= 0) schema("'n' must be a positive integer");
  return n.get<std::size_t>();
}

HalfSpace halfspace_from(const Json& j, std::size_t n) {
  HalfSpace h{vector_from(field(j, "a")), rational_from(field(j, "b"))};
  if (h.a.size() != n) schema("constraint length differs from n");
  return h;
}

Json halfspace_json(const HalfSpace& h) {
  Json o = Json::object();
  o["a"] = to_json(VectorView(h.a));
  o["b"] = to_json(h.b);
  return o;
}

// An entry of a trajectory row: exact value plus the float fed to the
// limit estimates.
std::pair<Rational, double> sample_entry(const Json& j, std::int64_t max_den) {
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) schema("non-finite number in a trajectory row");
    return {rationalize(x, 0.0, max_den), x};
  }
  const Rational q = rational_from(j);
  return {q, to_double(q)};
}

Json doubles(std::span<const double> v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

Json rationals(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

std::string_view sense_name(Sense s) { return s == Sense::Maximize ? "max" : "min"; }

void text_walk(std::ostream& out, const Json& j, const std::string& path) {
  if (j.is_object()) {
    if (j.empty()) out << path << ": {}\n";
    for (const auto& [k, v] : j.items()) text_walk(out, v, path.empty() ? k : path + "." + k);
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (flat) {
      out << path << ": (";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ", ";
        out << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      out << ")\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) text_walk(out, j[i], path + "[" + std::to_string(i) + "]");
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "malformed JSON in '" + path.string() + "': " + e.what());
  }
}

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
  schema("expected an exact rational (\"p/q\" string or integer), got " + j.dump());
}

Vector vector_from(const Json& j) {
  if (!j.is_array()) schema("expected an array of rationals, got " + j.dump());
  Vector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(rational_from(e));
  return v;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(VectorView v) { return rationals(v); }

Polyhedron polyhedron_from(const Json& j) {
  const std::size_t n = dimension_from(j);
  const auto& cs = field(j, "constraints");
  if (!cs.is_array()) schema("'constraints' must be an array");
  std::vector<HalfSpace> rows;
  for (const auto& c : cs) rows.push_back(halfspace_from(c, n));
  try {
    return Polyhedron(n, std::move(rows));
  } catch (const Error& e) {
    schema(e.what());
  }
}

Json to_json(const Polyhedron& p) {
  Json o = Json::object();
  o["n"] = p.dim();
  Json cs = Json::array();
  for (const auto& h : p.rows()) cs.push_back(halfspace_json(h));
  o["constraints"] = std::move(cs);
  return o;
}

bool is_union(const Json& j) { return j.is_object() && j.contains("pieces"); }

std::vector<Polyhedron> union_from(const Json& j) {
  const auto& ps = field(j, "pieces");
  if (!ps.is_array() || ps.empty()) schema("'pieces' must be a nonempty array");
  std::vector<Polyhedron> out;
  for (const auto& p : ps) out.push_back(polyhedron_from(p));
  for (const auto& p : out)
    if (p.dim() != out.front().dim()) schema("union pieces differ in dimension");
  return out;
}

PolyhedronTrajectory trajectory_from(const Json& j, std::int64_t max_den) {
  PolyhedronTrajectory t;
  t.n = dimension_from(j);
  if (j.contains("samples")) {
    for (const auto& s : j.at("samples")) t.parameters.push_back(sample_entry(s, max_den).second);
  }
  const auto& cs = field(j, "constraints");
  if (!cs.is_array() || cs.empty()) schema("'constraints' must be a nonempty array");
  for (const auto& c : cs) {
    const auto& rows = field(c, "rows");
    if (!rows.is_array()) schema("'rows' must be an array");
    std::vector<HalfSpace> exact;
    std::vector<std::vector<double>> numeric;
    for (const auto& r : rows) {
      if (!r.is_array() || r.size() != t.n + 1) schema("each sample row needs n + 1 entries");
      HalfSpace h;
      std::vector<double> f;
      for (std::size_t q = 0; q <= t.n; ++q) {
        auto [ex, fl] = sample_entry(r[q], max_den);
        if (q < t.n)
          h.a.push_back(std::move(ex));
        else
          h.b = std::move(ex);
        f.push_back(fl);
      }
      exact.push_back(std::move(h));
      numeric.push_back(std::move(f));
    }
    std::optional<DeclaredLimit> declared;
    if (c.contains("limit") && !c.at("limit").is_null()) {
      const auto& l = c.at("limit");
      if (l.is_string()) {
        if (l.get<std::string>() != "+inf") schema("limit must be an object, \"+inf\" or null");
        declared = PlusInfinity{};
      } else {
        declared = halfspace_from(l, t.n);
      }
    }
    t.constraints.emplace_back(t.n, std::move(exact), std::move(numeric), std::move(declared));
  }
  if (j.contains("cost") && !j.at("cost").is_null()) {
    const auto& c = j.at("cost");
    CostTrajectory cost;
    if (c.contains("sense")) {
      const auto s = c.at("sense").get<std::string>();
      if (s == "max") cost.sense = Sense::Maximize;
      else if (s == "min") cost.sense = Sense::Minimize;
      else schema("cost sense must be \"max\" or \"min\"");
    }
    for (const auto& v : field(c, "samples")) {
      Vector x;
      if (!v.is_array()) schema("cost samples must be arrays");
      for (const auto& e : v) x.push_back(sample_entry(e, max_den).first);
      cost.samples.push_back(std::move(x));
    }
    if (c.contains("limit") && !c.at("limit").is_null()) cost.declared_limit = vector_from(c.at("limit"));
    t.cost = std::move(cost);
  }
  t.validate();
  return t;
}

Json to_json(const IndexSet& s) {
  Json a = Json::array();
  for (auto i : s) a.push_back(i);
  return a;
}

Json to_json(const Vertex& v) {
  Json o = Json::object();
  o["point"] = to_json(VectorView(v.point));
  o["active"] = to_json(v.active);
  o["defining"] = to_json(v.defining);
  return o;
}

Json to_json(const Cone& c) {
  Json o = Json::object();
  o["n"] = c.dim();
  if (c.form() == Cone::Form::HalfSpaces) {
    o["form"] = "halfspaces";
    Json rows = Json::array();
    for (const auto& a : c.rows()) rows.push_back(to_json(VectorView(a)));
    o["rows"] = std::move(rows);
  } else {
    o["form"] = "generators";
    Json gens = Json::array();
    for (const auto& g : c.generators()) gens.push_back(to_json(VectorView(g)));
    o["generators"] = std::move(gens);
  }
  return o;
}

Json to_json(const GLPSolution& s) {
  Json o = Json::object();
  o["status"] = std::string(to_string(s.status));
  o["sense"] = std::string(sense_name(s.sense));
  if (s.status == GLPStatus::Attained) {
    o["value"] = to_json(s.value);
    o["vertex"] = to_json(VectorView(s.optimal_vertices.front().point));
    Json vs = Json::array();
    for (std::size_t i = 0; i < s.optimal_vertices.size(); ++i) {
      Json v = to_json(s.optimal_vertices[i]);
      Json gens = Json::array();
      for (const auto& g : s.certificate[i].generators) gens.push_back(to_json(VectorView(g)));
      v["normal_cone"] = std::move(gens);
      v["multipliers"] = to_json(VectorView(s.certificate[i].multipliers));
      vs.push_back(std::move(v));
    }
    o["vertices"] = std::move(vs);
    o["face"] = to_json(*s.argmin_face);
  }
  if (s.status == GLPStatus::UnboundedBelow) o["ray"] = to_json(VectorView(s.ray));
  if (!s.lineality_basis.empty()) {
    Json b = Json::array();
    for (const auto& v : s.lineality_basis) b.push_back(to_json(VectorView(v)));
    o["lineality_basis"] = std::move(b);
  }
  return o;
}

Json to_json(const StabilityCone& s) {
  Json o = Json::object();
  o["vertex"] = to_json(s.vertex);
  Json gens = Json::array();
  for (const auto& g : s.generators) gens.push_back(to_json(VectorView(g)));
  o["generators"] = std::move(gens);
  return o;
}

Json to_json(const StructureReport& s) {
  Json o = Json::object();
  o["implicit_equalities"] = to_json(s.implicit_equalities);
  o["dimension"] = s.dimension;
  Json b = Json::array();
  for (const auto& v : s.lineality_basis) b.push_back(to_json(VectorView(v)));
  o["lineality_basis"] = std::move(b);
  o["facets"] = s.facet_count;
  o["vertices"] = s.vertex_count;
  return o;
}

Json to_json(const Containment& c) {
  Json o = Json::object();
  o["contained"] = c.contained;
  o["witness"] = c.witness ? to_json(VectorView(*c.witness)) : Json(nullptr);
  o["violated"] = c.violated ? Json(*c.violated) : Json(nullptr);
  return o;
}

Json to_json(const WindowDistance& d) {
  Json o = Json::object();
  o["kind"] = std::string(to_string(d.kind));
  if (d.kind == WindowKind::Finite) o["value"] = d.value;
  return o;
}

Json to_json(const LimitReport& r) {
  Json o = Json::object();
  o["limit"] = to_json(r.limit);
  o["kept"] = to_json(r.kept);
  o["dropped_plus_infinity"] = to_json(r.dropped_plus_infinity);
  Json rows = Json::array();
  for (const auto& rl : r.rows) {
    Json x = Json::object();
    x["constraint"] = rl.constraint;
    x["provenance"] = rl.declared ? "declared" : "numeric";
    x["unit_normal"] = doubles(rl.unit_normal);
    x["unit_offset"] = rl.unit_offset;
    x["error"] = rl.error;
    x["rational"] = halfspace_json(rl.rational);
    rows.push_back(std::move(x));
  }
  o["rows"] = std::move(rows);
  Json ie = Json::array();
  for (const auto& p : r.ie_pairs) {
    Json x = Json::object();
    x["pair"] = Json::array({p.i, p.j});
    x["parallel"] = p.parallel;
    ie.push_back(std::move(x));
  }
  o["ie_pairs"] = std::move(ie);
  Json aux = Json::array();
  for (const auto& a : r.auxiliary) {
    Json x = Json::object();
    x["pair"] = Json::array({a.i, a.j});
    x["provenance"] = "numeric";
    x["v"] = doubles(a.v);
    x["u"] = a.u ? Json(*a.u) : Json("Divergent");
    x["error"] = a.error;
    x["samples_used"] = a.samples_used;
    x["rational"] = a.rational ? halfspace_json(*a.rational) : Json(nullptr);
    aux.push_back(std::move(x));
  }
  o["auxiliary"] = std::move(aux);
  Json w = Json::array();
  for (const auto& s : r.warnings) w.push_back(s);
  o["warnings"] = std::move(w);
  return o;
}

Json to_json(const ConvergenceReport& r) {
  Json o = Json::object();
  o["window_radius"] = r.window_radius;
  o["tolerance"] = r.tolerance;
  Json ds = Json::array();
  for (const auto& d : r.distances) {
    Json x = to_json(d.distance);
    x["index"] = d.index;
    x["parameter"] = d.parameter;
    ds.push_back(std::move(x));
  }
  o["distances"] = std::move(ds);
  o["converged"] = r.converged;
  Json vc = Json::array();
  for (const auto& c : r.vertex_count_check) {
    Json x = Json::object();
    x["index"] = c.index;
    x["sample"] = c.sample;
    x["limit"] = c.limit;
    vc.push_back(std::move(x));
  }
  o["vertex_count_check"] = std::move(vc);
  o["hypotheses_checked"] = "sampled indices only";
  return o;
}

Json to_json(const TrackReport& r) {
  Json o = Json::object();
  Json tracks = Json::array();
  for (const auto& t : r.tracks) {
    Json x = Json::object();
    x["limit_vertex"] = to_json(VectorView(t.limit_vertex));
    Json pts = Json::array();
    for (const auto& p : t.points) {
      Json q = Json::object();
      q["vertex"] = p.vertex ? to_json(VectorView(*p.vertex)) : Json(nullptr);
      q["distance"] = p.vertex ? Json(p.distance) : Json(nullptr);
      pts.push_back(std::move(q));
    }
    x["points"] = std::move(pts);
    x["converged"] = t.converged;
    tracks.push_back(std::move(x));
  }
  o["tracks"] = std::move(tracks);
  Json esc = Json::array();
  for (const auto& per : r.escapees) {
    Json list = Json::array();
    for (const auto& e : per) {
      Json q = Json::object();
      q["vertex"] = to_json(VectorView(e.vertex));
      q["norm"] = e.norm;
      list.push_back(std::move(q));
    }
    esc.push_back(std::move(list));
  }
  o["escapees"] = std::move(esc);
  return o;
}

Json to_json(const ConeMetrics& m) {
  Json o = Json::object();
  o["limit_vertex"] = to_json(VectorView(m.limit_vertex));
  Json t = Json::array(), n = Json::array();
  for (const auto& d : m.tangent) t.push_back(to_json(d));
  for (const auto& d : m.normal) n.push_back(to_json(d));
  o["tangent"] = std::move(t);
  o["normal"] = std::move(n);
  o["tangent_converged"] = m.tangent_converged;
  o["normal_converged"] = m.normal_converged;
  return o;
}

Json to_json(const ArgmaxReport& r) {
  Json o = Json::object();
  o["sense"] = std::string(sense_name(r.sense));
  o["values"] = rationals(r.values);
  o["limit_value"] = r.limit_value ? to_json(*r.limit_value) : Json(nullptr);
  o["limit_cost"] = to_json(VectorView(r.limit_cost));
  o["limit_cost_provenance"] = r.limit_cost_declared ? "declared" : "numeric";
  o["window_radius"] = r.window_radius;
  Json fd = Json::array();
  for (const auto& d : r.face_distances) fd.push_back(to_json(d));
  o["face_distances"] = std::move(fd);
  Json c = Json::object();
  c["compact"] = r.conditions.compact;
  c["vertex_count_stable"] = r.conditions.vertex_count_stable;
  c["max_converges"] = r.conditions.max_converges;
  o["conditions"] = std::move(c);
  o["converged"] = r.converged;
  return o;
}

Json to_json(const BoundaryReport& r) {
  Json o = Json::object();
  o["window_radius"] = r.window_radius;
  Json fs = Json::array();
  for (const auto& f : r.facets) {
    Json x = Json::object();
    x["limit_row"] = f.limit_row;
    x["constraint"] = f.constraint ? Json(*f.constraint) : Json(nullptr);
    fs.push_back(std::move(x));
  }
  o["facets"] = std::move(fs);
  Json m = Json::array();
  for (const auto& d : r.metric) m.push_back(to_json(d));
  o["metric"] = std::move(m);
  o["converged"] = r.converged;
  return o;
}

void write_text(std::ostream& out, const Json& j) { text_walk(out, j, ""); }

}  // namespace polycone::io
