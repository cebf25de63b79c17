#include "polycone/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "polycone/error.hpp"
#include "polycone/geometry.hpp"
#include "polycone/io.hpp"
#include "polycone/kuratowski.hpp"
#include "polycone/optimality.hpp"

namespace polycone::cli {

namespace {

using io::Json;

struct Settings {
  std::string format = "json";
  double tol = 1e-6;
  std::optional<double> window;
  std::uint64_t seed = 42;
  std::int64_t max_denominator = 1000000;
  double eps_limit = 1e-9;

  std::vector<std::string> files;
  std::string cost;
  std::string sense = "min";
  std::string point;
  std::string candidate;
  std::string limit;
};

struct Outcome {
  Json report;
  int code = 0;
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::TooFewSamples:
      return 1;
    default:
      return 2;
  }
}

Sense sense_of(const std::string& s) {
  if (s == "min") return Sense::Minimize;
  if (s == "max") return Sense::Maximize;
  throw Error(ErrorCode::ParseError, "sense must be 'min' or 'max', got '" + s + "'");
}

DiagnosticOptions diagnostics(const Settings& s) {
  DiagnosticOptions d;
  d.tolerance = s.tol;
  d.window = s.window;
  d.seed = s.seed;
  d.limit = LimitOptions{s.eps_limit, s.max_denominator};
  return d;
}

std::vector<Polyhedron> pieces_of(const Json& j) {
  if (io::is_union(j)) return io::union_from(j);
  return {io::polyhedron_from(j)};
}

Polyhedron single(const std::string& path) { return io::polyhedron_from(io::read_file(path)); }

Vector point_of(const std::string& csv, std::size_t n) {
  Vector v = parse_vector(csv);
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "point length differs from n");
  return v;
}

// True when `a` beats `b` in the caller's sense.
bool better(const Rational& a, const Rational& b, Sense s) { return s == Sense::Minimize ? a < b : a > b; }

struct Aggregate {
  std::string status = "Infeasible";
  std::optional<std::size_t> piece;
  std::optional<GLPSolution> solution;
};

Aggregate aggregate(const std::vector<GLPSolution>& sols, Sense sense) {
  Aggregate agg;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& s = sols[i];
    if (s.status == GLPStatus::UnboundedBelow) {
      agg.status = "UnboundedBelow";
      agg.piece = i;
      agg.solution = s;
      return agg;
    }
  }
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& s = sols[i];
    if (s.status == GLPStatus::NoVertexPath) agg.status = "NoVertexPath";
    if (s.status != GLPStatus::Attained) continue;
    if (!agg.solution || better(s.value, agg.solution->value, sense)) {
      agg.piece = i;
      agg.solution = s;
    }
  }
  if (agg.solution && agg.status != "NoVertexPath") agg.status = "Attained";
  return agg;
}

Json best_json(const Aggregate& agg) {
  Json b = Json::object();
  b["status"] = agg.status;
  b["piece"] = agg.piece ? Json(*agg.piece) : Json(nullptr);
  if (agg.solution && agg.solution->status == GLPStatus::Attained) {
    b["value"] = io::to_json(agg.solution->value);
    b["vertex"] = io::to_json(VectorView(agg.solution->optimal_vertices.front().point));
  }
  if (agg.solution && agg.solution->status == GLPStatus::UnboundedBelow)
    b["ray"] = io::to_json(VectorView(agg.solution->ray));
  return b;
}

Outcome cmd_vertices(const Settings& s) {
  const auto p = single(s.files.at(0));
  Json vs = Json::array();
  for (const auto& v : enumerate_vertices(p)) vs.push_back(io::to_json(v));
  Json o = Json::object();
  o["vertices"] = std::move(vs);
  return {std::move(o), 0};
}

Json cones_at(const Polyhedron& p, VectorView x) {
  Json c = Json::object();
  c["point"] = io::to_json(x);
  c["active"] = io::to_json(active_set(p, x));
  c["tangent"] = io::to_json(tangent_cone(p, x));
  c["normal"] = io::to_json(normal_cone(p, x));
  return c;
}

Outcome cmd_cones(const Settings& s) {
  const auto p = single(s.files.at(0));
  Json o = Json::object();
  if (!s.point.empty()) {
    o["cones"] = Json::array({cones_at(p, point_of(s.point, p.dim()))});
  } else {
    Json cs = Json::array();
    for (const auto& v : enumerate_vertices(p)) cs.push_back(cones_at(p, v.point));
    o["cones"] = std::move(cs);
  }
  return {std::move(o), 0};
}

Outcome cmd_solve(const Settings& s) {
  const Json in = io::read_file(s.files.at(0));
  const auto pieces = pieces_of(in);
  if (s.cost.empty()) throw Error(ErrorCode::InvalidArgument, "solve needs --cost");
  const Sense sense = sense_of(s.sense);
  const Vector c = point_of(s.cost, pieces.front().dim());
  std::vector<GLPSolution> sols;
  for (const auto& p : pieces) sols.push_back(solve_glp(p, c, sense));
  if (!io::is_union(in)) {
    const int code = sols.front().status == GLPStatus::Infeasible ? 2 : 0;
    return {io::to_json(sols.front()), code};
  }
  Json o = Json::object();
  Json ps = Json::array();
  for (std::size_t i = 0; i < sols.size(); ++i) {
    Json x = io::to_json(sols[i]);
    x["piece"] = i;
    ps.push_back(std::move(x));
  }
  o["pieces"] = std::move(ps);
  const auto agg = aggregate(sols, sense);
  o["best"] = best_json(agg);
  return {std::move(o), agg.status == "Infeasible" ? 2 : 0};
}

Outcome cmd_sensitivity(const Settings& s) {
  const Json in = io::read_file(s.files.at(0));
  const auto pieces = pieces_of(in);
  const std::size_t n = pieces.front().dim();
  Json ps = Json::array();
  if (!s.point.empty()) {
    const Vector x = point_of(s.point, n);
    bool any = false;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      Json r = Json::object();
      r["piece"] = i;
      try {
        r["stability"] = io::to_json(stability_cone(pieces[i], x));
        any = true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotAVertex) throw;
        r["stability"] = nullptr;
      }
      ps.push_back(std::move(r));
    }
    if (!any) throw Error(ErrorCode::NotAVertex, to_string(x) + " is not a vertex of any piece");
    Json o = Json::object();
    o["pieces"] = std::move(ps);
    return {std::move(o), 0};
  }
  if (s.cost.empty()) throw Error(ErrorCode::InvalidArgument, "sensitivity needs --vertex or --cost");
  const Sense sense = sense_of(s.sense);
  const Vector c = point_of(s.cost, n);
  std::vector<GLPSolution> sols;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    sols.push_back(solve_glp(pieces[i], c, sense));
    Json r = Json::object();
    r["piece"] = i;
    r["status"] = std::string(to_string(sols.back().status));
    Json cones = Json::array();
    for (const auto& v : sols.back().optimal_vertices)
      cones.push_back(io::to_json(stability_cone(pieces[i], v.point)));
    r["stability"] = std::move(cones);
    ps.push_back(std::move(r));
  }
  Json o = Json::object();
  o["pieces"] = std::move(ps);
  const auto agg = aggregate(sols, sense);
  o["best"] = best_json(agg);
  return {std::move(o), agg.status == "Infeasible" ? 2 : 0};
}

Outcome cmd_bounded(const Settings& s) {
  const auto p = single(s.files.at(0));
  const auto rec = recession_and_lineality(p);
  Json o = Json::object();
  o["bounded"] = is_bounded(p);
  o["recession"] = io::to_json(rec.recession);
  Json b = Json::array();
  for (const auto& v : rec.lineality_basis) b.push_back(io::to_json(VectorView(v)));
  o["lineality_basis"] = std::move(b);
  return {std::move(o), 0};
}

Outcome cmd_structure(const Settings& s) {
  const auto p = single(s.files.at(0));
  Json o = io::to_json(structure(p));
  o["irredundant"] = io::to_json(remove_redundant(p));
  return {std::move(o), 0};
}

Outcome cmd_contains(const Settings& s) {
  if (s.files.size() != 2) throw Error(ErrorCode::InvalidArgument, "contains needs OUTER and INNER files");
  return {io::to_json(poly_contains(single(s.files[0]), single(s.files[1]))), 0};
}

PolyhedronTrajectory trajectory(const Settings& s) {
  return io::trajectory_from(io::read_file(s.files.at(0)), s.max_denominator);
}

Polyhedron limit_of(const Settings& s, const PolyhedronTrajectory& t) {
  if (!s.limit.empty()) return single(s.limit);
  return construct_limit(t, LimitOptions{s.eps_limit, s.max_denominator}).limit;
}

Outcome cmd_limit(const Settings& s) {
  const auto t = trajectory(s);
  const auto rep = construct_limit(t, LimitOptions{s.eps_limit, s.max_denominator});
  Json o = io::to_json(rep);
  const Polyhedron candidate = s.candidate.empty() ? rep.limit : single(s.candidate);
  o["convergence"] = io::to_json(verify_convergence(t, candidate, diagnostics(s)));
  return {std::move(o), 0};
}

Outcome cmd_track(const Settings& s) {
  const auto t = trajectory(s);
  const auto limit = limit_of(s, t);
  const auto d = diagnostics(s);
  const auto tr = track_vertices(t, limit, d);
  Json o = io::to_json(tr);
  Json cones = Json::array();
  for (const auto& track : tr.tracks)
    if (track.converged) cones.push_back(io::to_json(cone_convergence(t, limit, track, d)));
  o["cones"] = std::move(cones);
  return {std::move(o), 0};
}

Outcome cmd_argmax(const Settings& s) {
  const auto t = trajectory(s);
  return {io::to_json(argmax_convergence(t, limit_of(s, t), diagnostics(s))), 0};
}

Outcome cmd_boundary(const Settings& s) {
  const auto t = trajectory(s);
  return {io::to_json(boundary_convergence(t, limit_of(s, t), diagnostics(s))), 0};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact polyhedral geometry, general LP and limits of polyhedron families", "polycone"};
  app.require_subcommand(1, 1);
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tol", s.tol, "Tolerance for convergence verdicts");
  app.add_option("--window", s.window, "Window radius R");
  app.add_option("--seed", s.seed, "Seed for the sampled directions");
  app.add_option("--max-denominator", s.max_denominator, "Denominator cap for rounding")->check(CLI::PositiveNumber);
  app.add_option("--eps-limit", s.eps_limit, "Tolerance of the limit detection")->check(CLI::PositiveNumber);

  using Handler = Outcome (*)(const Settings&);
  std::vector<std::pair<CLI::App*, Handler>> verbs;
  auto verb = [&](const char* name, const char* help, Handler h, const char* files = "FILE") {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option(files, s.files, "Input file(s)")->required();
    verbs.emplace_back(sub, h);
    return sub;
  };
  verb("vertices", "Enumerate vertices", cmd_vertices);
  verb("cones", "Tangent and normal cones at vertices", cmd_cones)->add_option("--point", s.point, "Point p1,p2,...");
  {
    auto* sub = verb("solve", "Solve the general LP", cmd_solve);
    sub->add_option("--cost", s.cost, "Cost c1,c2,...")->required();
    sub->add_option("--sense", s.sense, "min or max");
  }
  {
    auto* sub = verb("sensitivity", "Stability cones of optimal vertices", cmd_sensitivity);
    sub->add_option("--vertex", s.point, "Vertex v1,v2,...");
    sub->add_option("--cost", s.cost, "Cost c1,c2,...");
    sub->add_option("--sense", s.sense, "min or max");
  }
  verb("bounded", "Boundedness, recession cone and lineality", cmd_bounded);
  verb("structure", "Implicit equalities, dimension, facets", cmd_structure);
  verb("contains", "Decide INNER inside OUTER", cmd_contains, "FILES")->get_option("FILES")->expected(2);
  verb("limit", "Construct the limit of a trajectory", cmd_limit)
      ->add_option("--candidate", s.candidate, "Check convergence to this polyhedron instead");
  verb("track", "Vertex tracks and cone convergence", cmd_track)->add_option("--limit", s.limit, "Limit polyhedron");
  verb("argmax", "Convergence of optimal faces", cmd_argmax)->add_option("--limit", s.limit, "Limit polyhedron");
  verb("boundary", "Convergence of facets", cmd_boundary)->add_option("--limit", s.limit, "Limit polyhedron");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  for (const auto& [sub, handler] : verbs) {
    if (!sub->parsed()) continue;
    try {
      const Outcome res = handler(s);
      if (s.format == "text")
        io::write_text(out, res.report);
      else
        out << res.report.dump(2) << "\n";
      return res.code;
    } catch (const Error& e) {
      err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
      return exit_code(e.code());
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 1;
}

}  // namespace polycone::cli
