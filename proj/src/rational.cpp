#include "polycone/rational.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polycone/error.hpp"

namespace polycone {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InfeasiblePoint: return "InfeasiblePoint";
    case ErrorCode::EmptyPolyhedron: return "EmptyPolyhedron";
    case ErrorCode::NoVertices: return "NoVertices";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::NotAttained: return "NotAttained";
    case ErrorCode::NoVertexPath: return "NoVertexPath";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::ParallelPair: return "ParallelPair";
    case ErrorCode::OffsetDiverges: return "OffsetDiverges";
    case ErrorCode::OffsetOscillates: return "OffsetOscillates";
    case ErrorCode::BadWindow: return "BadWindow";
    case ErrorCode::TrackNotConverged: return "TrackNotConverged";
    case ErrorCode::MaxNotAttained: return "MaxNotAttained";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

[[noreturn]] void bad_token(std::string_view token) {
  throw Error(ErrorCode::ParseError,
              "malformed rational '" + std::string(token) + "'");
}

}  // namespace

Rational parse_rational(std::string_view token) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) bad_token(token);
  const Integer p{std::string(num)};
  const Integer q{std::string(den)};
  if (q == 0) bad_token(token);
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational from_double(double x) {
  if (!std::isfinite(x))
    throw Error(ErrorCode::InvalidArgument, "non-finite value cannot be made exact");
  return Rational(x);
}

Rational rationalize(double x, double tol, std::int64_t max_denominator) {
  const Rational target = from_double(x);
  const Rational tolerance = from_double(std::max(tol, 0.0));
  const Integer cap(max_denominator);
  // Convergents h/k from the recurrence h_n = a_n h_{n-1} + h_{n-2}.
  Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  Rational rest = target;
  Rational best;
  bool have_best = false;
  for (int iter = 0; iter < 128; ++iter) {
    Integer a = numerator(rest) / denominator(rest);
    if (numerator(rest) < 0 && a * denominator(rest) != numerator(rest)) a -= 1;
    const Integer h = a * h_prev + h_prev2;
    const Integer k = a * k_prev + k_prev2;
    if (k > cap) break;
    best = Rational(h, k);
    have_best = true;
    if (abs(best - target) <= tolerance) break;
    const Rational frac = rest - Rational(a);
    if (frac == 0) break;
    rest = 1 / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  if (!have_best) return Rational(Integer(0));
  return best;
}

Rational dot(VectorView a, VectorView b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(VectorView v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Rational max_abs(VectorView v) {
  Rational m = 0;
  for (const auto& x : v)
    if (abs(x) > m) m = abs(x);
  return m;
}

std::vector<double> to_double(VectorView v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

Vector parse_vector(std::string_view csv) {
  Vector out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto end = comma == std::string_view::npos ? csv.size() : comma;
    out.push_back(parse_rational(csv.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(VectorView v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << to_string(v[i]);
  }
  os << ')';
  return os.str();
}

Vector linf_normalized(VectorView v) {
  const Rational m = max_abs(v);
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "cannot normalize the zero vector");
  Vector out(v.begin(), v.end());
  for (auto& x : out) x /= m;
  return out;
}

bool same_ray(VectorView u, VectorView v) {
  if (u.size() != v.size() || is_zero(u) || is_zero(v)) return false;
  return linf_normalized(u) == linf_normalized(v);
}

}  // namespace polycone
