#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace polycone {

/// Exact rational; GMP keeps it in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vector = std::vector<Rational>;
using VectorView = std::span<const Rational>;

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalization). Whitespace is
/// not accepted. Throws Error(ParseError) echoing the offending token.
Rational parse_rational(std::string_view token);

/// Canonical text: "p" for integers, otherwise "p/q".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Exact value of a finite binary64.
Rational from_double(double x);

/// Continued-fraction rounding: the first convergent of `x` within `tol` of
/// it, or the last convergent whose denominator does not exceed
/// `max_denominator` when none is that close.
Rational rationalize(double x, double tol, std::int64_t max_denominator);

Rational dot(VectorView a, VectorView b);
bool is_zero(VectorView v);
Rational max_abs(VectorView v);
std::vector<double> to_double(VectorView v);
Vector parse_vector(std::string_view csv);
std::string to_string(VectorView v);

/// Positive multiple of `v` whose largest absolute coordinate is 1.
Vector linf_normalized(VectorView v);

/// True when u = t * v for some rational t > 0.
bool same_ray(VectorView u, VectorView v);

}  // namespace polycone
