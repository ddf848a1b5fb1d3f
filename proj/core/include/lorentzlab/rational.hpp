#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace lorentzlab {

// Exact rational scalar used wherever the math is exact by construction:
// intertwiner eigenvalue products, blow-up class arithmetic, point labels.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

// Parses "p", "-p/q", or a plain decimal like "0.75" into an exact rational.
std::optional<Rational> parse_rational(const std::string& text);

std::string to_string(const Rational& r);

}  // namespace lorentzlab
