#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace ivfg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts nonnegative decimal literals ("0.35", "2") and fractions ("10/3").
// Returns nothing on any malformed input; range checks are the caller's job.
std::optional<Rational> parse_rational(std::string_view text);

// Shortest exact rendering: a decimal when the reduced denominator is of the
// form 2^a * 5^b, otherwise "p/q".
std::string format_rational(const Rational& value);

} // namespace ivfg
