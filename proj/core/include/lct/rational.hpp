#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace lct {

/// Exact rational scalar. Stored in lowest terms with positive denominator;
/// there is no floating point anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p" or "p/q" (q > 0 after normalization). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Renders "p" for integers, "p/q" otherwise; parse_rational inverts this
/// bit-exactly.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

}  // namespace lct
