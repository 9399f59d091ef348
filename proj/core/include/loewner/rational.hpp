#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "loewner/errors.hpp"

namespace loewner {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "a/b" or "a" (integers of arbitrary size) exactly.
Rational parse_rational(const std::string& text);

// "num/den" (or just "num" when den == 1).
std::string rational_to_string(const Rational& r);

// Exact square root when r is a perfect square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

double to_double(const Rational& r);

}  // namespace loewner
