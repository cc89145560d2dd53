#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace mstu {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", "p" and finite decimals such as "-5.75".
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

double to_double(const Rational& r);

Rational floor(const Rational& r);
Rational ceil(const Rational& r);

}  // namespace mstu
