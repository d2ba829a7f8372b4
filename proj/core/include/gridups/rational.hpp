#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace gridups {

// Compare against Rational operands only: mixing in a plain int recurses
// through the C++20 rewritten comparison candidates in this Boost version.
using Rational = boost::rational<std::int64_t>;

// Always "p/q", including integers ("0/1", "-1/1").
std::string to_string(const Rational& r);

// Accepts "p/q" or a bare integer. Throws DomainError.
Rational parse_rational(std::string_view text);

}  // namespace gridups
