#include "gridups/rational_t.hpp"

#include <numeric>

#include "gridups/errors.hpp"

namespace gridups {

RationalT::RationalT(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw DomainError("t needs a positive denominator");
  if (p < 0 || p > 2 * q) throw DomainError("t must lie in [0, 2]");
  std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

RationalT RationalT::parse(std::string_view text) { return RationalT(parse_rational(text)); }

std::string RationalT::str() const { return to_string(value()); }

}  // namespace gridups
