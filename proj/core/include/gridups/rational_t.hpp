#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "gridups/rational.hpp"

namespace gridups {

/// A sample point t = p/q in [0, 2], stored in lowest terms.
///
/// All t-dependent quantities are scaled by q so that the coefficient ring
/// becomes polynomials in u = U^{1/q}: U^t = u^p and U^{2-t} = u^{2q-p}.
class RationalT {
 public:
  RationalT(std::int64_t p, std::int64_t q);
  explicit RationalT(const Rational& t) : RationalT(t.numerator(), t.denominator()) {}

  static RationalT parse(std::string_view text);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  // Exponent of U^t and U^{2-t} in units of u.
  std::int64_t x_weight() const { return p_; }
  std::int64_t o_weight() const { return 2 * q_ - p_; }

  bool degenerate() const { return p_ == 0 || p_ == 2 * q_; }

  // 2 - t
  RationalT reflected() const { return RationalT(2 * q_ - p_, q_); }

  Rational value() const { return Rational(p_, q_); }
  std::string str() const;

  friend bool operator==(const RationalT&, const RationalT&) = default;
  friend std::strong_ordering operator<=>(const RationalT& a, const RationalT& b) {
    return a.p_ * b.q_ <=> b.p_ * a.q_;
  }

 private:
  std::int64_t p_;
  std::int64_t q_;
};

}  // namespace gridups
