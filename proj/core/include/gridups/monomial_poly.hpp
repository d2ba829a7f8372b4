#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <vector>

namespace gridups {

// Exponent cut-off meaning "keep everything".
inline constexpr std::uint32_t kNoTruncation = std::numeric_limits<std::uint32_t>::max();

/// Polynomial over F2 in u, stored as its sorted set of exponents.
///
/// Addition is symmetric difference of exponent sets; multiplication is the
/// mod-2 Cauchy product. Operations taking a `limit` drop every exponent
/// >= limit, i.e. they compute modulo u^limit.
class MonomialPoly {
 public:
  MonomialPoly() = default;
  MonomialPoly(std::initializer_list<std::uint32_t> exponents);

  static MonomialPoly monomial(std::uint32_t e);
  static MonomialPoly from_exponents(std::vector<std::uint32_t> exponents);

  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  bool is_zero() const { return exps_.empty(); }
  bool is_monomial() const { return exps_.size() == 1; }
  // Constant term 1, i.e. invertible in F2[[u]].
  bool is_unit() const { return !exps_.empty() && exps_.front() == 0; }
  // Lowest exponent; undefined on zero.
  std::uint32_t valuation() const { return exps_.front(); }

  // Toggle a single monomial.
  void toggle(std::uint32_t e);

  MonomialPoly& operator+=(const MonomialPoly& other);
  friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }
  friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
    return a.multiply(b, kNoTruncation);
  }

  MonomialPoly multiply(const MonomialPoly& other, std::uint32_t limit) const;
  MonomialPoly truncated(std::uint32_t limit) const;
  // Multiply by u^k.
  MonomialPoly shifted(std::uint32_t k, std::uint32_t limit = kNoTruncation) const;

  // Power series inverse of a unit modulo u^limit. limit must be finite.
  MonomialPoly inverse(std::uint32_t limit) const;

  // this / divisor in F2[[u]] modulo u^limit; requires
  // valuation() >= divisor.valuation(). Exact when divisor is a monomial.
  MonomialPoly divide(const MonomialPoly& divisor, std::uint32_t limit) const;

  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

}  // namespace gridups
