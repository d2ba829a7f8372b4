#include "gridups/monomial_poly.hpp"

#include <algorithm>
#include <iterator>

#include "gridups/errors.hpp"

namespace gridups {

namespace {

// Sorts and cancels equal exponents in pairs.
std::vector<std::uint32_t> reduce_mod2(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(v[i]);
    i = j;
  }
  return out;
}

}  // namespace

MonomialPoly::MonomialPoly(std::initializer_list<std::uint32_t> exponents)
    : exps_(reduce_mod2(std::vector<std::uint32_t>(exponents))) {}

MonomialPoly MonomialPoly::monomial(std::uint32_t e) {
  MonomialPoly p;
  p.exps_.push_back(e);
  return p;
}

MonomialPoly MonomialPoly::from_exponents(std::vector<std::uint32_t> exponents) {
  MonomialPoly p;
  p.exps_ = reduce_mod2(std::move(exponents));
  return p;
}

void MonomialPoly::toggle(std::uint32_t e) {
  auto it = std::lower_bound(exps_.begin(), exps_.end(), e);
  if (it != exps_.end() && *it == e) {
    exps_.erase(it);
  } else {
    exps_.insert(it, e);
  }
}

MonomialPoly& MonomialPoly::operator+=(const MonomialPoly& other) {
  if (other.exps_.empty()) return *this;
  if (other.exps_.size() == 1) {
    toggle(other.exps_.front());
    return *this;
  }
  std::vector<std::uint32_t> out;
  out.reserve(exps_.size() + other.exps_.size());
  std::set_symmetric_difference(exps_.begin(), exps_.end(), other.exps_.begin(),
                                other.exps_.end(), std::back_inserter(out));
  exps_ = std::move(out);
  return *this;
}

MonomialPoly MonomialPoly::multiply(const MonomialPoly& other, std::uint32_t limit) const {
  std::vector<std::uint32_t> prod;
  prod.reserve(exps_.size() * other.exps_.size());
  for (std::uint32_t a : exps_) {
    for (std::uint32_t b : other.exps_) {
      std::uint64_t e = static_cast<std::uint64_t>(a) + b;
      if (e < limit) prod.push_back(static_cast<std::uint32_t>(e));
    }
  }
  MonomialPoly p;
  p.exps_ = reduce_mod2(std::move(prod));
  return p;
}

MonomialPoly MonomialPoly::truncated(std::uint32_t limit) const {
  MonomialPoly p;
  auto end = std::lower_bound(exps_.begin(), exps_.end(), limit);
  p.exps_.assign(exps_.begin(), end);
  return p;
}

MonomialPoly MonomialPoly::shifted(std::uint32_t k, std::uint32_t limit) const {
  MonomialPoly p;
  for (std::uint32_t e : exps_) {
    std::uint64_t s = static_cast<std::uint64_t>(e) + k;
    if (s < limit) p.exps_.push_back(static_cast<std::uint32_t>(s));
  }
  return p;
}

MonomialPoly MonomialPoly::inverse(std::uint32_t limit) const {
  if (!is_unit()) throw DomainError("inverse of a non-unit power series");
  if (exps_.size() == 1) return monomial(0).truncated(limit);
  if (limit == kNoTruncation) throw DomainError("series inverse needs a finite precision");
  // h * f = 1: h_k = sum_{i >= 1, f_i = 1} h_{k-i}.
  std::vector<char> h(limit, 0);
  if (limit > 0) h[0] = 1;
  for (std::uint32_t k = 1; k < limit; ++k) {
    char bit = 0;
    for (std::size_t idx = 1; idx < exps_.size() && exps_[idx] <= k; ++idx) {
      bit ^= h[k - exps_[idx]];
    }
    h[k] = bit;
  }
  MonomialPoly p;
  for (std::uint32_t k = 0; k < limit; ++k) {
    if (h[k]) p.exps_.push_back(k);
  }
  return p;
}

MonomialPoly MonomialPoly::divide(const MonomialPoly& divisor, std::uint32_t limit) const {
  if (divisor.is_zero()) throw DomainError("division by zero series");
  if (is_zero()) return {};
  const std::uint32_t v = divisor.valuation();
  if (valuation() < v) throw DomainError("quotient is not a power series");
  MonomialPoly num;
  num.exps_.reserve(exps_.size());
  for (std::uint32_t e : exps_) num.exps_.push_back(e - v);
  num = num.truncated(limit);
  if (divisor.is_monomial()) return num;
  MonomialPoly unit;
  for (std::uint32_t e : divisor.exps_) unit.exps_.push_back(e - v);
  return num.multiply(unit.inverse(limit), limit);
}

}  // namespace gridups
