#include "gridups/tcomplex.hpp"

#include <algorithm>
#include <map>

#include "gridups/errors.hpp"
#include "json.hpp"

namespace gridups {

namespace {

// Calls visit(target_rank, data) for every empty rectangle out of x.
template <typename Visit>
void for_each_empty_rectangle(const GridDiagram& d, const GridState& x, Visit&& visit) {
  const int n = d.size();
  GridState y = x;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::swap(y.sigma[a], y.sigma[b]);
      const std::uint32_t target = state_rank(y.sigma);
      std::swap(y.sigma[a], y.sigma[b]);
      for (const Rectangle& r : {Rectangle{a, b, x.sigma[a], x.sigma[b]},
                                 Rectangle{b, a, x.sigma[b], x.sigma[a]}}) {
        RectangleData data = rectangle_data(d, x, r);
        if (data.interior_points == 0) visit(target, data);
      }
    }
  }
}

}  // namespace

std::size_t TComplex::nonzero_entries() const {
  std::size_t total = 0;
  for (const auto& col : columns) total += col.size();
  return total;
}

TComplex build_t_complex(const GridDiagram& d, const RationalT& t, const StateGuard& guard) {
  if (t.degenerate()) {
    throw DomainError("t = " + t.str() + " is degenerate; Upsilon vanishes at 0 and 2");
  }
  if (component_count(d) != 1) throw DomainError("diagram is a link, not a knot");
  check_guard(d.size(), guard);

  const std::uint32_t wx = static_cast<std::uint32_t>(t.x_weight());
  const std::uint32_t wo = static_cast<std::uint32_t>(t.o_weight());
  TComplex c;
  c.t = t;
  for_each_state(d, guard, [&](const GridState& x) {
    const auto index = static_cast<std::uint32_t>(c.generators.size());
    c.generators.push_back({index, gradings(d, x).gr_scaled(t.p(), t.q())});
    std::map<std::uint32_t, MonomialPoly> column;
    for_each_empty_rectangle(d, x, [&](std::uint32_t target, const RectangleData& data) {
      column[target].toggle(wx * static_cast<std::uint32_t>(data.x_count) +
                            wo * static_cast<std::uint32_t>(data.o_count));
    });
    auto& out = c.columns.emplace_back();
    for (auto& [target, poly] : column) {
      if (!poly.is_zero()) out.push_back({target, std::move(poly)});
    }
  });
  return c;
}

FullyBlockedComplex build_fully_blocked(const GridDiagram& d, const StateGuard& guard) {
  check_guard(d.size(), guard);
  FullyBlockedComplex c;
  for_each_state(d, guard, [&](const GridState& x) {
    StateGradings g = gradings(d, x);
    c.gradings.push_back({g.maslov_o, g.alexander_x2});
    std::map<std::uint32_t, int> parity;
    for_each_empty_rectangle(d, x, [&](std::uint32_t target, const RectangleData& data) {
      if (data.x_count == 0 && data.o_count == 0) parity[target] ^= 1;
    });
    auto& out = c.columns.emplace_back();
    for (auto [target, bit] : parity) {
      if (bit) out.push_back(target);
    }
  });
  return c;
}

bool check_boundary_squared(const TComplex& c) {
  for (const auto& col : c.columns) {
    std::map<std::uint32_t, MonomialPoly> sq;
    for (const ComplexEntry& e : col) {
      for (const ComplexEntry& f : c.columns[e.target]) sq[f.target] += e.coeff * f.coeff;
    }
    for (const auto& [target, poly] : sq) {
      if (!poly.is_zero()) return false;
    }
  }
  return true;
}

bool check_boundary_squared(const FullyBlockedComplex& c) {
  for (const auto& col : c.columns) {
    std::map<std::uint32_t, int> sq;
    for (std::uint32_t y : col) {
      for (std::uint32_t z : c.columns[y]) sq[z] ^= 1;
    }
    for (const auto& [target, bit] : sq) {
      if (bit) return false;
    }
  }
  return true;
}

bool check_degree_homogeneity(const TComplex& c) {
  for (std::size_t x = 0; x < c.columns.size(); ++x) {
    for (const ComplexEntry& e : c.columns[x]) {
      const std::int64_t drop = c.generators[x].grading - c.generators[e.target].grading;
      for (std::uint32_t exp : e.coeff.exponents()) {
        if (drop + static_cast<std::int64_t>(exp) != c.t.q()) return false;
      }
    }
  }
  return true;
}

std::string dump_json(const TComplex& c) {
  nlohmann::ordered_json j;
  j["t"] = c.t.str();
  auto gens = nlohmann::ordered_json::array();
  for (const ComplexGenerator& g : c.generators) gens.push_back({g.state, g.grading});
  j["generators"] = std::move(gens);
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < c.columns.size(); ++x) {
    for (const ComplexEntry& e : c.columns[x]) {
      entries.push_back({x, e.target, e.coeff.exponents()});
    }
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

}  // namespace gridups
