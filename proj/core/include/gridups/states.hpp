#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gridups/grid.hpp"
#include "gridups/rational.hpp"

namespace gridups {

// Default cap on n!: 10! = 3628800.
inline constexpr std::uint64_t kDefaultStateGuard = 3628800;

struct StateGuard {
  std::uint64_t max_states = kDefaultStateGuard;
};

// n!, saturating at UINT64_MAX.
std::uint64_t state_count(int n);

// Throws GuardError when n! exceeds the cap.
void check_guard(int n, const StateGuard& guard);

/// A grid state: sigma[c] is the row of the point on vertical circle c.
/// Points sit at lattice corners, markings at square centres.
struct GridState {
  std::vector<int> sigma;

  friend bool operator==(const GridState&, const GridState&) = default;
};

// All n! states in lexicographic order of sigma.
std::vector<GridState> enumerate_states(const GridDiagram& d, const StateGuard& guard = {});

// Same enumeration without materialising the list.
void for_each_state(const GridDiagram& d, const StateGuard& guard,
                    const std::function<void(const GridState&)>& visit);

// Position of sigma in the lexicographic enumeration.
std::uint32_t state_rank(const std::vector<int>& sigma);

struct StateGradings {
  int maslov_o = 0;
  int maslov_x = 0;
  int alexander_x2 = 0;  // 2A; odd only for some links

  bool alexander_integral() const { return alexander_x2 % 2 == 0; }
  Rational alexander() const { return Rational(alexander_x2, 2); }

  // q*M_O - p*A at t = p/q. Throws DomainError if A is not an integer.
  std::int64_t gr_scaled(std::int64_t p, std::int64_t q) const;
};

StateGradings gradings(const GridDiagram& d, const GridState& s);

/// Toroidal rectangle spanning columns c1 -> c2 and rows r1 -> r2 eastward
/// and northward, wrapping mod n. Lower-left and upper-right corners belong
/// to the source state.
struct Rectangle {
  int c1, c2, r1, r2;

  int width(int n) const { return ((c2 - c1) % n + n) % n; }
  int height(int n) const { return ((r2 - r1) % n + n) % n; }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

// The two rectangles from x to y when they differ in exactly two columns,
// otherwise empty.
std::vector<Rectangle> connecting_rectangles(const GridState& x, const GridState& y);

struct RectangleData {
  int x_count = 0;
  int o_count = 0;
  int interior_points = 0;  // points of the source state strictly inside
};

RectangleData rectangle_data(const GridDiagram& d, const GridState& x, const Rectangle& r);

}  // namespace gridups
