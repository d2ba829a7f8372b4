#pragma once

#include <map>
#include <vector>

#include "gridups/states.hpp"

namespace oracle {

// Counts by walking every unit square and lattice point the rectangle covers.
gridups::RectangleData count_cells(const gridups::GridDiagram& d, const gridups::GridState& x,
                                   const gridups::Rectangle& r);

// Rectangles from x to y found by trying all four corner assignments of the
// moved points and keeping those whose lower-left corner lies on x.
std::vector<gridups::Rectangle> brute_rectangles(int n, const gridups::GridState& x,
                                                 const gridups::GridState& y);

struct Maslov {
  std::vector<int> o;  // indexed by state rank
  std::vector<int> x;
};

// Maslov gradings propagated from the anchor states at the south-west
// corners of the O's (resp. X's), both of grading 1 - n, across
// transpositions using only the rectangle relation.
Maslov propagate_maslov(const gridups::GridDiagram& d);

}  // namespace oracle
